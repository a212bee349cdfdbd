#include "su11/group.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace su11 {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kFourPi = 4.0 * std::numbers::pi;

// Reduces v into [lo, lo + period).
double wrap(double v, double lo, double period) {
    double r = std::fmod(v - lo, period);
    if (r < 0) r += period;
    if (r >= period) r -= period;
    return lo + r;
}

}  // namespace

GroupElement GroupElement::from_alpha_beta(cplx alpha, cplx beta, double det_tol) {
    const double defect = std::abs(std::norm(alpha) - std::norm(beta) - 1.0);
    if (!(defect <= det_tol)) {
        std::ostringstream os;
        os.precision(17);
        os << "| |alpha|^2 - |beta|^2 - 1 | = " << defect << " exceeds tolerance " << det_tol;
        throw DeterminantViolation(os.str());
    }
    return GroupElement(alpha, beta);
}

CartanCoords CartanCoords::normalized() const {
    // (2pi, 2pi) and (0, 4pi) both leave alpha and beta unchanged.
    CartanCoords c = *this;
    const double shifted = wrap(c.phi, 0.0, kTwoPi);
    c.psi += shifted - c.phi;
    c.phi = shifted;
    c.psi = wrap(c.psi, -kTwoPi, kFourPi);
    return c;
}

double CartanCoords::x() const { return x_coordinate(tau); }

double x_coordinate(double tau) {
    const double t = std::tanh(0.5 * tau);
    return 1.0 - 2.0 * t * t;
}

GroupElement from_cartan(const CartanCoords& c) {
    const double ch = std::cosh(0.5 * c.tau);
    const double sh = std::sinh(0.5 * c.tau);
    return GroupElement(std::polar(ch, 0.5 * (c.phi + c.psi)), std::polar(sh, 0.5 * (c.phi - c.psi)));
}

CartanCoords to_cartan(const GroupElement& g) {
    const double abs_beta = std::abs(g.beta());
    CartanCoords c;
    c.tau = 2.0 * std::asinh(abs_beta);
    const double sum = 2.0 * std::arg(g.alpha());  // phi + psi
    if (abs_beta == 0.0) {
        c.phi = 0.0;
        c.psi = wrap(sum, -kTwoPi, kFourPi);
        return c;
    }
    const double diff = 2.0 * std::arg(g.beta());  // phi - psi
    c.phi = 0.5 * (sum + diff);
    c.psi = 0.5 * (sum - diff);
    return c.normalized();
}

GroupElement multiply(const GroupElement& g1, const GroupElement& g2) {
    const cplx a = g1.alpha_ * g2.alpha_ + g1.beta_ * std::conj(g2.beta_);
    const cplx b = g1.alpha_ * g2.beta_ + g1.beta_ * std::conj(g2.alpha_);
    return GroupElement(a, b);
}

GroupElement inverse(const GroupElement& g) { return GroupElement(std::conj(g.alpha_), -g.beta_); }

GroupElement compact_element(double theta) { return from_cartan({0.0, theta, 0.0}); }

double haar_density(const CartanCoords& c) {
    return std::sinh(c.tau) / (8.0 * std::numbers::pi * std::numbers::pi);
}

DiskPoint disk_point(const GroupElement& g) { return {g.beta() / std::conj(g.alpha())}; }

}  // namespace su11
