#include "su11/characters.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "su11/rep_matrix.hpp"

#include "int_pow.hpp"

namespace su11 {

namespace {

constexpr double kSingularSin = 1e-12;

using detail::ipow;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void check_damping(double r) {
    if (!(r > 0.0 && r < 1.0)) throw InvalidDamping("damping factor must lie in (0, 1), got " + fmt(r));
}

void check_angle(double theta) {
    if (std::abs(std::sin(0.5 * theta)) <= kSingularSin)
        throw SingularAngle("sin(theta/2) vanishes at theta = " + fmt(theta));
}

}  // namespace

std::string_view to_string(Regime r) {
    switch (r) {
        case Regime::hyperbolic_abs_convergent: return "hyperbolic_abs_convergent";
        case Regime::elliptic_abel: return "elliptic_abel";
        case Regime::boundary: return "boundary";
    }
    return "unknown";
}

Regime classify(double re_alpha, double boundary_tol) {
    const double q = re_alpha * re_alpha - 1.0;
    if (std::abs(q) <= boundary_tol) return Regime::boundary;
    return q > 0 ? Regime::hyperbolic_abs_convergent : Regime::elliptic_abel;
}

CharacterValue character_from_re_alpha(RepLabel eta, double re_alpha, double boundary_tol) {
    const Regime regime = classify(re_alpha, boundary_tol);
    if (regime == Regime::boundary)
        throw BoundaryConjugacyClass("(Re alpha)^2 = 1 within tolerance (Re alpha = " + fmt(re_alpha) + ")");
    const std::int64_t power = 1 - eta.twice();
    const double q = re_alpha * re_alpha - 1.0;
    if (regime == Regime::hyperbolic_abs_convergent) {
        if (re_alpha < 0)
            throw UnsupportedClass("Re alpha < -1: square-root branch not determined (Re alpha = " + fmt(re_alpha) + ")");
        const double root = std::sqrt(q);
        const double v = 0.5 / root * std::pow(re_alpha + root, static_cast<double>(power));
        return {{v, 0.0}, regime};
    }
    const cplx root(0.0, std::sqrt(-q));
    return {0.5 / root * ipow(re_alpha + root, power), regime};
}

CharacterValue character(RepLabel eta, const GroupElement& g, double boundary_tol) {
    return character_from_re_alpha(eta, g.alpha().real(), boundary_tol);
}

CharacterValue character_cartan(RepLabel eta, double x, double phi, double psi, double boundary_tol) {
    if (!(x > -1.0 && x <= 1.0)) throw InvalidParams("x must lie in (-1, 1], got " + fmt(x));
    const double sigma = phi + psi;
    const double gap = std::cos(sigma) - x;
    // (Re alpha)^2 - 1 = (cos sigma - x) / (1 + x)
    const double q = gap / (1.0 + x);
    if (std::abs(q) <= boundary_tol)
        throw BoundaryConjugacyClass("cos(phi + psi) = x within tolerance");
    const double half_cos = std::sqrt(2.0) * std::cos(0.5 * sigma);
    const double scale = 0.5 * std::pow(1.0 + x, eta.value());
    const std::int64_t power = 1 - eta.twice();
    if (gap > 0) {
        if (half_cos < 0) throw UnsupportedClass("Re alpha < -1: square-root branch not determined");
        const double root = std::sqrt(gap);
        return {{scale / root * std::pow(half_cos + root, static_cast<double>(power)), 0.0},
                Regime::hyperbolic_abs_convergent};
    }
    const cplx root(0.0, std::sqrt(-gap));
    return {scale / root * ipow(half_cos + root, power), Regime::elliptic_abel};
}

cplx character_compact(RepLabel eta, double theta) {
    check_angle(theta);
    if (!(theta > 0.0 && theta < 2.0 * std::numbers::pi))
        throw UnsupportedClass("compact character is implemented for theta in (0, 2pi), got " + fmt(theta));
    const double phase = 0.5 * static_cast<double>(1 - eta.twice()) * theta;
    return std::polar(1.0, phase) / cplx(0.0, 2.0 * std::sin(0.5 * theta));
}

cplx trace_partial_sum(RepLabel eta, const GroupElement& g, int terms) {
    cplx sum(0.0, 0.0);
    for (int n = 0; n < terms; ++n) sum += matrix_element(eta, n, n, g);
    return sum;
}

cplx damped_trace(RepLabel eta, const GroupElement& g, double r, int terms) {
    check_damping(r);
    cplx sum(0.0, 0.0);
    double weight = 1.0;
    for (int n = 0; n < terms; ++n) {
        sum += weight * matrix_element(eta, n, n, g);
        weight *= r;
    }
    return sum;
}

cplx abel_trace(RepLabel eta, double theta, double r, int terms) {
    check_damping(r);
    check_angle(theta);
    const double log_r = std::log(r);
    cplx sum(0.0, 0.0);
    for (int n = 0; n < terms; ++n) {
        const double angle = -0.5 * static_cast<double>(eta.twice() + 2 * n) * theta;
        sum += std::polar(std::exp(n * log_r), angle);
    }
    return sum;
}

cplx abel_trace_limit(RepLabel eta, double theta) {
    check_angle(theta);
    return std::polar(1.0, -eta.value() * theta) / (1.0 - std::polar(1.0, -theta));
}

int abel_terms_for(double r) {
    check_damping(r);
    return static_cast<int>(std::ceil(std::log(1e-16) / std::log(r))) + 1;
}

}  // namespace su11
