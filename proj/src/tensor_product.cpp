#include "su11/tensor_product.hpp"

#include <cmath>
#include <numbers>

#include "su11/characters.hpp"

namespace su11 {

namespace {

void check_theta(double theta) {
    if (std::abs(std::sin(0.5 * theta)) <= 1e-12) throw SingularAngle("sin(theta/2) vanishes");
    if (!(theta > 0.0 && theta < 2.0 * std::numbers::pi)) throw UnsupportedClass("theta must lie in (0, 2pi)");
}

}  // namespace

Decomposition decompose(RepLabel eta1, RepLabel eta2, int n_max) {
    if (n_max < 0) throw InvalidParams("n_max must be non-negative");
    Decomposition d{eta1, eta2, {}, n_max};
    d.terms.reserve(static_cast<std::size_t>(n_max) + 1);
    const HalfInteger lowest = eta1.eta() + eta2.eta();
    for (int n = 0; n <= n_max; ++n) d.terms.push_back({RepLabel(lowest + HalfInteger::from_int(n)), 1});
    return d;
}

int multiplicity(RepLabel eta1, RepLabel eta2, RepLabel eta3) {
    const HalfInteger diff = eta3.eta() - eta1.eta() - eta2.eta();
    return diff.is_integer() && diff.twice() >= 0 ? 1 : 0;
}

cplx character_product(RepLabel eta1, RepLabel eta2, double theta) {
    check_theta(theta);
    const double s = std::sin(0.5 * theta);
    const double phase = 0.5 * static_cast<double>(2 - eta1.twice() - eta2.twice()) * theta;
    return -std::polar(1.0, phase) / (4.0 * s * s);
}

cplx abel_character_sum(RepLabel eta1, RepLabel eta2, double theta, double r, int n_max) {
    if (!(r > 0.0 && r < 1.0)) throw InvalidDamping("damping factor must lie in (0, 1)");
    check_theta(theta);
    const HalfInteger lowest = eta1.eta() + eta2.eta();
    cplx sum(0.0, 0.0);
    double weight = 1.0;
    for (int n = 0; n <= n_max; ++n) {
        sum += weight * character_compact(RepLabel(lowest + HalfInteger::from_int(n)), theta);
        weight *= r;
    }
    return sum;
}

cplx abel_character_sum_limit(RepLabel eta1, RepLabel eta2, double theta) {
    check_theta(theta);
    const RepLabel lowest(eta1.eta() + eta2.eta());
    return character_compact(lowest, theta) / (1.0 - std::polar(1.0, -theta));
}

double verify_expansion_identity(double theta) {
    check_theta(theta);
    const cplx rhs = cplx(0.0, 2.0) * std::polar(1.0, -0.5 * theta) / (1.0 - std::polar(1.0, -theta));
    return std::abs(1.0 / std::sin(0.5 * theta) - rhs);
}

}  // namespace su11
