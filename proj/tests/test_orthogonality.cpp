#include <doctest.h>

#include <cmath>

#include "su11/orthogonality.hpp"
#include "su11/special_functions.hpp"

using namespace su11;

namespace {

OrthoRequest req(std::int64_t t1, std::int64_t t2, int m, int mp, int n, int np) {
    return {RepLabel::from_twice(t1), RepLabel::from_twice(t2), m, mp, n, np};
}

}  // namespace

TEST_SUITE("orthogonality") {

TEST_CASE("formal dimension") {
    CHECK(formal_dimension(RepLabel::from_twice(2)) == Rational{2, 1});
    CHECK(formal_dimension(RepLabel::from_twice(3)) == Rational{1, 1});
    CHECK(formal_dimension(RepLabel::from_twice(4)) == Rational{2, 3});
    CHECK(formal_dimension(RepLabel::from_twice(4)).to_double() == doctest::Approx(2.0 / 3.0));
    CHECK(formal_dimension(RepLabel::from_twice(7)) == Rational{1, 3});
}

TEST_CASE("angular selection") {
    CHECK(angular_selection(req(2, 2, 3, 1, 3, 1)));
    CHECK_FALSE(angular_selection(req(2, 2, 1, 1, 2, 1)));
    CHECK(angular_selection(req(4, 2, 0, 2, 1, 3)));
    CHECK_FALSE(angular_selection(req(4, 2, 0, 2, 1, 2)));
    CHECK_FALSE(angular_selection(req(3, 2, 0, 0, 1, 1)));  // eta difference 1/2 never matches integer shifts
    CHECK(angular_selection(req(2, 4, 1, 3, 0, 2)));
}

TEST_CASE("radial integral examples") {
    CHECK(radial_integral(req(2, 2, 0, 0, 0, 0)) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK_THROWS_AS(radial_integral(req(2, 2, 0, 0, 1, 0)), InvalidParams);
}

TEST_CASE("diagonal radial integral matches the closed form") {
    for (std::int64_t t = 2; t <= 8; ++t)
        for (int m = 0; m <= 8; ++m)
            for (int mp = 0; mp <= 8; ++mp) {
                const double v = radial_integral(req(t, t, m, mp, m, mp));
                const double ref = gr_7391(std::abs(mp - m), static_cast<double>(t - 1), std::min(m, mp));
                CHECK(v == doctest::Approx(ref).epsilon(1e-12));
            }
}

TEST_CASE("cross-eta radial integrals vanish") {
    // radial_integral for eta1 = eta2 + s with both orderings of the indices
    for (std::int64_t t2 = 2; t2 <= 7; ++t2)
        for (int s = 1; s <= 3; ++s)
            for (int m = 0; m <= 6; ++m)
                for (int a = 0; a <= 5; ++a) {
                    const double v = radial_integral(req(t2 + 2 * s, t2, m, m + a, m + s, m + a + s));
                    CHECK(std::abs(v) <= 1e-12);
                }
}

TEST_CASE("vanishing integral with the Jacobi exponents written out") {
    for (int s = 1; s <= 3; ++s)
        for (int a = 0; a <= 5; ++a)
            for (int b = 1; b <= 6; ++b)
                for (int m = 0; m <= 6; ++m) {
                    const auto rule = gauss_jacobi(quadrature_order_for_degree(2 * m + 2 * s), a, b + s - 1);
                    const double v = rule.integrate([&](double x) {
                        return jacobi_p({double(a), double(b + 2 * s), m}, x) * jacobi_p({double(a), double(b), m + s}, x);
                    });
                    CHECK(std::abs(v) <= 1e-12);
                }
}

TEST_CASE("degree argument: lower monomials are orthogonal to P_{m+s}") {
    for (int s = 1; s <= 3; ++s)
        for (int a = 0; a <= 5; ++a)
            for (int b = 1; b <= 6; ++b)
                for (int m = 0; m <= 6; ++m) {
                    const auto rule = gauss_jacobi(quadrature_order_for_degree(2 * (m + s)), a, b);
                    for (int k = 0; k <= m + s - 1; ++k) {
                        const double v = rule.integrate(
                            [&](double x) { return std::pow(x, k) * jacobi_p({double(a), double(b), m + s}, x); });
                        CHECK(std::abs(v) <= 1e-11);
                    }
                }
}

TEST_CASE("doubling the quadrature order changes nothing") {
    for (std::int64_t t1 = 2; t1 <= 6; ++t1)
        for (std::int64_t t2 = 2; t2 <= 6; t2 += 2)
            for (int m = 0; m <= 6; ++m)
                for (int mp = 0; mp <= 6; ++mp) {
                    if ((t1 - t2) % 2 != 0) continue;
                    const int shift = static_cast<int>((t1 - t2) / 2);
                    if (m + shift < 0 || mp + shift < 0) continue;
                    const auto r = req(t1, t2, m, mp, m + shift, mp + shift);
                    const int degree = 2 * std::max({m, mp, m + shift, mp + shift}) + static_cast<int>(t1 + t2);
                    const double lo = radial_integral(r);
                    const double hi = radial_integral(r, 2 * quadrature_order_for_degree(degree));
                    CHECK(std::abs(lo - hi) <= 1e-13 * std::max(1.0, std::abs(lo)));
                }
}

TEST_CASE("pipeline examples") {
    auto r1 = orthogonality_integral(req(2, 2, 0, 0, 0, 0));
    CHECK(r1.angular_selected);
    CHECK(r1.value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r1.expected == 2.0);
    CHECK(orthogonality_integral(req(3, 3, 1, 3, 1, 3)).value == doctest::Approx(1.0).epsilon(1e-12));
    for (int m = 0; m < 6; ++m)
        for (int mp = 0; mp < 6; ++mp) {
            const auto r = orthogonality_integral(req(4, 2, m, mp, m + 1, mp + 1));
            CHECK(r.angular_selected);
            CHECK(std::abs(r.value) <= 1e-12);
            CHECK(r.expected == 0.0);
        }
    const auto off = orthogonality_integral(req(2, 2, 1, 0, 0, 0));
    CHECK_FALSE(off.angular_selected);
    CHECK(off.value == 0.0);
}

TEST_CASE("exhaustive pipeline sweep") {
    double worst = 0.0;
    for (std::int64_t t1 = 2; t1 <= 6; ++t1)
        for (std::int64_t t2 = 2; t2 <= 6; ++t2)
            for (int m = 0; m <= 8; ++m)
                for (int mp = 0; mp <= 8; ++mp)
                    for (int n = 0; n <= 8; ++n)
                        for (int np = 0; np <= 8; ++np) {
                            const auto r = req(t1, t2, m, mp, n, np);
                            const auto res = orthogonality_integral(r);
                            const double d = formal_dimension(r.eta1).to_double();
                            const double expected = (t1 == t2 && m == n && mp == np) ? d : 0.0;
                            CHECK(res.expected == expected);
                            worst = std::max(worst, std::abs(res.value - expected));
                        }
    CHECK(worst <= 1e-10);
}

TEST_CASE("Monte Carlo cross-check") {
    const auto diag = monte_carlo_haar_check(req(2, 2, 0, 0, 0, 0), 1000000, 42);
    CHECK(diag.samples == 1000000);
    CHECK(std::abs(diag.estimate.real() - 2.0) <= 3.0 * diag.std_error_re);
    CHECK(std::abs(diag.estimate.imag()) <= 3.0 * diag.std_error_im + 1e-12);

    const auto cross = monte_carlo_haar_check(req(4, 2, 0, 0, 1, 1), 400000, 7);
    CHECK(std::abs(cross.estimate.real()) <= 3.0 * cross.std_error_re);
    CHECK(std::abs(cross.estimate.imag()) <= 3.0 * cross.std_error_im + 1e-12);

    const auto again = monte_carlo_haar_check(req(2, 2, 0, 0, 0, 0), 1000000, 42);
    CHECK(again.estimate.real() == diag.estimate.real());
    CHECK(again.estimate.imag() == diag.estimate.imag());
    CHECK(again.std_error_re == diag.std_error_re);

    CHECK_THROWS_AS(monte_carlo_haar_check(req(2, 2, 0, 0, 0, 0), 0, 1), InvalidParams);
    CHECK_THROWS_AS(monte_carlo_haar_check(req(2, 2, 0, 0, 0, 0), 10, 1, 0.0), InvalidParams);
}

}
