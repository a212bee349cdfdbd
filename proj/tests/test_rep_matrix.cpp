#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "su11/rep_matrix.hpp"

using namespace su11;

namespace {

constexpr double kPi = std::numbers::pi;

CartanCoords random_coords(std::mt19937_64& rng, double tau_max) {
    std::uniform_real_distribution<double> tau(0.0, tau_max), phi(0.0, 2 * kPi), psi(-2 * kPi, 2 * kPi);
    return {tau(rng), phi(rng), psi(rng)};
}

}  // namespace

TEST_SUITE("rep_matrix") {

TEST_CASE("index pair") {
    const IndexPair p{5, 2};
    CHECK(p.less() == 2);
    CHECK(p.greater() == 5);
    CHECK_FALSE(p.prime_is_greater());
    CHECK(IndexPair{2, 5}.prime_is_greater());
    CHECK(IndexPair{3, 3}.prime_is_greater());
}

TEST_CASE("identity maps to the identity matrix") {
    for (std::int64_t t = 2; t <= 7; ++t)
        for (int n = 0; n < 12; ++n)
            for (int np = 0; np < 12; ++np) {
                const cplx v = matrix_element(RepLabel::from_twice(t), n, np, GroupElement::identity());
                CHECK(v == cplx(n == np ? 1.0 : 0.0, 0.0));
            }
}

TEST_CASE("compact elements act diagonally with phase e^{-i(eta+n)theta}") {
    const double theta = 2.3;
    const auto h = compact_element(theta);
    for (std::int64_t t = 2; t <= 6; ++t) {
        const RepLabel eta = RepLabel::from_twice(t);
        for (int n = 0; n < 10; ++n)
            for (int np = 0; np < 10; ++np) {
                const cplx expected = n == np ? std::polar(1.0, -(eta.value() + n) * theta) : cplx(0, 0);
                CHECK(std::abs(matrix_element(eta, n, np, h) - expected) <= 1e-14);
                CHECK(std::abs(matrix_element_cartan(eta, n, np, {0.0, theta, 0.0}) - expected) <= 1e-14);
            }
    }
}

TEST_CASE("eta = 1, n = n' = 0 on a boost is cosh^-2(tau/2)") {
    const RepLabel one = RepLabel::from_twice(2);
    for (double tau : {0.2, 0.9, 1.6}) {
        const auto g = from_cartan({tau, 0, 0});
        const cplx v = matrix_element(one, 0, 0, g);
        CHECK(v.real() == doctest::Approx(std::pow(std::cosh(tau / 2), -2)).epsilon(1e-14));
        CHECK(std::abs(v.imag()) < 1e-16);
        // disk-integral oracle of the same inner product
        const cplx disk = oracle::disk_matrix_element_00(g.alpha(), g.beta());
        CHECK(std::abs(disk - v) <= 1e-4);
    }
    const auto g = from_cartan({1.1, 0.7, -0.4});
    CHECK(std::abs(oracle::disk_matrix_element_00(g.alpha(), g.beta()) - matrix_element(one, 0, 0, g)) <= 1e-4);
}

TEST_CASE("matrix_element matches the Taylor expansion of the group action") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 1500; ++i) {
        const int two_eta = 2 + static_cast<int>(rng() % 7);
        const int n = static_cast<int>(rng() % 9), np = static_cast<int>(rng() % 9);
        const auto g = from_cartan(random_coords(rng, 2.0));
        const cplx ref = oracle::taylor_matrix_element(two_eta, n, np, g.alpha(), g.beta());
        const cplx v = matrix_element(RepLabel::from_twice(two_eta), n, np, g);
        CHECK(std::abs(v - ref) <= 1e-11 * (1.0 + std::abs(ref)));
    }
}

TEST_CASE("Cartan form agrees with the (alpha, beta) form") {
    std::mt19937_64 rng(32);
    double worst = 0.0;
    for (int i = 0; i < 5000; ++i) {
        const RepLabel eta = RepLabel::from_twice(2 + static_cast<int>(rng() % 7));
        const int n = static_cast<int>(rng() % 13), np = static_cast<int>(rng() % 13);
        const auto g = from_cartan(random_coords(rng, 4.0));
        const cplx a = matrix_element(eta, n, np, g);
        const cplx b = matrix_element_cartan(eta, n, np, to_cartan(g));
        worst = std::max(worst, std::abs(a - b) / (1.0 + std::abs(a)));
    }
    CHECK(worst <= 1e-11);
}

TEST_CASE("Cartan form at tau = 0") {
    const RepLabel eta = RepLabel::from_twice(3);
    const double phi = 0.6, psi = 1.3;
    for (int n = 0; n < 6; ++n) {
        const cplx v = matrix_element_cartan(eta, n, n, {0.0, phi, psi});
        CHECK(std::abs(v - std::polar(1.0, -(1.5 + n) * (phi + psi))) <= 1e-14);
        CHECK(matrix_element_cartan(eta, n, n + 2, {0.0, phi, psi}) == cplx(0, 0));
        CHECK(matrix_element_cartan(eta, n + 3, n, {0.0, phi, psi}) == cplx(0, 0));
    }
}

TEST_CASE("moduli are symmetric under index swap") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 500; ++i) {
        const RepLabel eta = RepLabel::from_twice(2 + static_cast<int>(rng() % 7));
        const int n = static_cast<int>(rng() % 15), np = static_cast<int>(rng() % 15);
        const auto g = from_cartan(random_coords(rng, 3.0));
        const double a = std::abs(matrix_element(eta, n, np, g)), b = std::abs(matrix_element(eta, np, n, g));
        CHECK(std::abs(a - b) <= 1e-13 * (1.0 + a));
    }
}

TEST_CASE("large indices stay finite") {
    const RepLabel eta = RepLabel::from_twice(5);
    const auto g = from_cartan({0.3, 0.2, 0.1});
    const cplx v = matrix_element(eta, 400, 395, g);
    CHECK(std::isfinite(v.real()));
    CHECK(std::isfinite(v.imag()));
    CHECK(std::abs(v) <= 1.0);
    CHECK_THROWS_AS(matrix_element(eta, -1, 0, g), InvalidParams);
}

TEST_CASE("truncated operator") {
    const RepLabel eta = RepLabel::from_twice(3);
    const auto id_block = truncated_operator(eta, GroupElement::identity(), 8);
    CHECK(unitarity_defect(id_block, 8) == 0.0);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) CHECK(id_block(i, j) == cplx(i == j ? 1.0 : 0.0, 0.0));

    const auto h_block = truncated_operator(eta, compact_element(0.8), 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            if (i != j) CHECK(h_block(i, j) == cplx(0, 0));

    const auto g = from_cartan({0.7, 0.3, -0.9});
    const auto b = truncated_operator(eta, g, 12);
    CHECK(b.size() == 12);
    for (std::size_t i = 0; i < 12; ++i)
        for (std::size_t j = 0; j < 12; ++j)
            CHECK(b(i, j) == matrix_element(eta, static_cast<int>(i), static_cast<int>(j), g));

    CHECK_THROWS_AS(truncated_operator(eta, g, 0), InvalidParams);
    CHECK_THROWS_AS(unitarity_defect(b, 13), InvalidParams);
}

TEST_CASE("unitarity defect budget") {
    const RepLabel one = RepLabel::from_twice(2);
    // |z| = 0.5
    const auto g = from_cartan({2.0 * std::atanh(0.5), 0.4, 1.0});
    CHECK(unitarity_defect(truncated_operator(one, g, 60), 10) <= 1e-8);
}

TEST_CASE("unitarity defect shrinks as the block grows") {
    const RepLabel eta = RepLabel::from_twice(3);
    const auto g = from_cartan({2.0 * std::atanh(0.8), 0.4, 1.0});  // |z| = 0.8
    double prev = 1e300;
    for (std::size_t size : {12, 20, 30, 45, 60, 80}) {
        const double d = unitarity_defect(truncated_operator(eta, g, size), 5);
        CHECK(d < prev);
        prev = d;
    }
    // column norms approach one
    const auto big = truncated_operator(eta, g, 150);
    for (std::size_t j = 0; j < 5; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < big.size(); ++i) s += std::norm(big(i, j));
        CHECK(s == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("homomorphism defect") {
    const RepLabel eta = RepLabel::from_twice(4);
    const auto g1 = from_cartan({0.9, 1.0, 0.3});
    CHECK(homomorphism_defect(eta, g1, GroupElement::identity(), 30, 10) == 0.0);
    CHECK(homomorphism_defect(eta, g1, inverse(g1), 60, 5) <= 1e-8);
    CHECK(homomorphism_defect(eta, compact_element(0.4), compact_element(2.2), 25, 25) <= 1e-14);

    std::mt19937_64 rng(34);
    for (int i = 0; i < 20; ++i) {
        const auto a = from_cartan(random_coords(rng, 1.0));
        const auto b = from_cartan(random_coords(rng, 1.0));
        CHECK(homomorphism_defect(eta, a, b, 60, 5) <= 1e-8);
    }
    CHECK_THROWS_AS(homomorphism_defect(eta, g1, g1, 4, 5), InvalidParams);
}

}
