#include "su11/orthogonality.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <numbers>
#include <random>
#include <vector>

#include "su11/rep_matrix.hpp"
#include "su11/special_functions.hpp"

namespace su11 {

Rational formal_dimension(RepLabel eta) {
    const std::int64_t den = eta.twice() - 1;
    const std::int64_t g = std::gcd<std::int64_t>(2, den);
    return {2 / g, den / g};
}

bool angular_selection(const OrthoRequest& req) {
    const HalfInteger shift = req.eta1.eta() - req.eta2.eta();
    return shift == HalfInteger::from_int(req.n - req.m) && shift == HalfInteger::from_int(req.n_prime - req.m_prime);
}

double radial_integral(const OrthoRequest& req, int order) {
    if (!angular_selection(req)) throw InvalidParams("radial integral requested for a pair failing angular selection");
    const int gap = std::abs(req.m_prime - req.m);
    const int deg_m = std::min(req.m, req.m_prime);
    const int deg_n = std::min(req.n, req.n_prime);
    // eta1 + eta2 is an integer once eta1 - eta2 = n - m holds.
    const double b = static_cast<double>((req.eta1.twice() + req.eta2.twice()) / 2 - 2);
    if (order <= 0) order = quadrature_order_for_degree(deg_m + deg_n);

    const QuadratureRule rule = gauss_jacobi(order, gap, b);
    const JacobiParams p1{static_cast<double>(gap), static_cast<double>(req.eta1.twice() - 1), deg_m};
    const JacobiParams p2{static_cast<double>(gap), static_cast<double>(req.eta2.twice() - 1), deg_n};
    return rule.integrate([&](double x) { return jacobi_p(p1, x) * jacobi_p(p2, x); });
}

OrthoResult orthogonality_integral(const OrthoRequest& req) {
    OrthoResult out;
    out.formal_dimension = formal_dimension(req.eta1);
    const bool diagonal = req.eta1 == req.eta2 && req.m == req.n && req.m_prime == req.n_prime;
    out.expected = diagonal ? out.formal_dimension.to_double() : 0.0;
    out.angular_selected = angular_selection(req);
    if (!out.angular_selected) return out;

    const int lo_m = std::min(req.m, req.m_prime), hi_m = std::max(req.m, req.m_prime);
    const int lo_n = std::min(req.n, req.n_prime), hi_n = std::max(req.n, req.n_prime);
    // 2^{2 + m< - m> - eta1 - eta2} (ratio1 ratio2)^{1/2}
    const double log_prefactor =
        (2.0 + lo_m - hi_m - req.eta1.value() - req.eta2.value()) * std::numbers::ln2 +
        0.5 * (log_poch_ratio(req.eta1.twice(), hi_m, lo_m) + log_poch_ratio(req.eta2.twice(), hi_n, lo_n));
    out.value = std::exp(log_prefactor) * radial_integral(req);
    return out;
}

namespace {

struct StreamSums {
    double re = 0.0, im = 0.0, re2 = 0.0, im2 = 0.0;
};

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

StreamSums run_stream(const OrthoRequest& req, std::int64_t count, std::uint64_t seed, int stream, double tau_max) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream)};
    std::mt19937_64 rng(seq);
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double volume = tau_max * two_pi * (2.0 * two_pi);
    StreamSums s;
    for (std::int64_t i = 0; i < count; ++i) {
        CartanCoords c;
        c.tau = tau_max * unit_uniform(rng);
        c.phi = two_pi * unit_uniform(rng);
        c.psi = -two_pi + 2.0 * two_pi * unit_uniform(rng);
        const GroupElement g = from_cartan(c);
        const cplx u1 = matrix_element(req.eta1, req.m, req.m_prime, g);
        const cplx u2 = matrix_element(req.eta2, req.n, req.n_prime, g);
        const cplx f = volume * haar_density(c) * u1 * std::conj(u2);
        s.re += f.real();
        s.im += f.imag();
        s.re2 += f.real() * f.real();
        s.im2 += f.imag() * f.imag();
    }
    return s;
}

}  // namespace

MonteCarloEstimate monte_carlo_haar_check(const OrthoRequest& req, std::int64_t samples, std::uint64_t seed,
                                          double tau_max) {
    if (samples < 1) throw InvalidParams("Monte Carlo needs at least one sample");
    if (!(tau_max > 0.0)) throw InvalidParams("tau_max must be positive");

    std::vector<std::future<StreamSums>> parts;
    parts.reserve(kMonteCarloStreams);
    const std::int64_t base = samples / kMonteCarloStreams;
    const std::int64_t extra = samples % kMonteCarloStreams;
    for (int s = 0; s < kMonteCarloStreams; ++s) {
        const std::int64_t count = base + (s < extra ? 1 : 0);
        parts.push_back(std::async(std::launch::async, run_stream, req, count, seed, s, tau_max));
    }
    StreamSums total;
    for (auto& part : parts) {
        const StreamSums s = part.get();
        total.re += s.re;
        total.im += s.im;
        total.re2 += s.re2;
        total.im2 += s.im2;
    }

    const double n = static_cast<double>(samples);
    MonteCarloEstimate est;
    est.samples = samples;
    est.estimate = {total.re / n, total.im / n};
    if (samples > 1) {
        const double var_re = std::max(0.0, (total.re2 - total.re * total.re / n) / (n - 1.0));
        const double var_im = std::max(0.0, (total.im2 - total.im * total.im / n) / (n - 1.0));
        est.std_error_re = std::sqrt(var_re / n);
        est.std_error_im = std::sqrt(var_im / n);
    }
    return est;
}

}  // namespace su11
