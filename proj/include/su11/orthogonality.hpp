#pragma once

#include <cstdint>

#include "su11/group.hpp"
#include "su11/half_integer.hpp"

namespace su11 {

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(Rational, Rational) = default;
};

/// Haar integral of U^{eta1}_{m m'} conj(U^{eta2}_{n n'}).
struct OrthoRequest {
    RepLabel eta1;
    RepLabel eta2;
    int m = 0;
    int m_prime = 0;
    int n = 0;
    int n_prime = 0;
};

struct OrthoResult {
    double value = 0.0;
    bool angular_selected = false;
    double expected = 0.0;
    Rational formal_dimension;
};

/// d_eta = 2 / (2 eta - 1).
Rational formal_dimension(RepLabel eta);

/// True iff eta1 - eta2 = n - m and eta1 - eta2 = n' - m'. Otherwise the phi
/// and psi integrals vanish identically.
bool angular_selection(const OrthoRequest& req);

/// Radial factor int_{-1}^{1} (1-x)^a (1+x)^{eta1+eta2-2} P^{(a, 2eta1-1)}_{m<}
/// P^{(a, 2eta2-1)}_{n<} dx with a = |m' - m|, by Gauss-Jacobi quadrature that
/// is exact for the polynomial part. `order` = 0 selects the default order.
/// Throws InvalidParams if the request fails angular selection.
double radial_integral(const OrthoRequest& req, int order = 0);

/// Full left-hand side: the angular integrals are done analytically, the
/// radial one by quadrature. Non-selected requests return exactly 0.
OrthoResult orthogonality_integral(const OrthoRequest& req);

struct MonteCarloEstimate {
    cplx estimate;
    double std_error_re = 0.0;
    double std_error_im = 0.0;
    std::int64_t samples = 0;
};

inline constexpr double kDefaultTauMax = 12.0;
inline constexpr int kMonteCarloStreams = 8;

/// Uniform Monte Carlo over [0, tau_max] x [0, 2pi) x [-2pi, 2pi) with the
/// Haar density, using the (alpha, beta) matrix elements directly. Samples
/// are split over a fixed number of independently seeded streams evaluated
/// concurrently and summed in stream order, so the result depends only on
/// (req, samples, seed, tau_max).
MonteCarloEstimate monte_carlo_haar_check(const OrthoRequest& req, std::int64_t samples, std::uint64_t seed,
                                          double tau_max = kDefaultTauMax);

}  // namespace su11
