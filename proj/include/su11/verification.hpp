#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace su11::verify {

struct Options {
    int max_index = 8;
    std::int64_t samples = 1'000'000;
    std::uint64_t seed = 42;
    std::size_t size = 60;
    std::size_t k = 10;
    /// Replaces the primary tolerance of every check when set.
    std::optional<double> tol;
};

struct CheckResult {
    std::string id;
    std::string name;
    bool passed = false;
    double metric = 0.0;
    double threshold = 0.0;
    std::string detail;
};

/// Orthogonality, diagonal: value = 2/(2eta-1) for eta in {1..3}, m, m' <= max_index.
CheckResult orthogonality_diagonal(const Options& opts);
/// Orthogonality, eta1 != eta2: selected pairs vanish, non-selected pairs are
/// exactly zero and the Monte Carlo estimate is within 3 sigma of zero.
CheckResult orthogonality_vanishing(const Options& opts);
/// (alpha, beta) form against the Cartan form on random samples.
CheckResult matrix_element_cross_form(const Options& opts);
/// Truncated unitarity and homomorphism defects.
CheckResult unitarity_homomorphism(const Options& opts);
/// Undamped diagonal partial sums against the hyperbolic closed form.
CheckResult hyperbolic_trace(const Options& opts);
/// Abel-damped diagonal sums at hyperbolic elements, extrapolated to r -> 1.
CheckResult hyperbolic_damped_trace(const Options& opts);
/// Abel-damped traces on the compact subgroup.
CheckResult elliptic_abel_trace(const Options& opts);
/// 1/sin(theta/2) expansion at the Abel level.
CheckResult expansion_identity(const Options& opts);
/// Multiplicities and character certification of the tensor product.
CheckResult tensor_spectrum(const Options& opts);
/// Closed-form Jacobi norm integral and quadrature moments.
CheckResult quadrature_kernel(const Options& opts);

/// ortho, unitary, character, tensor, all.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
std::vector<CheckResult> run_suite(std::string_view suite, const Options& opts);

/// Least-squares slope of residual against (1 - r), and the slope of
/// log(residual) against log(1 - r).
struct DampingFit {
    double slope = 0.0;
    double log_slope = 0.0;
};
DampingFit fit_damping(const std::vector<double>& rs, const std::vector<double>& residuals);

}  // namespace su11::verify
