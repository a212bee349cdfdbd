#include "su11/rep_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "su11/special_functions.hpp"

#include "int_pow.hpp"

namespace su11 {

namespace {

using detail::ipow;

cplx unit(cplx v) { return v / std::abs(v); }

void check_indices(int n, int n_prime) {
    if (n < 0 || n_prime < 0) throw InvalidParams("matrix indices must be non-negative");
}

}  // namespace

cplx matrix_element(RepLabel eta, int n, int n_prime, const GroupElement& g) {
    check_indices(n, n_prime);
    const IndexPair ip{n, n_prime};
    const int lo = ip.less(), hi = ip.greater(), gap = hi - lo;
    const std::int64_t two_eta = eta.twice();

    const cplx alpha = g.alpha();
    const cplx beta = g.beta();
    if (gap > 0 && beta == cplx(0.0, 0.0)) return {0.0, 0.0};

    const double abs_z2 = std::norm(beta) / std::norm(alpha);
    const double jac = jacobi_p({static_cast<double>(gap), static_cast<double>(two_eta - 1), lo}, 1.0 - 2.0 * abs_z2);

    // |alpha^{-2eta-n>} conj(alpha)^{n<} gamma^{n>-n<}| = |alpha|^{-2eta} |z|^{n>-n<}
    double log_mod = 0.5 * log_poch_ratio(two_eta, hi, lo) - static_cast<double>(two_eta) * std::log(std::abs(alpha));
    if (gap > 0) log_mod += 0.5 * static_cast<double>(gap) * std::log(abs_z2);

    const cplx alpha_phase = unit(alpha);
    cplx phase = ipow(alpha_phase, -(two_eta + hi + lo));
    if (gap > 0) {
        const cplx gamma = ip.prime_is_greater() ? -beta : std::conj(beta);
        phase *= ipow(unit(gamma), gap);
    }
    return std::exp(log_mod) * jac * phase;
}

cplx matrix_element_cartan(RepLabel eta, int n, int n_prime, const CartanCoords& c) {
    check_indices(n, n_prime);
    const IndexPair ip{n, n_prime};
    const int lo = ip.less(), hi = ip.greater(), gap = hi - lo;
    const std::int64_t two_eta = eta.twice();
    const double eta_v = eta.value();

    const double x = c.x();
    if (gap > 0 && x >= 1.0) return {0.0, 0.0};

    double log_mod = (0.5 * (lo - hi) - eta_v) * std::numbers::ln2 + eta_v * std::log1p(x) +
                     0.5 * log_poch_ratio(two_eta, hi, lo);
    if (gap > 0) log_mod += 0.5 * gap * std::log(1.0 - x);
    const double jac = jacobi_p({static_cast<double>(gap), static_cast<double>(two_eta - 1), lo}, x);

    const double angle = -0.5 * (static_cast<double>(two_eta + 2 * n) * c.phi +
                                 static_cast<double>(two_eta + 2 * n_prime) * c.psi);
    double sign = 1.0;
    if (ip.prime_is_greater() && (gap % 2) == 1) sign = -1.0;
    return sign * std::exp(log_mod) * jac * std::polar(1.0, angle);
}

MatrixBlock::MatrixBlock(RepLabel eta, const GroupElement& g, std::size_t size)
    : eta_(eta), g_(g), size_(size), entries_(size * size) {
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            entries_[i * size + j] = matrix_element(eta, static_cast<int>(i), static_cast<int>(j), g);
}

MatrixBlock truncated_operator(RepLabel eta, const GroupElement& g, std::size_t size) {
    if (size < 1) throw InvalidParams("block size must be >= 1");
    return MatrixBlock(eta, g, size);
}

double unitarity_defect(const MatrixBlock& block, std::size_t k) {
    if (k > block.size()) throw InvalidParams("corner k exceeds block size");
    double worst = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            cplx s(0.0, 0.0);
            for (std::size_t l = 0; l < block.size(); ++l) s += std::conj(block(l, i)) * block(l, j);
            if (i == j) s -= 1.0;
            worst = std::max(worst, std::abs(s));
        }
    }
    return worst;
}

double homomorphism_defect(RepLabel eta, const GroupElement& g1, const GroupElement& g2, std::size_t size,
                           std::size_t k) {
    if (k > size) throw InvalidParams("corner k exceeds block size");
    const MatrixBlock b1 = truncated_operator(eta, g1, size);
    const MatrixBlock b2 = truncated_operator(eta, g2, size);
    const GroupElement g12 = multiply(g1, g2);
    double worst = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            cplx s(0.0, 0.0);
            for (std::size_t l = 0; l < size; ++l) s += b1(i, l) * b2(l, j);
            const cplx direct = matrix_element(eta, static_cast<int>(i), static_cast<int>(j), g12);
            worst = std::max(worst, std::abs(direct - s));
        }
    }
    return worst;
}

}  // namespace su11
