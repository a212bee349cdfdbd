#pragma once

#include <cstddef>
#include <vector>

#include "su11/group.hpp"
#include "su11/half_integer.hpp"

namespace su11 {

/// (n, n') together with n_< = min and n_> = max.
struct IndexPair {
    int n = 0;
    int n_prime = 0;

    int less() const { return n < n_prime ? n : n_prime; }
    int greater() const { return n < n_prime ? n_prime : n; }
    bool prime_is_greater() const { return n_prime >= n; }
};

/// <e_n | U^eta(g) | e_n'> in the normalized monomial basis
/// e_n(z) = sqrt((2eta)_n / n!) z^n, evaluated from (alpha, beta).
///
/// All powers of alpha are integer powers (2eta is an integer), so no branch
/// of the complex logarithm is involved. The modulus is assembled in log
/// space and stays finite for indices well past the factorial overflow point.
cplx matrix_element(RepLabel eta, int n, int n_prime, const GroupElement& g);

/// Same matrix element from the Cartan parameters, with x = 1 - 2 tanh^2(tau/2)
/// and phase exp(-i[(eta + n) phi + (eta + n') psi]) times (-1)^{n'-n} when
/// n' >= n.
cplx matrix_element_cartan(RepLabel eta, int n, int n_prime, const CartanCoords& c);

/// Top-left size x size corner of U^eta(g), row-major.
class MatrixBlock {
public:
    MatrixBlock(RepLabel eta, const GroupElement& g, std::size_t size);

    RepLabel eta() const { return eta_; }
    const GroupElement& group_element() const { return g_; }
    std::size_t size() const { return size_; }
    cplx operator()(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }
    const std::vector<cplx>& entries() const { return entries_; }

private:
    RepLabel eta_;
    GroupElement g_;
    std::size_t size_;
    std::vector<cplx> entries_;
};

inline constexpr std::size_t kDefaultBlockSize = 60;
inline constexpr std::size_t kDefaultCorner = 10;

MatrixBlock truncated_operator(RepLabel eta, const GroupElement& g, std::size_t size);

/// max |(B^dagger B - I)_{ij}| over i, j < k. Throws InvalidParams if k > size.
double unitarity_defect(const MatrixBlock& block, std::size_t k);

/// max |U(g1 g2)_{ij} - (B1 B2)_{ij}| over i, j < k, with B1, B2 truncated at
/// `size`. Throws InvalidParams if k > size.
double homomorphism_defect(RepLabel eta, const GroupElement& g1, const GroupElement& g2, std::size_t size,
                           std::size_t k);

}  // namespace su11
