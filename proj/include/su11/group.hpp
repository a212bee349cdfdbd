#pragma once

#include <complex>

#include "su11/errors.hpp"

namespace su11 {

using cplx = std::complex<double>;

inline constexpr double kDefaultDetTol = 1e-12;

struct CartanCoords;

/// Element [[alpha, beta], [conj(beta), conj(alpha)]] of SU(1,1). Construction
/// enforces | |alpha|^2 - |beta|^2 - 1 | <= det_tol.
class GroupElement {
public:
    /// Throws DeterminantViolation.
    static GroupElement from_alpha_beta(cplx alpha, cplx beta, double det_tol = kDefaultDetTol);
    static GroupElement identity() { return GroupElement({1.0, 0.0}, {0.0, 0.0}); }

    cplx alpha() const { return alpha_; }
    cplx beta() const { return beta_; }
    double determinant() const { return std::norm(alpha_) - std::norm(beta_); }

private:
    GroupElement(cplx alpha, cplx beta) : alpha_(alpha), beta_(beta) {}
    friend GroupElement multiply(const GroupElement&, const GroupElement&);
    friend GroupElement inverse(const GroupElement&);
    friend GroupElement from_cartan(const CartanCoords&);

    cplx alpha_;
    cplx beta_;
};

/// Factorization parameters g = h(phi) a(tau) h(psi) with tau >= 0,
/// phi in [0, 2pi) and psi in [-2pi, 2pi).
struct CartanCoords {
    double tau = 0.0;
    double phi = 0.0;
    double psi = 0.0;

    /// Reduces (phi, psi) into the canonical ranges without changing the
    /// group element they describe.
    CartanCoords normalized() const;

    /// x = 1 - 2 tanh^2(tau/2), in [-1, 1].
    double x() const;
};

struct DiskPoint {
    cplx z;
};

GroupElement from_cartan(const CartanCoords& c);

/// Inverse of from_cartan. At tau = 0 the split of the phase between phi and
/// psi is not unique: phi is set to 0 and psi carries the full phase.
CartanCoords to_cartan(const GroupElement& g);

GroupElement multiply(const GroupElement& g1, const GroupElement& g2);
GroupElement inverse(const GroupElement& g);

/// h(theta) of the maximal compact subgroup U(1).
GroupElement compact_element(double theta);

/// sinh(tau) / (8 pi^2), the Haar density with respect to dtau dphi dpsi.
double haar_density(const CartanCoords& c);

/// z = beta / conj(alpha); |z| = tanh(tau/2).
DiskPoint disk_point(const GroupElement& g);

double x_coordinate(double tau);

}  // namespace su11
