#pragma once

#include <string_view>

#include "su11/group.hpp"
#include "su11/half_integer.hpp"

namespace su11 {

enum class Regime { hyperbolic_abs_convergent, elliptic_abel, boundary };

std::string_view to_string(Regime r);

struct CharacterValue {
    cplx value;
    Regime regime;
};

inline constexpr double kDefaultBoundaryTol = 1e-9;

/// Conjugacy regime from Re(alpha): hyperbolic for (Re alpha)^2 > 1, elliptic
/// for (Re alpha)^2 < 1, boundary within `boundary_tol` of 1.
Regime classify(double re_alpha, double boundary_tol = kDefaultBoundaryTol);

/// Closed-form trace from Re(alpha) alone:
///   (1/2) ((Re a)^2 - 1)^{-1/2} (Re a + ((Re a)^2 - 1)^{1/2})^{1 - 2 eta}
/// with the root taken as +i sqrt(1 - (Re a)^2) in the elliptic regime.
/// Throws BoundaryConjugacyClass near (Re a)^2 = 1 and UnsupportedClass for
/// Re a < -1.
CharacterValue character_from_re_alpha(RepLabel eta, double re_alpha, double boundary_tol = kDefaultBoundaryTol);

CharacterValue character(RepLabel eta, const GroupElement& g, double boundary_tol = kDefaultBoundaryTol);

/// Same trace written in (x, phi, psi). x must lie in (-1, 1].
CharacterValue character_cartan(RepLabel eta, double x, double phi, double psi,
                                double boundary_tol = kDefaultBoundaryTol);

/// chi(h(theta)) = exp(i (1 - 2eta) theta / 2) / (2i sin(theta/2)) for
/// theta in (0, 2pi). Throws SingularAngle when |sin(theta/2)| < 1e-12 and
/// UnsupportedClass outside (0, 2pi).
cplx character_compact(RepLabel eta, double theta);

/// Sum_{n < terms} U_nn(g).
cplx trace_partial_sum(RepLabel eta, const GroupElement& g, int terms);

/// Sum_{n < terms} r^n U_nn(g). Throws InvalidDamping unless 0 < r < 1.
cplx damped_trace(RepLabel eta, const GroupElement& g, double r, int terms);

/// Abel-damped diagonal sum at h(theta): Sum_{n < terms} r^n e^{-i(eta+n) theta}.
/// Throws InvalidDamping unless 0 < r < 1, SingularAngle if |sin(theta/2)| <= 1e-12.
cplx abel_trace(RepLabel eta, double theta, double r, int terms);

/// r -> 1 limit of abel_trace: e^{-i eta theta} / (1 - e^{-i theta}).
cplx abel_trace_limit(RepLabel eta, double theta);

/// Number of terms after which r^n < 1e-16.
int abel_terms_for(double r);

}  // namespace su11
