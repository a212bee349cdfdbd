#pragma once

#include <vector>

#include "su11/group.hpp"
#include "su11/half_integer.hpp"

namespace su11 {

struct DecompositionTerm {
    RepLabel eta3;
    int multiplicity = 0;

    friend bool operator==(const DecompositionTerm&, const DecompositionTerm&) = default;
};

/// U^{eta1} (x) U^{eta2} = sum over eta3 = eta1 + eta2 + n, n >= 0, each with
/// multiplicity one. `terms` lists n = 0 .. truncation.
struct Decomposition {
    RepLabel eta1;
    RepLabel eta2;
    std::vector<DecompositionTerm> terms;
    int truncation = 0;
};

inline constexpr int kDefaultSpectrumTerms = 50;

Decomposition decompose(RepLabel eta1, RepLabel eta2, int n_max = kDefaultSpectrumTerms);

/// 1 if eta3 - eta1 - eta2 is a non-negative integer, else 0.
int multiplicity(RepLabel eta1, RepLabel eta2, RepLabel eta3);

/// -e^{i(1 - eta1 - eta2) theta} / (4 sin^2(theta/2)), theta in (0, 2pi).
cplx character_product(RepLabel eta1, RepLabel eta2, double theta);

/// Sum_{n=0}^{n_max} r^n chi^{eta1+eta2+n}(h(theta)).
cplx abel_character_sum(RepLabel eta1, RepLabel eta2, double theta, double r, int n_max);

/// r -> 1, n_max -> infinity limit of abel_character_sum. Consecutive terms
/// differ by the factor e^{-i theta}, so the limit is
/// chi^{eta1+eta2}(h(theta)) / (1 - e^{-i theta}).
cplx abel_character_sum_limit(RepLabel eta1, RepLabel eta2, double theta);

/// |1/sin(theta/2) - 2i e^{-i theta/2} / (1 - e^{-i theta})|.
double verify_expansion_identity(double theta);

}  // namespace su11
