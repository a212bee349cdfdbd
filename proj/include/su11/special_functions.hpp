#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "su11/errors.hpp"

namespace su11 {

/// Exponents and degree of P^{(a,b)}_n. Valid for a > -1, b > -1.
struct JacobiParams {
    double a = 0.0;
    double b = 0.0;
    int degree = 0;
};

/// P^{(a,b)}_n(x) by the three-term recurrence in n. Throws InvalidParams.
double jacobi_p(const JacobiParams& p, double x);

/// log[ m! Gamma(2eta + n) / (n! Gamma(2eta + m)) ], with 2eta passed as the
/// integer two_eta.
double log_poch_ratio(std::int64_t two_eta, std::int64_t n, std::int64_t m);

/// Gauss-Jacobi rule for the weight (1-x)^a (1+x)^b; nodes ascending.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    double a = 0.0;
    double b = 0.0;

    std::size_t order() const { return nodes.size(); }

    /// Sum_i w_i f(x_i), accumulated in ascending node order.
    double integrate(const std::function<double(double)>& f) const;
};

/// Golub-Welsch construction: eigenvalues and first eigenvector components of
/// the symmetric tridiagonal Jacobi matrix, solved with implicit-shift QL.
/// Exact for polynomials of degree <= 2 order - 1. Throws InvalidParams.
QuadratureRule gauss_jacobi(int order, double a, double b);

/// Smallest rule order that integrates a polynomial of the given degree
/// exactly, plus two guard nodes.
int quadrature_order_for_degree(int degree);

/// Closed form of int_{-1}^{1} (1-x)^a (1+x)^{b-1} (P^{(a,b)}_m)^2 dx,
/// valid for a > -1, b > 0. Throws InvalidParams.
double gr_7391(double a, double b, int m);

}  // namespace su11
