#include "su11/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace su11 {

namespace {

void check_exponents(double a, double b) {
    if (!(a > -1.0) || !(b > -1.0))
        throw InvalidParams("Jacobi exponents must satisfy a > -1, b > -1 (got a=" + std::to_string(a) +
                            ", b=" + std::to_string(b) + ")");
}

double log_factorial(std::int64_t n) { return std::lgamma(static_cast<double>(n) + 1.0); }

// Implicit-shift QL on a symmetric tridiagonal matrix. diag is overwritten by
// the eigenvalues, off[i] couples rows i and i+1 and is destroyed. first_row
// receives the first component of each normalized eigenvector.
void tridiagonal_ql(std::vector<double>& diag, std::vector<double>& off, std::vector<double>& first_row) {
    const std::size_t n = diag.size();
    off.resize(n, 0.0);
    first_row.assign(n, 0.0);
    first_row[0] = 1.0;
    constexpr int kMaxIterations = 60;

    for (std::size_t l = 0; l < n; ++l) {
        int iterations = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(diag[m]) + std::abs(diag[m + 1]);
                if (std::abs(off[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
            }
            if (m == l) break;
            if (++iterations > kMaxIterations)
                throw InvalidParams("tridiagonal QL failed to converge");

            double g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
            double r = std::hypot(g, 1.0);
            g = diag[m] - diag[l] + off[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (std::size_t i = m; i-- > l;) {
                double f = s * off[i];
                const double b = c * off[i];
                r = std::hypot(f, g);
                off[i + 1] = r;
                if (r == 0.0) {
                    diag[i + 1] -= p;
                    off[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;

                f = first_row[i + 1];
                first_row[i + 1] = s * first_row[i] + c * f;
                first_row[i] = c * first_row[i] - s * f;
            }
            if (underflow) continue;
            diag[l] -= p;
            off[l] = g;
            off[m] = 0.0;
        } while (m != l);
    }
}

}  // namespace

double jacobi_p(const JacobiParams& p, double x) {
    check_exponents(p.a, p.b);
    if (p.degree < 0) throw InvalidParams("Jacobi degree must be non-negative");
    const double a = p.a, b = p.b;
    if (p.degree == 0) return 1.0;
    if (x == 1.0) {
        // P_n^{(a,b)}(1) = binomial(n + a, n)
        double v = 1.0;
        for (int k = 1; k <= p.degree; ++k) v *= (a + k) / k;
        return v;
    }
    double prev = 1.0;
    double cur = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
    const double ab = a + b;
    const double a2b2 = a * a - b * b;
    for (int k = 2; k <= p.degree; ++k) {
        const double two_k_ab = 2.0 * k + ab;
        const double c0 = 2.0 * k * (k + ab) * (two_k_ab - 2.0);
        const double c1 = (two_k_ab - 1.0) * (two_k_ab * (two_k_ab - 2.0) * x + a2b2);
        const double c2 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * two_k_ab;
        const double next = (c1 * cur - c2 * prev) / c0;
        prev = cur;
        cur = next;
    }
    return cur;
}

double log_poch_ratio(std::int64_t two_eta, std::int64_t n, std::int64_t m) {
    if (n == m) return 0.0;
    const double te = static_cast<double>(two_eta);
    return log_factorial(m) - log_factorial(n) + std::lgamma(te + static_cast<double>(n)) -
           std::lgamma(te + static_cast<double>(m));
}

double QuadratureRule::integrate(const std::function<double(double)>& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
}

QuadratureRule gauss_jacobi(int order, double a, double b) {
    if (order < 1) throw InvalidParams("quadrature order must be >= 1");
    check_exponents(a, b);

    const auto n = static_cast<std::size_t>(order);
    const double ab = a + b;
    std::vector<double> diag(n), off(n, 0.0);
    diag[0] = (b - a) / (ab + 2.0);
    for (std::size_t k = 1; k < n; ++k) {
        const double kk = static_cast<double>(k);
        const double t = 2.0 * kk + ab;
        diag[k] = (b * b - a * a) / (t * (t + 2.0));
        double beta;
        if (k == 1)
            beta = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
        else
            beta = 4.0 * kk * (kk + a) * (kk + b) * (kk + ab) / (t * t * (t + 1.0) * (t - 1.0));
        off[k - 1] = std::sqrt(beta);
    }

    std::vector<double> first_row;
    tridiagonal_ql(diag, off, first_row);

    const double log_mu0 = (ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                           std::lgamma(ab + 2.0);
    const double mu0 = std::exp(log_mu0);

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return diag[i] < diag[j]; });

    QuadratureRule rule;
    rule.a = a;
    rule.b = b;
    rule.nodes.reserve(n);
    rule.weights.reserve(n);
    for (std::size_t i : idx) {
        rule.nodes.push_back(diag[i]);
        rule.weights.push_back(mu0 * first_row[i] * first_row[i]);
    }
    return rule;
}

int quadrature_order_for_degree(int degree) { return (std::max(degree, 0) + 2) / 2 + 2; }

double gr_7391(double a, double b, int m) {
    if (!(a > -1.0) || !(b > 0.0))
        throw InvalidParams("closed form requires a > -1 and b > 0");
    if (m < 0) throw InvalidParams("degree must be non-negative");
    const double mm = static_cast<double>(m);
    const double log_value = (a + b) * std::log(2.0) - std::log(b) + std::lgamma(a + mm + 1.0) +
                             std::lgamma(b + mm + 1.0) - std::lgamma(mm + 1.0) - std::lgamma(a + b + mm + 1.0);
    return std::exp(log_value);
}

}  // namespace su11
