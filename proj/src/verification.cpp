#include "su11/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "su11/characters.hpp"
#include "su11/orthogonality.hpp"
#include "su11/rep_matrix.hpp"
#include "su11/special_functions.hpp"
#include "su11/tensor_product.hpp"

namespace su11::verify {

namespace {

constexpr double kPi = std::numbers::pi;
const std::vector<double> kDampings{0.9, 0.99, 0.999};

std::vector<RepLabel> labels(std::int64_t lo_twice, std::int64_t hi_twice) {
    std::vector<RepLabel> out;
    for (std::int64_t t = lo_twice; t <= hi_twice; ++t) out.push_back(RepLabel::from_twice(t));
    return out;
}

double pick(const Options& opts, double fallback) { return opts.tol ? *opts.tol : fallback; }

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

GroupElement random_element(std::mt19937_64& rng, double tau_max) {
    return from_cartan({uniform(rng, 0.0, tau_max), uniform(rng, 0.0, 2.0 * kPi), uniform(rng, -2.0 * kPi, 2.0 * kPi)});
}

std::string sci(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

CheckResult make(std::string id, std::string name, double metric, double threshold, bool extra_ok,
                 std::string detail) {
    return {std::move(id), std::move(name), extra_ok && metric <= threshold, metric, threshold, std::move(detail)};
}

}  // namespace

DampingFit fit_damping(const std::vector<double>& rs, const std::vector<double>& residuals) {
    const std::size_t n = rs.size();
    auto slope = [n](const std::vector<double>& xs, const std::vector<double>& ys) {
        double mx = 0, my = 0;
        for (std::size_t i = 0; i < n; ++i) {
            mx += xs[i];
            my += ys[i];
        }
        mx /= n;
        my /= n;
        double sxy = 0, sxx = 0;
        for (std::size_t i = 0; i < n; ++i) {
            sxy += (xs[i] - mx) * (ys[i] - my);
            sxx += (xs[i] - mx) * (xs[i] - mx);
        }
        return sxy / sxx;
    };
    std::vector<double> xs(n), lx(n), ly(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = 1.0 - rs[i];
        lx[i] = std::log(xs[i]);
        ly[i] = std::log(residuals[i]);
    }
    return {slope(xs, residuals), slope(lx, ly)};
}

CheckResult orthogonality_diagonal(const Options& opts) {
    const double tol = pick(opts, 1e-10);
    double worst = 0.0;
    int cases = 0;
    for (RepLabel eta : labels(2, 6))
        for (int m = 0; m <= opts.max_index; ++m)
            for (int mp = 0; mp <= opts.max_index; ++mp) {
                const OrthoResult r = orthogonality_integral({eta, eta, m, mp, m, mp});
                worst = std::max(worst, std::abs(r.value - formal_dimension(eta).to_double()));
                ++cases;
            }
    return make("C1", "orthogonality diagonal = 2/(2eta-1)", worst, tol, true,
                std::to_string(cases) + " cases, max abs error " + sci(worst));
}

CheckResult orthogonality_vanishing(const Options& opts) {
    const double tol = pick(opts, 1e-12);
    const auto etas = labels(2, 6);
    const int top = opts.max_index;
    double worst = 0.0;
    int selected = 0, nonzero_unselected = 0;
    for (RepLabel e1 : etas)
        for (RepLabel e2 : etas) {
            if (e1 == e2) continue;
            for (int m = 0; m <= top; ++m)
                for (int mp = 0; mp <= top; ++mp)
                    for (int n = 0; n <= top; ++n)
                        for (int np = 0; np <= top; ++np) {
                            const OrthoRequest req{e1, e2, m, mp, n, np};
                            const OrthoResult r = orthogonality_integral(req);
                            if (r.angular_selected) {
                                worst = std::max(worst, std::abs(r.value));
                                ++selected;
                            } else if (r.value != 0.0) {
                                ++nonzero_unselected;
                            }
                        }
        }

    const std::vector<OrthoRequest> spots{
        {RepLabel::from_twice(4), RepLabel::from_twice(2), 0, 0, 0, 0},
        {RepLabel::from_twice(3), RepLabel::from_twice(2), 0, 0, 0, 0},
        {RepLabel::from_twice(2), RepLabel::from_twice(4), 1, 0, 0, 1},
        {RepLabel::from_twice(5), RepLabel::from_twice(3), 1, 2, 0, 0},
        {RepLabel::from_twice(6), RepLabel::from_twice(2), 0, 1, 1, 0},
    };
    double worst_sigma = 0.0;
    for (std::size_t i = 0; i < spots.size(); ++i) {
        const MonteCarloEstimate est = monte_carlo_haar_check(spots[i], opts.samples, opts.seed + i);
        worst_sigma = std::max({worst_sigma, std::abs(est.estimate.real()) / est.std_error_re,
                                std::abs(est.estimate.imag()) / est.std_error_im});
    }
    const bool ok = nonzero_unselected == 0 && worst_sigma <= 3.0;
    return make("C2", "orthogonality vanishing for eta1 != eta2", worst, tol, ok,
                std::to_string(selected) + " selected cases, max |value| " + sci(worst) + "; " +
                    std::to_string(nonzero_unselected) + " unselected nonzero; Monte Carlo max |est|/sigma " +
                    sci(worst_sigma) + " (limit 3)");
}

CheckResult matrix_element_cross_form(const Options& opts) {
    const double tol = pick(opts, 1e-11);
    std::mt19937_64 rng(opts.seed);
    double worst = 0.0;
    constexpr int kSamples = 10'000;
    for (int s = 0; s < kSamples; ++s) {
        const RepLabel eta = RepLabel::from_twice(uniform_int(rng, 2, 8));
        const int n = uniform_int(rng, 0, 12), np = uniform_int(rng, 0, 12);
        const GroupElement g = random_element(rng, 4.0);
        const cplx direct = matrix_element(eta, n, np, g);
        const cplx cartan = matrix_element_cartan(eta, n, np, to_cartan(g));
        worst = std::max(worst, std::abs(direct - cartan) / (1.0 + std::abs(direct)));
    }
    return make("C3", "matrix element (alpha,beta) form vs Cartan form", worst, tol, true,
                std::to_string(kSamples) + " samples, max scaled error " + sci(worst));
}

CheckResult unitarity_homomorphism(const Options& opts) {
    const double tol = pick(opts, 1e-8);
    std::mt19937_64 rng(opts.seed + 1);
    double worst_u = 0.0, worst_h = 0.0;
    for (RepLabel eta : labels(2, 4)) {
        for (int s = 0; s < 100; ++s) {
            const GroupElement g = random_element(rng, 1.0);
            worst_u = std::max(worst_u, unitarity_defect(truncated_operator(eta, g, opts.size), opts.k));
        }
        for (int s = 0; s < 100; ++s) {
            const GroupElement g1 = random_element(rng, 1.0);
            const GroupElement g2 = random_element(rng, 1.0);
            worst_h = std::max(worst_h, homomorphism_defect(eta, g1, g2, opts.size, opts.k));
        }
    }
    return make("C4", "unitarity and homomorphism of truncated blocks", std::max(worst_u, worst_h), tol, true,
                "size " + std::to_string(opts.size) + ", k " + std::to_string(opts.k) + ": unitarity " +
                    sci(worst_u) + ", homomorphism " + sci(worst_h));
}

CheckResult hyperbolic_trace(const Options& opts) {
    const double tol = pick(opts, 1e-9);
    double worst = 0.0;
    for (double t : {0.5, 1.0, 2.0}) {
        const GroupElement g = from_cartan({2.0 * t, 0.0, 0.0});
        for (RepLabel eta : labels(2, 4)) {
            const cplx closed = character(eta, g).value;
            worst = std::max(worst, std::abs(trace_partial_sum(eta, g, 60) - closed));
        }
    }
    return make("C5", "hyperbolic trace partial sum (60 terms) vs closed form", worst, tol, true,
                "max |partial sum - closed form| " + sci(worst));
}

CheckResult hyperbolic_damped_trace(const Options& opts) {
    const double tol = pick(opts, 1e-5);
    // Residual is analytic in (1 - r); quadratic extrapolation through three
    // damping factors to r = 1.
    const std::vector<double> rs{0.98, 0.99, 0.995};
    double worst = 0.0, worst_log_slope_dev = 0.0;
    for (double t : {0.5, 1.0, 2.0}) {
        const GroupElement g = from_cartan({2.0 * t, 0.0, 0.0});
        for (RepLabel eta : labels(2, 4)) {
            const cplx closed = character(eta, g).value;
            std::vector<cplx> sums;
            std::vector<double> res;
            for (double r : rs) {
                sums.push_back(damped_trace(eta, g, r, abel_terms_for(r)));
                res.push_back(std::abs(sums.back() - closed));
            }
            cplx extrapolated(0.0, 0.0);
            for (std::size_t i = 0; i < rs.size(); ++i) {
                double basis = 1.0;
                for (std::size_t j = 0; j < rs.size(); ++j)
                    if (j != i) basis *= (1.0 - rs[j]) / ((1.0 - rs[j]) - (1.0 - rs[i]));
                extrapolated += basis * sums[i];
            }
            worst = std::max(worst, std::abs(extrapolated - closed) / std::abs(closed));
            const DampingFit fit = fit_damping(rs, res);
            worst_log_slope_dev = std::max(worst_log_slope_dev, std::abs(fit.log_slope - 1.0));
        }
    }
    return make("C5a", "hyperbolic Abel-damped trace extrapolated to r -> 1 (supplement)", worst, tol,
                worst_log_slope_dev <= 0.2,
                "max relative error of extrapolated sum " + sci(worst) + ", max |log-slope - 1| " +
                    sci(worst_log_slope_dev));
}

CheckResult elliptic_abel_trace(const Options& opts) {
    const double tol = pick(opts, 1e-13);
    double worst_limit = 0.0, worst_ratio = 0.0, worst_log_dev = 0.0;
    bool slopes_ok = true;
    for (double theta : {0.5, 1.0, kPi, 2.0 * kPi - 0.5}) {
        for (RepLabel eta : labels(2, 4)) {
            const cplx chi = character_compact(eta, theta);
            worst_limit = std::max(worst_limit, std::abs(abel_trace_limit(eta, theta) - chi));
            std::vector<double> res;
            for (double r : kDampings) res.push_back(std::abs(abel_trace(eta, theta, r, abel_terms_for(r)) - chi));
            const DampingFit fit = fit_damping(kDampings, res);
            slopes_ok = slopes_ok && std::isfinite(fit.slope) && fit.slope > 0.0;
            worst_log_dev = std::max(worst_log_dev, std::abs(fit.log_slope - 1.0));
            worst_ratio = std::max(worst_ratio, res.back() / std::abs(chi));
        }
    }
    const bool ok = slopes_ok && worst_ratio <= 1e-2 && worst_log_dev <= 0.2;
    return make("C6", "elliptic Abel trace vs compact character", worst_limit, tol, ok,
                "closed-form limit error " + sci(worst_limit) + ", residual(r=0.999)/|chi| max " + sci(worst_ratio) +
                    " (limit 1e-2), slopes positive: " + (slopes_ok ? "yes" : "no") + ", max |log-slope - 1| " +
                    sci(worst_log_dev));
}

CheckResult expansion_identity(const Options& opts) {
    const double tol = pick(opts, 1e-13);
    double worst = 0.0;
    constexpr int kPoints = 100;
    const double lo = 0.1, hi = 2.0 * kPi - 0.1;
    for (int i = 1; i <= kPoints; ++i) {
        const double theta = lo + (hi - lo) * i / (kPoints + 1);
        worst = std::max(worst, verify_expansion_identity(theta));
    }
    return make("C7", "1/sin(theta/2) expansion at the Abel level", worst, tol, true,
                std::to_string(kPoints) + " angles, max deviation " + sci(worst));
}

CheckResult tensor_spectrum(const Options& opts) {
    const double tol = pick(opts, 1e-13);
    constexpr int kExtra = 20;
    int mismatches = 0;
    const auto etas = labels(2, 8);
    for (RepLabel e1 : etas)
        for (RepLabel e2 : etas) {
            const Decomposition d = decompose(e1, e2, kExtra);
            const Decomposition swapped = decompose(e2, e1, kExtra);
            if (d.terms != swapped.terms) ++mismatches;
            if (d.terms.front().eta3.eta() != e1.eta() + e2.eta()) ++mismatches;
            for (std::size_t i = 1; i < d.terms.size(); ++i)
                if ((d.terms[i].eta3.eta() - d.terms[i - 1].eta3.eta()).twice() != 2) ++mismatches;
            const std::int64_t top = e1.twice() + e2.twice() + 2 * kExtra;
            for (std::int64_t t3 = 2; t3 <= top; ++t3) {
                const RepLabel e3 = RepLabel::from_twice(t3);
                int listed = 0;
                for (const auto& term : d.terms)
                    if (term.eta3 == e3) listed += term.multiplicity;
                if (multiplicity(e1, e2, e3) != listed) ++mismatches;
            }
        }

    struct Tuple {
        std::int64_t t1, t2;
        double theta;
    };
    const std::vector<Tuple> tuples{{2, 2, 1.0}, {3, 4, 0.5}, {4, 5, kPi}, {2, 3, 2.0 * kPi - 0.5}, {8, 7, 2.0}};
    double worst_limit = 0.0, worst_ratio = 0.0, worst_log_dev = 0.0;
    bool slopes_ok = true;
    for (const auto& tp : tuples) {
        const RepLabel e1 = RepLabel::from_twice(tp.t1), e2 = RepLabel::from_twice(tp.t2);
        const cplx product = character_product(e1, e2, tp.theta);
        const cplx factored = character_compact(e1, tp.theta) * character_compact(e2, tp.theta);
        worst_limit = std::max({worst_limit, std::abs(abel_character_sum_limit(e1, e2, tp.theta) - product) / std::abs(product),
                                std::abs(factored - product) / std::abs(product)});
        std::vector<double> res;
        for (double r : kDampings)
            res.push_back(std::abs(abel_character_sum(e1, e2, tp.theta, r, abel_terms_for(r)) - product));
        const DampingFit fit = fit_damping(kDampings, res);
        slopes_ok = slopes_ok && std::isfinite(fit.slope) && fit.slope > 0.0;
        worst_log_dev = std::max(worst_log_dev, std::abs(fit.log_slope - 1.0));
        worst_ratio = std::max(worst_ratio, res.back() / std::abs(product));
    }
    const bool ok = mismatches == 0 && slopes_ok && worst_ratio <= 1e-2 && worst_log_dev <= 0.2;
    return make("C8", "tensor-product spectrum and character certification", worst_limit, tol, ok,
                std::to_string(mismatches) + " spectrum mismatches; limit relative error " + sci(worst_limit) +
                    ", residual(r=0.999)/|product| max " + sci(worst_ratio) + ", slopes positive: " +
                    (slopes_ok ? "yes" : "no") + ", max |log-slope - 1| " + sci(worst_log_dev));
}

CheckResult quadrature_kernel(const Options& opts) {
    const double tol = pick(opts, 1e-12);
    double worst_gr = 0.0;
    for (int a = 0; a <= 6; ++a)
        for (int b2 = 1; b2 <= 16; ++b2) {
            const double b = 0.5 * b2;
            for (int m = 0; m <= 10; ++m) {
                const QuadratureRule rule = gauss_jacobi(quadrature_order_for_degree(2 * m), a, b - 1.0);
                const JacobiParams p{static_cast<double>(a), b, m};
                const double quad = rule.integrate([&](double x) {
                    const double v = jacobi_p(p, x);
                    return v * v;
                });
                const double closed = gr_7391(a, b, m);
                worst_gr = std::max(worst_gr, std::abs(quad - closed) / std::abs(closed));
            }
        }

    struct Triple {
        int order;
        double a, b;
    };
    const std::vector<Triple> triples{{1, 0, 0},     {2, 0, 0},      {3, 1, 1},     {4, -0.5, -0.5}, {5, 0.5, 0.5},
                                      {6, 2, 0},     {7, 0, 3},      {8, 1.5, 2.5}, {9, -0.75, 0.25}, {10, 4, 4},
                                      {11, 0, 7},    {12, 3, 1},     {13, 6, 2},    {15, -0.9, 0},    {16, 0, -0.9},
                                      {18, 2.5, 5.5}, {20, 1, 8},    {24, 5, 5},    {30, 0.25, 6},    {40, 3.5, 0.5}};
    double worst_mom = 0.0;
    for (const auto& t : triples) {
        const QuadratureRule rule = gauss_jacobi(t.order, t.a, t.b);
        double sum = 0.0;
        for (double w : rule.weights) sum += w;
        const double exact = std::pow(2.0, t.a + t.b + 1.0) * std::beta(t.a + 1.0, t.b + 1.0);
        worst_mom = std::max(worst_mom, std::abs(sum - exact) / exact);
    }
    const double mom_tol = opts.tol ? *opts.tol : 1e-13;
    return make("C9", "Jacobi norm closed form vs quadrature; weight moments", worst_gr, tol, worst_mom <= mom_tol,
                "closed form max relative error " + sci(worst_gr) + ", moment max relative error " + sci(worst_mom) +
                    " (limit " + sci(mom_tol) + ")");
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"ortho", "unitary", "character", "tensor", "all"};
    return names;
}

std::vector<CheckResult> run_suite(std::string_view suite, const Options& opts) {
    std::vector<CheckResult> out;
    const bool all = suite == "all";
    bool known = all;
    if (all || suite == "ortho") {
        known = true;
        out.push_back(orthogonality_diagonal(opts));
        out.push_back(orthogonality_vanishing(opts));
        out.push_back(quadrature_kernel(opts));
    }
    if (all || suite == "unitary") {
        known = true;
        out.push_back(matrix_element_cross_form(opts));
        out.push_back(unitarity_homomorphism(opts));
    }
    if (all || suite == "character") {
        known = true;
        out.push_back(hyperbolic_trace(opts));
        out.push_back(hyperbolic_damped_trace(opts));
        out.push_back(elliptic_abel_trace(opts));
    }
    if (all || suite == "tensor") {
        known = true;
        out.push_back(expansion_identity(opts));
        out.push_back(tensor_spectrum(opts));
    }
    if (!known) throw std::invalid_argument("unknown suite: " + std::string(suite));
    return out;
}

}  // namespace su11::verify
