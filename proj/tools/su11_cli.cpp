// su11: command-line front end for the SU(1,1) discrete-series library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 domain error (error name on standard error).

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "su11/characters.hpp"
#include "su11/group.hpp"
#include "su11/half_integer.hpp"
#include "su11/orthogonality.hpp"
#include "su11/rep_matrix.hpp"
#include "su11/tensor_product.hpp"
#include "su11/verification.hpp"

namespace {

using su11::cplx;
using KeyValues = std::vector<std::pair<std::string, std::string>>;

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct OutputRecord {
    std::string command;
    KeyValues inputs;
    double value_re = 0.0;
    double value_im = 0.0;
    std::optional<double> expected_re;
    std::optional<double> abs_error;
    KeyValues notes;
};

class RecordWriter {
public:
    explicit RecordWriter(std::string format) : format_(std::move(format)) {}

    void write(const OutputRecord& r) {
        if (format_ == "csv") write_csv(r);
        else write_json(r);
    }

private:
    void write_json(const OutputRecord& r) {
        nlohmann::ordered_json j;
        j["command"] = r.command;
        nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.inputs) inputs[k] = v;
        j["inputs"] = inputs;
        j["value_re"] = r.value_re;
        j["value_im"] = r.value_im;
        j["expected_re"] = r.expected_re ? nlohmann::ordered_json(*r.expected_re) : nlohmann::ordered_json(nullptr);
        j["abs_error"] = r.abs_error ? nlohmann::ordered_json(*r.abs_error) : nlohmann::ordered_json(nullptr);
        nlohmann::ordered_json notes = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.notes) notes[k] = v;
        j["notes"] = notes;
        std::cout << j.dump() << '\n';
    }

    static std::string quote(const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += '"';
            out += c;
        }
        return out + '"';
    }

    static std::string join(const KeyValues& kv) {
        std::string out;
        for (const auto& [k, v] : kv) {
            if (!out.empty()) out += ';';
            out += k + '=' + v;
        }
        return out;
    }

    void write_csv(const OutputRecord& r) {
        if (!header_written_) {
            std::cout << "command,inputs,value_re,value_im,expected_re,abs_error,notes\n";
            header_written_ = true;
        }
        std::cout << quote(r.command) << ',' << quote(join(r.inputs)) << ',' << num(r.value_re) << ','
                  << num(r.value_im) << ',' << (r.expected_re ? num(*r.expected_re) : "") << ','
                  << (r.abs_error ? num(*r.abs_error) : "") << ',' << quote(join(r.notes)) << '\n';
    }

    std::string format_;
    bool header_written_ = false;
};

std::string eta_check(const std::string& text) {
    try {
        su11::RepLabel::parse(text);
    } catch (const su11::Error& e) {
        return std::string("must be an exact half-integer >= 1 (") + e.what() + ")";
    }
    return {};
}

struct IndexRange {
    int lo = 0, hi = 0;
};

std::optional<IndexRange> parse_range(const std::string& s) {
    auto to_int = [](const std::string& t) -> std::optional<int> {
        if (t.empty() || t.size() > 6 || t.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
        return std::stoi(t);
    };
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        auto v = to_int(s);
        if (!v) return std::nullopt;
        return IndexRange{*v, *v};
    }
    auto lo = to_int(s.substr(0, dots)), hi = to_int(s.substr(dots + 2));
    if (!lo || !hi || *lo > *hi) return std::nullopt;
    return IndexRange{*lo, *hi};
}

std::string range_check(const std::string& s) {
    return parse_range(s) ? std::string{} : "expected N or A..B with 0 <= A <= B";
}

void add_format(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
}

struct ElementSpec {
    double tau = 0.0, phi = 0.0, psi = 0.0;
    std::optional<double> alpha_re, alpha_im, beta_re, beta_im;

    void add(CLI::App* cmd) {
        cmd->add_option("--tau", tau, "Cartan tau")->capture_default_str();
        cmd->add_option("--phi", phi, "Cartan phi")->capture_default_str();
        cmd->add_option("--psi", psi, "Cartan psi")->capture_default_str();
        cmd->add_option("--alpha-re", alpha_re, "Re(alpha)");
        cmd->add_option("--alpha-im", alpha_im, "Im(alpha)");
        cmd->add_option("--beta-re", beta_re, "Re(beta)");
        cmd->add_option("--beta-im", beta_im, "Im(beta)");
    }

    bool algebraic() const { return alpha_re || alpha_im || beta_re || beta_im; }

    // Without beta, beta is taken real and non-negative with |beta|^2 = |alpha|^2 - 1.
    su11::GroupElement element() const {
        if (!algebraic()) return su11::from_cartan({tau, phi, psi});
        const cplx alpha(alpha_re.value_or(0.0), alpha_im.value_or(0.0));
        cplx beta(beta_re.value_or(0.0), beta_im.value_or(0.0));
        if (!beta_re && !beta_im) {
            const double b2 = std::norm(alpha) - 1.0;
            if (b2 < 0) throw su11::DeterminantViolation("|alpha| < 1 and no beta given");
            beta = std::sqrt(b2);
        }
        return su11::GroupElement::from_alpha_beta(alpha, beta);
    }

    void describe(KeyValues& kv) const {
        if (algebraic()) {
            const su11::GroupElement g = element();
            kv.emplace_back("alpha_re", num(g.alpha().real()));
            kv.emplace_back("alpha_im", num(g.alpha().imag()));
            kv.emplace_back("beta_re", num(g.beta().real()));
            kv.emplace_back("beta_im", num(g.beta().imag()));
        } else {
            kv.emplace_back("tau", num(tau));
            kv.emplace_back("phi", num(phi));
            kv.emplace_back("psi", num(psi));
        }
    }
};

int run_elem(RecordWriter& out, const std::string& eta_s, const std::string& n_s, const std::string& np_s,
             bool use_cartan, const ElementSpec& spec) {
    const su11::RepLabel eta = su11::RepLabel::parse(eta_s);
    const IndexRange rows = *parse_range(n_s), cols = *parse_range(np_s);
    const su11::GroupElement g = spec.element();
    const su11::CartanCoords c = spec.algebraic() ? su11::to_cartan(g) : su11::CartanCoords{spec.tau, spec.phi, spec.psi};
    for (int i = rows.lo; i <= rows.hi; ++i)
        for (int j = cols.lo; j <= cols.hi; ++j) {
            const cplx v = use_cartan ? su11::matrix_element_cartan(eta, i, j, c) : su11::matrix_element(eta, i, j, g);
            OutputRecord r{"elem", {{"eta", eta.to_string()}, {"n", std::to_string(i)}, {"np", std::to_string(j)}},
                           v.real(), v.imag(), {}, {}, {{"form", use_cartan ? "cartan" : "algebraic"}}};
            spec.describe(r.inputs);
            out.write(r);
        }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SU(1,1) holomorphic discrete series: matrix elements, characters, orthogonality, tensor products"};
    app.require_subcommand(1);
    const CLI::Validator eta_validator(eta_check, "HALF-INTEGER>=1", "eta");
    const CLI::Validator range_validator(range_check, "N|A..B", "range");

    std::string format = "json";

    std::string eta_s = "1", n_s = "0", np_s = "0";
    bool use_cartan = false;
    ElementSpec elem_g;
    auto* elem = app.add_subcommand("elem", "Matrix elements U^eta_{n n'}(g)");
    elem->add_option("--eta", eta_s, "Representation label (e.g. 1, 3/2, 2.5)")->required()->check(eta_validator);
    elem->add_option("--n", n_s, "Row index or range A..B")->check(range_validator)->capture_default_str();
    elem->add_option("--np", np_s, "Column index or range A..B")->check(range_validator)->capture_default_str();
    elem->add_flag("--cartan", use_cartan, "Evaluate from the Cartan parameters instead of (alpha, beta)");
    elem_g.add(elem);
    add_format(elem, format);

    std::optional<double> theta;
    std::optional<int> terms;
    std::optional<double> damping;
    ElementSpec char_g;
    auto* chr = app.add_subcommand("character", "Character chi^eta(g)");
    chr->add_option("--eta", eta_s, "Representation label")->required()->check(eta_validator);
    chr->add_option("--theta", theta, "Compact element h(theta)");
    chr->add_option("--terms", terms, "Also report the diagonal partial sum with this many terms")
        ->check(CLI::NonNegativeNumber);
    chr->add_option("--r", damping, "With --theta: also report the Abel-damped trace at this r");
    char_g.add(chr);
    add_format(chr, format);

    std::string eta1_s = "1", eta2_s = "1";
    int m = 0, mp = 0, n = 0, np = 0;
    bool mc = false;
    std::int64_t samples = 1'000'000;
    std::uint64_t seed = 42;
    double tau_max = su11::kDefaultTauMax;
    auto* ortho = app.add_subcommand("ortho", "Haar integral of U^{eta1}_{m m'} conj(U^{eta2}_{n n'})");
    ortho->add_option("--eta1", eta1_s)->required()->check(eta_validator);
    ortho->add_option("--eta2", eta2_s)->required()->check(eta_validator);
    ortho->add_option("--m", m)->check(CLI::NonNegativeNumber)->capture_default_str();
    ortho->add_option("--mp", mp)->check(CLI::NonNegativeNumber)->capture_default_str();
    ortho->add_option("--n", n)->check(CLI::NonNegativeNumber)->capture_default_str();
    ortho->add_option("--np", np)->check(CLI::NonNegativeNumber)->capture_default_str();
    ortho->add_flag("--mc", mc, "Add a Monte Carlo estimate of the full 3-D integral");
    ortho->add_option("--samples", samples)->check(CLI::PositiveNumber)->capture_default_str();
    ortho->add_option("--seed", seed)->capture_default_str();
    ortho->add_option("--tau-max", tau_max)->check(CLI::PositiveNumber)->capture_default_str();
    add_format(ortho, format);

    int nmax = su11::kDefaultSpectrumTerms;
    std::optional<std::string> eta3_s;
    bool certify = false;
    double cert_theta = 1.0, cert_r = 0.99;
    auto* tensor = app.add_subcommand("tensor", "Decomposition of U^{eta1} (x) U^{eta2}");
    tensor->add_option("--eta1", eta1_s)->required()->check(eta_validator);
    tensor->add_option("--eta2", eta2_s)->required()->check(eta_validator);
    tensor->add_option("--nmax", nmax, "Number of spectrum terms beyond the lowest")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    tensor->add_option("--eta3", eta3_s, "Report the multiplicity of this label only")->check(eta_validator);
    tensor->add_flag("--certify", certify, "Abel-damped character sum against the character product");
    tensor->add_option("--theta", cert_theta)->capture_default_str();
    tensor->add_option("--r", cert_r)->capture_default_str();
    add_format(tensor, format);

    std::string suite = "all";
    su11::verify::Options vopts;
    std::optional<double> tol;
    auto* verify = app.add_subcommand("verify", "Run verification suites; exit 0 iff every check passes");
    verify->add_option("--suite", suite)->check(CLI::IsMember(su11::verify::suite_names()))->capture_default_str();
    verify->add_option("--max-index", vopts.max_index)->check(CLI::NonNegativeNumber)->capture_default_str();
    verify->add_option("--samples", vopts.samples)->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_option("--seed", vopts.seed)->capture_default_str();
    verify->add_option("--size", vopts.size)->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_option("--k", vopts.k)->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_option("--tol", tol, "Override the primary tolerance of every check")->check(CLI::PositiveNumber);
    add_format(verify, format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    RecordWriter out(format);
    try {
        if (*elem) return run_elem(out, eta_s, n_s, np_s, use_cartan, elem_g);

        if (*chr) {
            const su11::RepLabel eta = su11::RepLabel::parse(eta_s);
            KeyValues inputs{{"eta", eta.to_string()}};
            su11::CharacterValue cv;
            std::optional<su11::GroupElement> g;
            if (theta) {
                inputs.emplace_back("theta", num(*theta));
                cv = {su11::character_compact(eta, *theta), su11::Regime::elliptic_abel};
                g = su11::compact_element(*theta);
            } else if (char_g.alpha_re && !char_g.alpha_im && !char_g.beta_re && !char_g.beta_im) {
                // The character depends on Re(alpha) only.
                inputs.emplace_back("alpha_re", num(*char_g.alpha_re));
                cv = su11::character_from_re_alpha(eta, *char_g.alpha_re);
                if (std::abs(*char_g.alpha_re) >= 1.0) g = char_g.element();
            } else {
                char_g.describe(inputs);
                g = char_g.element();
                cv = su11::character(eta, *g);
            }
            out.write({"character", inputs, cv.value.real(), cv.value.imag(), {}, {},
                       {{"regime", std::string(su11::to_string(cv.regime))}}});
            if (terms && g) {
                const cplx s = su11::trace_partial_sum(eta, *g, *terms);
                KeyValues in2 = inputs;
                in2.emplace_back("terms", std::to_string(*terms));
                out.write({"trace_partial_sum", in2, s.real(), s.imag(), cv.value.real(), std::abs(s - cv.value), {}});
            }
            if (damping && theta) {
                const int nterms = su11::abel_terms_for(*damping);
                const cplx s = su11::abel_trace(eta, *theta, *damping, nterms);
                KeyValues in2 = inputs;
                in2.emplace_back("r", num(*damping));
                in2.emplace_back("terms", std::to_string(nterms));
                out.write({"abel_trace", in2, s.real(), s.imag(), cv.value.real(), std::abs(s - cv.value), {}});
            }
            return 0;
        }

        if (*ortho) {
            const su11::OrthoRequest req{su11::RepLabel::parse(eta1_s), su11::RepLabel::parse(eta2_s), m, mp, n, np};
            const KeyValues inputs{{"eta1", req.eta1.to_string()}, {"eta2", req.eta2.to_string()},
                                   {"m", std::to_string(m)},       {"mp", std::to_string(mp)},
                                   {"n", std::to_string(n)},       {"np", std::to_string(np)}};
            const su11::OrthoResult res = su11::orthogonality_integral(req);
            const auto d = res.formal_dimension;
            out.write({"ortho", inputs, res.value, 0.0, res.expected, std::abs(res.value - res.expected),
                       {{"angular_selected", res.angular_selected ? "true" : "false"},
                        {"formal_dimension", std::to_string(d.num) + "/" + std::to_string(d.den)}}});
            if (mc) {
                const su11::MonteCarloEstimate est = su11::monte_carlo_haar_check(req, samples, seed, tau_max);
                KeyValues in2 = inputs;
                in2.emplace_back("samples", std::to_string(samples));
                in2.emplace_back("seed", std::to_string(seed));
                in2.emplace_back("tau_max", num(tau_max));
                out.write({"ortho_mc", in2, est.estimate.real(), est.estimate.imag(), res.value,
                           std::abs(est.estimate - cplx(res.value, 0.0)),
                           {{"std_error_re", num(est.std_error_re)}, {"std_error_im", num(est.std_error_im)}}});
            }
            return 0;
        }

        if (*tensor) {
            const su11::RepLabel e1 = su11::RepLabel::parse(eta1_s), e2 = su11::RepLabel::parse(eta2_s);
            const KeyValues base{{"eta1", e1.to_string()}, {"eta2", e2.to_string()}};
            if (eta3_s) {
                const su11::RepLabel e3 = su11::RepLabel::parse(*eta3_s);
                KeyValues in = base;
                in.emplace_back("eta3", e3.to_string());
                out.write({"tensor_multiplicity", in, static_cast<double>(su11::multiplicity(e1, e2, e3)), 0.0, {}, {}, {}});
            } else if (certify) {
                const int nterms = su11::abel_terms_for(cert_r);
                const cplx sum = su11::abel_character_sum(e1, e2, cert_theta, cert_r, nterms);
                const cplx product = su11::character_product(e1, e2, cert_theta);
                const cplx limit = su11::abel_character_sum_limit(e1, e2, cert_theta);
                KeyValues in = base;
                in.emplace_back("theta", num(cert_theta));
                in.emplace_back("r", num(cert_r));
                in.emplace_back("n_max", std::to_string(nterms));
                out.write({"tensor_certify", in, sum.real(), sum.imag(), product.real(), std::abs(sum - product),
                           {{"expected_im", num(product.imag())},
                            {"residual_over_one_minus_r", num(std::abs(sum - product) / (1.0 - cert_r))},
                            {"limit_error", num(std::abs(limit - product))}}});
            } else {
                const su11::Decomposition d = su11::decompose(e1, e2, nmax);
                for (const auto& term : d.terms) {
                    KeyValues in = base;
                    in.emplace_back("eta3", term.eta3.to_string());
                    out.write({"tensor", in, static_cast<double>(term.multiplicity), 0.0, {}, {}, {}});
                }
            }
            return 0;
        }

        if (*verify) {
            vopts.tol = tol;
            if (vopts.k > vopts.size) throw su11::InvalidParams("--k must not exceed --size");
            const auto results = su11::verify::run_suite(suite, vopts);
            bool all_ok = true;
            for (const auto& r : results) {
                all_ok = all_ok && r.passed;
                out.write({"verify", {{"suite", suite}, {"check", r.id}, {"name", r.name}}, r.metric, 0.0, {}, {},
                           {{"status", r.passed ? "pass" : "fail"}, {"threshold", num(r.threshold)}, {"detail", r.detail}}});
                std::cerr << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.name << ": " << r.detail << '\n';
            }
            return all_ok ? 0 : 1;
        }
    } catch (const su11::Error& e) {
        std::cerr << "error: " << e.name() << ": " << e.what() << '\n';
        return 3;
    }
    return 0;
}
