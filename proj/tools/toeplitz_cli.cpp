// toeplitz-cli: command-line front end for the toeplitz library.
//
// Exit codes: 0 success, 1 a checked property failed, 2 parse or usage error.
// Defaults come from built-in values, then a key=value config file (--config or
// $TOEPLITZ_CONFIG), then flags.

#include <toeplitz/toeplitz.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

using json = nlohmann::ordered_json;
using namespace toeplitz;

namespace {

struct Defaults {
    std::int64_t trunc = 64;
    double tol = 1e-10;
    std::int64_t depth = 32;
    std::uint64_t seed = 0;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One key=value per line; '#' starts a comment; unknown keys are rejected.
Defaults load_config(const std::string& path) {
    Defaults d;
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        if (trim(line).empty()) continue;
        if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
        auto key = trim(line.substr(0, eq));
        auto value = trim(line.substr(eq + 1));
        try {
            if (key == "trunc")
                d.trunc = std::stoll(value);
            else if (key == "tol")
                d.tol = std::stod(value);
            else if (key == "depth")
                d.depth = std::stoll(value);
            else if (key == "seed")
                d.seed = std::stoull(value);
            else
                throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
        } catch (const std::logic_error&) {
            throw UsageError(path + ":" + std::to_string(lineno) + ": bad value for '" + key + "'");
        }
    }
    return d;
}

json scalar_json(const Scalar& s) {
    if (s.is_exact()) return to_string(s.exact());
    auto z = s.to_complex();
    return {{"re", z.real()}, {"im", z.imag()}};
}

json element_json(const Element& a) {
    json terms = json::array();
    for (const auto& [m, c] : a.terms()) terms.push_back({{"n", m.n}, {"m", m.m}, {"coefficient", to_string(c)}});
    return {{"kind", "element"}, {"text", to_string(a)}, {"terms", terms}};
}

json tensor_json(const TensorElement& t) {
    json terms = json::array();
    for (const auto& [k, c] : t.terms()) {
        json factors = json::array();
        for (const auto& m : k) factors.push_back({m.n, m.m});
        terms.push_back({{"factors", factors}, {"coefficient", to_string(c)}});
    }
    return {{"kind", "tensor"}, {"degree", t.degree()}, {"text", to_string(t)}, {"terms", terms}};
}

json value_json(const expr::Value& v) {
    if (auto* e = std::get_if<Element>(&v)) return element_json(*e);
    return tensor_json(std::get<TensorElement>(v));
}

std::string value_text(const expr::Value& v) {
    if (auto* e = std::get_if<Element>(&v)) return to_string(*e);
    return to_string(std::get<TensorElement>(v));
}

Element element_arg(const std::string& text) { return expr::parse_element(text); }

/// Collects output; prints JSON or "key: value" lines.
class Output {
   public:
    explicit Output(bool text) : text_(text) {}
    json& doc() { return doc_; }
    void line(const std::string& s) { lines_.push_back(s); }
    void emit() const {
        if (!text_) {
            std::cout << doc_.dump(2) << '\n';
            return;
        }
        for (const auto& l : lines_) std::cout << l << '\n';
    }

   private:
    bool text_;
    json doc_ = json::object();
    std::vector<std::string> lines_;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact algebra of the Toeplitz algebra: elements, coproduct, functionals, circle measures"};
    app.require_subcommand(1);
    std::string format = "json";
    std::string config_path;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    app.add_option("--config", config_path, "key=value defaults file (trunc, tol, depth, seed)");

    std::string e1, e2;
    std::int64_t k = 0, trunc = 0, depth = 0, steps = 0, samples = 0, cases = 100;
    double tol = 0;
    std::uint64_t seed = 0;
    std::string q_text;

    auto* simplify = app.add_subcommand("simplify", "Canonical form of an expression");
    simplify->add_option("expr", e1)->required();

    auto* mulc = app.add_subcommand("mul", "Product of two elements");
    mulc->add_option("a", e1)->required();
    mulc->add_option("b", e2)->required();

    auto* grade = app.add_subcommand("grade", "Index-k component");
    grade->add_option("expr", e1)->required();
    grade->add_option("--k", k, "Index")->required();

    auto* compact = app.add_subcommand("compact", "Compactness by diagonal sums");
    compact->add_option("expr", e1)->required();

    auto* symbolc = app.add_subcommand("symbol", "Image under the symbol map as a trigonometric polynomial");
    symbolc->add_option("expr", e1)->required();

    auto* norm = app.add_subcommand("norm", "Truncated operator norm, and exact norm for diagonal elements");
    norm->add_option("expr", e1)->required();
    auto* norm_trunc = norm->add_option("--trunc", trunc, "Truncation size N");
    auto* norm_tol = norm->add_option("--tol", tol, "Relative tolerance of the power iteration");

    auto* truncc = app.add_subcommand("truncate", "Dump the N x N compression (first line N, then rows of re im pairs)");
    truncc->add_option("expr", e1)->required();
    auto* trunc_trunc = truncc->add_option("--trunc", trunc, "Truncation size N");

    auto* deltac = app.add_subcommand("delta", "Coproduct");
    deltac->add_option("expr", e1)->required();

    auto* hopf = app.add_subcommand("hopf-check", "Both weak-Hopf axioms on an element");
    hopf->add_option("expr", e1)->required();

    auto* haarv = app.add_subcommand("haar-verify", "Haar characterization on the probe grid");
    auto* haar_depth = haarv->add_option("--depth", depth, "Probe depth");
    auto* haar_seed = haarv->add_option("--seed", seed, "Seed for random probe functionals");

    auto* cesaro = app.add_subcommand("cesaro", "Cesaro means of a diagonal state");
    cesaro->add_option("--q", q_text, "Parameter p/q in (0,1)")->required();
    cesaro->add_option("--steps", steps, "Number of convolution powers")->required();
    auto* cesaro_depth = cesaro->add_option("--depth", depth, "Probe depth");

    auto* witness = app.add_subcommand("witness-cqg", "Distance certificate for the quantum-group density condition");
    witness->add_option("--samples", samples, "Number of sampled span elements")->required();
    auto* witness_seed = witness->add_option("--seed", seed, "Seed");

    auto* mconv = app.add_subcommand("measure-conv", "Convolution of two circle measures");
    mconv->add_option("a", e1)->required();
    mconv->add_option("b", e2)->required();
    auto* mconv_depth = mconv->add_option("--depth", depth, "Largest |k| of reported Fourier coefficients");

    auto* axioms = app.add_subcommand("axioms", "Seeded property sweep");
    auto* axioms_seed = axioms->add_option("--seed", seed, "Seed");
    axioms->add_option("--cases", cases, "Cases per property")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Defaults d;
        if (config_path.empty())
            if (const char* env = std::getenv("TOEPLITZ_CONFIG"); env && *env) config_path = env;
        if (!config_path.empty()) d = load_config(config_path);
        auto pick = [](CLI::Option* opt, auto flag, auto fallback) { return opt->count() ? flag : fallback; };

        Output out(format == "text");
        auto& doc = out.doc();
        int status = 0;
        const auto* cmd = app.get_subcommands().front();
        doc["command"] = cmd->get_name();

        if (cmd == simplify) {
            auto v = expr::evaluate(expr::parse(e1));
            doc["result"] = value_json(v);
            out.line(value_text(v));
        } else if (cmd == mulc) {
            auto r = mul(element_arg(e1), element_arg(e2));
            doc["result"] = element_json(r);
            out.line(to_string(r));
        } else if (cmd == grade) {
            auto r = graded_component(element_arg(e1), k);
            doc["k"] = k;
            doc["result"] = element_json(r);
            out.line(to_string(r));
        } else if (cmd == compact) {
            auto a = element_arg(e1);
            bool c = is_compact(a);
            json sums = json::object();
            for (const auto& [idx, s] : diagonal_sums(a)) sums[std::to_string(idx)] = to_string(s);
            doc["compact"] = c;
            doc["diagonal_sums"] = sums;
            out.line("compact: " + yes_no(c));
        } else if (cmd == symbolc) {
            auto p = symbol(element_arg(e1));
            json coeffs = json::object();
            for (const auto& [idx, c] : p.coefficients()) coeffs[std::to_string(idx)] = to_string(c);
            doc["coefficients"] = coeffs;
            doc["text"] = to_string(p);
            out.line(to_string(p));
        } else if (cmd == norm) {
            auto a = element_arg(e1);
            auto n = pick(norm_trunc, trunc, d.trunc);
            auto t = pick(norm_tol, tol, d.tol);
            if (n < 1) throw UsageError("--trunc must be >= 1");
            double estimate = op_norm(truncate(a, n), t);
            doc["trunc"] = n;
            doc["tolerance"] = t;
            doc["op_norm"] = estimate;
            out.line("op_norm: " + fmt(estimate) + " (N = " + std::to_string(n) + ", tol = " + fmt(t) + ")");
            doc["diagonal"] = is_diagonal(a);
            if (is_diagonal(a)) {
                auto exact = norm_T0(a);
                doc["norm_squared"] = to_string(exact.squared);
                doc["norm"] = exact.value;
                out.line("norm: " + fmt(exact.value) + " (squared " + to_string(exact.squared) + ")");
            }
        } else if (cmd == truncc) {
            auto n = pick(trunc_trunc, trunc, d.trunc);
            if (n < 1) throw UsageError("--trunc must be >= 1");
            dump(truncate(element_arg(e1), n), std::cout);
            return 0;
        } else if (cmd == deltac) {
            auto r = delta(element_arg(e1));
            doc["result"] = tensor_json(r);
            out.line(to_string(r));
        } else if (cmd == hopf) {
            auto a = element_arg(e1);
            auto r = weak_hopf_report(a);
            doc["identity_axiom"] = r.identity_axiom;
            doc["antipode_axiom"] = r.antipode_axiom;
            doc["identity_side"] = to_string(r.identity_side);
            doc["antipode_side"] = to_string(r.antipode_side);
            doc["holds"] = r.holds();
            out.line("identity axiom: " + yes_no(r.identity_axiom));
            out.line("antipode axiom: " + yes_no(r.antipode_axiom));
            status = r.holds() ? 0 : 1;
        } else if (cmd == haarv) {
            auto dep = pick(haar_depth, depth, d.depth);
            auto sd = pick(haar_seed, seed, d.seed);
            if (dep < 1) throw UsageError("--depth must be >= 1");
            std::vector<Functional> probes{counit(), haar0(), diagonal_state(make_rational(1, 2))};
            RandomSource rng(sd);
            for (int p = 0; p < 8; ++p) {
                std::map<Monomial, Scalar> values;
                for (int t = 0; t < 12; ++t) values[rng.monomial(std::min<std::int64_t>(dep, 10))] = rng.coefficient();
                probes.push_back(table_functional(std::move(values)));
            }
            auto h = is_haar_report(haar(), probes, dep);
            bool eps = is_haar(counit(), probes, dep);
            bool h0 = is_haar(haar0(), probes, dep);
            bool h0_perp = in_k_perp(haar0(), dep);
            json lambdas = json::array();
            for (const auto& l : h.lambdas) lambdas.push_back(scalar_json(l));
            doc["depth"] = dep;
            doc["seed"] = sd;
            doc["probes"] = probes.size();
            doc["haar"] = h.holds();
            doc["lambdas"] = lambdas;
            doc["counit_is_haar"] = eps;
            doc["haar0_is_haar"] = h0;
            doc["haar0_in_k_perp"] = h0_perp;
            out.line("haar: " + yes_no(h.holds()));
            out.line("counit is haar: " + yes_no(eps));
            out.line("haar0 is haar: " + yes_no(h0));
            out.line("haar0 in K-perp: " + yes_no(h0_perp));
            status = h.holds() && !eps && !h0 && h0_perp ? 0 : 1;
        } else if (cmd == cesaro) {
            Rational q;
            try {
                q = parse_rational(q_text);
            } catch (const std::exception&) {
                throw UsageError("--q expects p/q, got '" + q_text + "'");
            }
            auto dep = pick(cesaro_depth, depth, d.depth);
            auto table = cesaro_iterate(diagonal_state(q), steps, dep);
            json values = json::object();
            for (const auto& [m, v] : table.values) values[to_string(m)] = scalar_json(v);
            doc["q"] = to_string(q);
            doc["steps"] = steps;
            doc["depth"] = dep;
            doc["max_deviation"] = table.max_deviation;
            doc["values"] = values;
            out.line("max deviation from haar: " + fmt(table.max_deviation));
            if (table.values.contains({1, 1})) out.line("rho_n(T(1,1)) = " + to_string(table.at({1, 1})));
        } else if (cmd == witness) {
            auto sd = pick(witness_seed, seed, d.seed);
            if (samples < 1) throw UsageError("--samples must be >= 1");
            auto r = cqg_witness(static_cast<std::size_t>(samples), sd);
            doc["samples"] = r.samples;
            doc["seed"] = r.seed;
            doc["left_span_orthogonal"] = r.left_span_orthogonal;
            doc["right_span_orthogonal"] = r.right_span_orthogonal;
            doc["left_lower_bound_squared"] = to_string(r.left_lower_bound_sq);
            doc["right_lower_bound_squared"] = to_string(r.right_lower_bound_sq);
            doc["certified"] = r.certified();
            out.line("certified: " + yes_no(r.certified()) + " (" + std::to_string(r.samples) + " samples, seed " +
                     std::to_string(r.seed) + ")");
            status = r.certified() ? 0 : 1;
        } else if (cmd == mconv) {
            auto a = parse_measure(e1), b = parse_measure(e2);
            auto r = convolve_measures(a, b);
            auto dep = pick(mconv_depth, depth, std::int64_t{16});
            json fourier_values = json::object();
            bool theorem = true;
            for (std::int64_t j = -dep; j <= dep; ++j) {
                auto v = fourier(r, j);
                fourier_values[std::to_string(j)] = scalar_json(v);
                theorem = theorem && approx_equal(v, fourier(a, j) * fourier(b, j), 1e-12);
            }
            doc["result"] = to_string(r);
            doc["exact"] = r.is_exact();
            doc["fourier"] = fourier_values;
            doc["convolution_theorem"] = theorem;
            out.line(to_string(r));
            status = theorem ? 0 : 1;
        } else if (cmd == axioms) {
            auto sd = pick(axioms_seed, seed, d.seed);
            if (cases < 1) throw UsageError("--cases must be >= 1");
            auto report = run_axioms(sd, static_cast<std::size_t>(cases));
            json results = json::array();
            for (const auto& r : report.results) {
                json item = {{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"passed", r.passed()}};
                if (r.first_failing_case) {
                    item["first_failing_case"] = *r.first_failing_case;
                    item["counterexample"] = r.counterexample;
                }
                results.push_back(item);
                out.line((r.passed() ? "PASS " : "FAIL ") + r.name + " (" + std::to_string(r.cases) + " cases)");
            }
            doc["seed"] = report.seed;
            doc["cases"] = report.cases;
            doc["results"] = results;
            doc["passed"] = report.passed();
            status = report.passed() ? 0 : 1;
        }
        out.emit();
        return status;
    } catch (const expr::SyntaxError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const expr::EvalError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
