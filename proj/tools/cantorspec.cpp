// Command-line front end: one subcommand per library operation, CSV or JSON
// output, reproducible by construction (the echoed config plus seed pins
// every result bit-for-bit; thread count affects scheduling only).

#include <omp.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cantor/basis.hpp"
#include "cantor/gamma.hpp"
#include "cantor/moments.hpp"
#include "cantor/op_fractal.hpp"
#include "cantor/sampling.hpp"
#include "cantor/transform.hpp"
#include "cantor/version.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace cantor;

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// NaN is not representable in the output contract; emit null plus a reason.
void put_number(json& obj, const std::string& key, double x) {
    if (std::isnan(x)) {
        obj[key] = nullptr;
        obj[key + "_reason"] = "value is NaN";
    } else {
        obj[key] = x;
    }
}

struct Output {
    std::string format = "json";       // csv | json
    std::string path;                  // empty -> stdout
    std::ostringstream csv;
    json doc;

    void finish(const std::string& command, const json& config) {
        std::string text;
        if (format == "csv") {
            text = csv.str();
        } else {
            json envelope;
            envelope["schema"] = 1;
            envelope["version"] = kVersion;
            envelope["command"] = command;
            envelope["config"] = config;
            envelope["results"] = doc;
            text = envelope.dump(2);
            text.push_back('\n');
        }
        if (path.empty()) {
            std::cout << text;
            return;
        }
        fs::path target(path);
        if (target.is_relative()) {
            if (const char* dir = std::getenv("CANTORSPEC_OUTDIR"))
                target = fs::path(dir) / target;
        }
        if (target.has_parent_path()) fs::create_directories(target.parent_path());
        fs::path tmp = target;
        tmp += ".tmp";
        {
            std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
            if (!f) throw std::runtime_error("cannot open output file " + tmp.string());
            f << text;
        }
        fs::rename(tmp, target);  // atomic publish
    }
};

struct Common {
    double tol = 1e-12;
    int m = 9;
    std::int64_t scale = 1;
    std::uint64_t seed = 0;
    int threads = 0;
    double max_leakage = kDefaultLeakageCap;
    Output out;

    json base_config() const {
        json c;
        c["tol"] = tol;
        c["seed"] = seed;
        return c;
    }
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--tol", c.tol, "certified evaluation tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", c.seed, "RNG seed (echoed in output)");
    cmd->add_option("--threads", c.threads, "worker threads (0 = library default)");
    cmd->add_option("--format", c.out.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("-o,--output", c.out.path,
                    "output file (default stdout; relative paths resolve against "
                    "$CANTORSPEC_OUTDIR)");
}

CoeffVector parse_vector(const std::string& spec, const GammaSet& S) {
    if (spec.rfind("e", 0) == 0 && spec.size() > 1) {
        return basis_vector(S, std::stoll(spec.substr(1)));
    }
    if (spec.rfind("sum:", 0) == 0) {
        std::vector<std::int64_t> gs;
        std::stringstream ss(spec.substr(4));
        std::string tok;
        while (std::getline(ss, tok, ',')) gs.push_back(std::stoll(tok));
        std::vector<std::complex<double>> ws(gs.size(), {1.0, 0.0});
        return combination(S, gs, ws);
    }
    throw std::invalid_argument("unrecognized vector spec '" + spec +
                                "' (use eN or sum:g1,g2,...)");
}

void emit_moment_csv(Output& out, const MomentSequence& ms) {
    out.csv << "k,c_re,c_im,cum_leakage\n";
    for (int k = -ms.K; k <= ms.K; ++k) {
        const auto c = ms.moment(k);
        out.csv << k << ',' << fmt(c.real()) << ',' << fmt(c.imag()) << ','
                << fmt(ms.cum_leakage[static_cast<std::size_t>(k + ms.K)]) << '\n';
    }
}

json moment_summary(const MomentSequence& ms) {
    json r;
    put_number(r, "atom_at_1", atom_at_one(ms));
    put_number(r, "herglotz_defect", herglotz_defect(ms));
    put_number(r, "leakage_budget", ms.leakage_budget);
    r["K"] = ms.K;
    r["truncation"] = ms.center.index_set.size();
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral computations on the quarter-Cantor measure"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Common c;

    // transform
    auto* cmd_transform = app.add_subcommand("transform", "evaluate the cosine product");
    std::vector<double> transform_ts;
    cmd_transform->add_option("--t", transform_ts, "frequencies")->required();
    add_common(cmd_transform, c);

    // gamma
    auto* cmd_gamma = app.add_subcommand("gamma", "enumerate the spectrum");
    cmd_gamma->add_option("--m", c.m, "digit count (2^m elements)");
    cmd_gamma->add_option("--scale", c.scale, "1 for Gamma, 5 for 5*Gamma");
    add_common(cmd_gamma, c);

    // gram
    auto* cmd_gram = app.add_subcommand("gram", "Gram matrix of exponentials");
    std::vector<double> gram_freqs;
    cmd_gram->add_option("--m", c.m, "digit count; uses the first 2^m spectrum elements");
    cmd_gram->add_option("--scale", c.scale, "spectrum scale");
    cmd_gram->add_option("--freqs", gram_freqs, "explicit frequency list (overrides --m)");
    add_common(cmd_gram, c);

    // expand
    auto* cmd_expand = app.add_subcommand("expand", "ONB expansion of e_t");
    double expand_t = 0.0;
    cmd_expand->add_option("--t", expand_t, "frequency")->required();
    cmd_expand->add_option("--m", c.m, "digit count");
    cmd_expand->add_option("--scale", c.scale, "spectrum scale");
    add_common(cmd_expand, c);

    // parseval
    auto* cmd_parseval = app.add_subcommand("parseval", "Parseval partial-sum defect");
    double parseval_t = 0.0;
    cmd_parseval->add_option("--t", parseval_t, "frequency")->required();
    cmd_parseval->add_option("--m", c.m, "digit count");
    cmd_parseval->add_option("--scale", c.scale, "spectrum scale");
    add_common(cmd_parseval, c);

    // operator
    auto* cmd_operator = app.add_subcommand("operator", "truncated operator matrices");
    std::string op_kind = "U5";
    cmd_operator->add_option("--m", c.m, "digit count");
    cmd_operator->add_option("--kind", op_kind, "U5|U5adj|S0|S1|S0adj|S1adj")
        ->check(CLI::IsMember({"U5", "U5adj", "S0", "S1", "S0adj", "S1adj"}));
    add_common(cmd_operator, c);

    // regression
    auto* cmd_regression = app.add_subcommand("regression", "non-iterability computation");
    cmd_regression->add_option("--m", c.m, "digit count (9 matches the 512-term run)");
    add_common(cmd_regression, c);

    // moments / atom / ergodic
    std::string vec_spec = "e1";
    int order_K = 8;
    int cesaro_N = 64;

    auto* cmd_moments = app.add_subcommand("moments", "trigonometric moments of m_v");
    cmd_moments->add_option("--v", vec_spec, "vector (eN or sum:g1,g2,...)");
    cmd_moments->add_option("--K", order_K, "moment order");
    cmd_moments->add_option("--m", c.m, "digit count");
    cmd_moments->add_option("--max-leakage", c.max_leakage, "refusal cap on the budget");
    add_common(cmd_moments, c);

    auto* cmd_atom = app.add_subcommand("atom", "atom of m_v at z = 1");
    cmd_atom->add_option("--v", vec_spec, "vector");
    cmd_atom->add_option("--K", order_K, "moment order");
    cmd_atom->add_option("--m", c.m, "digit count");
    cmd_atom->add_option("--max-leakage", c.max_leakage, "refusal cap on the budget");
    add_common(cmd_atom, c);

    auto* cmd_ergodic = app.add_subcommand("ergodic", "Cesaro mean of U-iterates");
    cmd_ergodic->add_option("--v", vec_spec, "vector");
    cmd_ergodic->add_option("--N", cesaro_N, "Cesaro length");
    cmd_ergodic->add_option("--m", c.m, "digit count");
    cmd_ergodic->add_option("--max-leakage", c.max_leakage, "refusal cap on the budget");
    add_common(cmd_ergodic, c);

    // sample / char / pushforward / figure1
    std::size_t n_samples = 1000000;
    int depth = 30;

    auto* cmd_sample = app.add_subcommand("sample", "digit-stream sample batch");
    cmd_sample->add_option("--samples", n_samples, "sample count");
    cmd_sample->add_option("--depth", depth, "digit depth");
    add_common(cmd_sample, c);

    auto* cmd_char = app.add_subcommand("char", "empirical characteristic function");
    std::vector<double> char_ts;
    cmd_char->add_option("--t", char_ts, "frequencies (default 1..20)");
    cmd_char->add_option("--samples", n_samples, "sample count");
    cmd_char->add_option("--depth", depth, "digit depth");
    add_common(cmd_char, c);

    auto* cmd_push = app.add_subcommand("pushforward", "mass of an interval after x n mod 1");
    int n_scale = 5;
    double q_a = 2.0 / 3.0, q_b = 1.0;
    std::string frame = "unit";
    cmd_push->add_option("--n-scale", n_scale, "circle-map multiplier");
    cmd_push->add_option("--a", q_a, "interval left endpoint (open)");
    cmd_push->add_option("--b", q_b, "interval right endpoint (closed)");
    cmd_push->add_option("--frame", frame, "unit|symmetric")
        ->check(CLI::IsMember({"unit", "symmetric"}));
    cmd_push->add_option("--samples", n_samples, "sample count");
    cmd_push->add_option("--depth", depth, "digit depth");
    add_common(cmd_push, c);

    auto* cmd_fig = app.add_subcommand("figure1", "tau_5 graph and attractor refinements");
    int levels = 2, gridM = 501;
    cmd_fig->add_option("--levels", levels, "IFS refinement levels (max 12)");
    cmd_fig->add_option("--grid", gridM, "sawtooth sample count");
    add_common(cmd_fig, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (c.threads > 0) omp_set_num_threads(c.threads);

    try {
        if (cmd_transform->parsed()) {
            json cfg = c.base_config();
            cfg["t"] = transform_ts;
            const auto vals = mu_hat_batch(transform_ts, kQuarter, c.tol);
            if (c.out.format == "csv") {
                c.out.csv << "t,value,depth,tail_bound\n";
                for (const auto& v : vals)
                    c.out.csv << fmt(v.t) << ',' << fmt(v.value) << ',' << v.depth << ','
                              << fmt(v.tail_bound) << '\n';
            } else {
                json arr = json::array();
                for (const auto& v : vals) {
                    json r;
                    put_number(r, "t", v.t);
                    put_number(r, "value", v.value);
                    r["depth"] = v.depth;
                    put_number(r, "tail_bound", v.tail_bound);
                    arr.push_back(r);
                }
                c.out.doc["values"] = arr;
            }
            c.out.finish("transform", cfg);
        } else if (cmd_gamma->parsed()) {
            json cfg = c.base_config();
            cfg["m"] = c.m;
            cfg["scale"] = c.scale;
            const GammaSet S = gamma_set(c.m, c.scale);
            if (c.out.format == "csv") {
                c.out.csv << "index,gamma\n";
                for (std::size_t i = 0; i < S.size(); ++i)
                    c.out.csv << i << ',' << S.elements[i] << '\n';
            } else {
                c.out.doc["count"] = S.size();
                c.out.doc["max_element"] = S.elements.back();
            }
            c.out.finish("gamma", cfg);
        } else if (cmd_gram->parsed()) {
            json cfg = c.base_config();
            std::vector<double> freqs = gram_freqs;
            if (freqs.empty()) {
                const GammaSet S = gamma_set(c.m, c.scale);
                freqs.assign(S.elements.begin(), S.elements.end());
                cfg["m"] = c.m;
                cfg["scale"] = c.scale;
            } else {
                cfg["freqs"] = freqs;
            }
            const Matrix G = gram_matrix(freqs, c.tol);
            double max_off = 0.0, max_diag_err = 0.0;
            for (std::size_t i = 0; i < G.n; ++i)
                for (std::size_t j = 0; j < G.n; ++j) {
                    if (i == j)
                        max_diag_err = std::max(max_diag_err, std::abs(G.at(i, j) - 1.0));
                    else
                        max_off = std::max(max_off, std::abs(G.at(i, j)));
                }
            if (c.out.format == "csv") {
                c.out.csv << "i,j,value\n";
                for (std::size_t i = 0; i < G.n; ++i)
                    for (std::size_t j = 0; j < G.n; ++j)
                        c.out.csv << i << ',' << j << ',' << fmt(G.at(i, j)) << '\n';
            } else {
                c.out.doc["n"] = G.n;
                put_number(c.out.doc, "max_offdiag_abs", max_off);
                put_number(c.out.doc, "max_diag_error", max_diag_err);
            }
            c.out.finish("gram", cfg);
        } else if (cmd_expand->parsed()) {
            json cfg = c.base_config();
            cfg["t"] = expand_t;
            cfg["m"] = c.m;
            cfg["scale"] = c.scale;
            const GammaSet S = gamma_set(c.m, c.scale);
            const CoeffVector v = expand(expand_t, S, c.tol);
            if (c.out.format == "csv") {
                c.out.csv << "index,gamma,coefficient_real,coefficient_imag\n";
                for (std::size_t i = 0; i < S.size(); ++i)
                    c.out.csv << i << ',' << S.elements[i] << ',' << fmt(v.coeffs[i].real())
                              << ',' << fmt(v.coeffs[i].imag()) << '\n';
            } else {
                put_number(c.out.doc, "norm2", v.norm2);
                put_number(c.out.doc, "defect", 1.0 - v.norm2);
                c.out.doc["truncation"] = S.size();
            }
            c.out.finish("expand", cfg);
        } else if (cmd_parseval->parsed()) {
            json cfg = c.base_config();
            cfg["t"] = parseval_t;
            cfg["m"] = c.m;
            cfg["scale"] = c.scale;
            const GammaSet S = gamma_set(c.m, c.scale);
            if (c.out.format == "csv") {
                c.out.csv << "index,gamma,weight\n";
                for (std::size_t i = 0; i < S.size(); ++i) {
                    const double w =
                        mu_hat(parseval_t - static_cast<double>(S.elements[i]), kQuarter, c.tol)
                            .value;
                    c.out.csv << i << ',' << S.elements[i] << ',' << fmt(w * w) << '\n';
                }
            } else {
                put_number(c.out.doc, "defect", parseval_defect(parseval_t, S, c.tol));
                c.out.doc["truncation"] = S.size();
            }
            c.out.finish("parseval", cfg);
        } else if (cmd_operator->parsed()) {
            json cfg = c.base_config();
            cfg["m"] = c.m;
            cfg["kind"] = op_kind;
            const GammaSet S = gamma_set(c.m, 1);
            TruncatedOperator op;
            if (op_kind == "U5")
                op = build_U(S, c.tol);
            else if (op_kind == "U5adj")
                op = adjoint(build_U(S, c.tol));
            else if (op_kind == "S0")
                op = build_S(S, 0);
            else if (op_kind == "S1")
                op = build_S(S, 1);
            else if (op_kind == "S0adj")
                op = adjoint(build_S(S, 0));
            else
                op = adjoint(build_S(S, 1));
            if (c.out.format == "csv") {
                c.out.csv << "i,j,value\n";
                for (std::size_t i = 0; i < op.entries.n; ++i)
                    for (std::size_t j = 0; j < op.entries.n; ++j)
                        c.out.csv << i << ',' << j << ',' << fmt(op.entries.at(i, j)) << '\n';
            } else {
                double cmin = 1e300, cmax = 0.0;
                for (std::size_t j = 0; j < op.entries.n; ++j) {
                    double s = 0.0;
                    for (std::size_t i = 0; i < op.entries.n; ++i)
                        s += op.entries.at(i, j) * op.entries.at(i, j);
                    cmin = std::min(cmin, s);
                    cmax = std::max(cmax, s);
                }
                c.out.doc["n"] = op.entries.n;
                put_number(c.out.doc, "column_norm2_min", cmin);
                put_number(c.out.doc, "column_norm2_max", cmax);
                if (op_kind == "U5") {
                    const CommutatorNorms cn = commutator_norms(S, c.tol);
                    put_number(c.out.doc, "us0_minus_s0u", cn.us0_minus_s0u);
                    put_number(c.out.doc, "us1_minus_s1u", cn.us1_minus_s1u);
                    c.out.doc["closed0"] = cn.closed0;
                    c.out.doc["closed1"] = cn.closed1;
                }
            }
            c.out.finish("operator", cfg);
        } else if (cmd_regression->parsed()) {
            json cfg = c.base_config();
            cfg["m"] = c.m;
            const RegressionRecord r = iterate_regression(c.m, c.tol);
            if (c.out.format == "csv") {
                c.out.csv << "coeff_e5_of_U3e1,coeff_e5_of_e125,terms\n"
                          << fmt(r.coeff_e5_of_U3e1) << ',' << fmt(r.coeff_e5_of_e125) << ','
                          << r.terms << '\n';
            } else {
                put_number(c.out.doc, "coeff_e5_of_U3e1", r.coeff_e5_of_U3e1);
                put_number(c.out.doc, "coeff_e5_of_e125", r.coeff_e5_of_e125);
                c.out.doc["terms"] = r.terms;
            }
            c.out.finish("regression", cfg);
        } else if (cmd_moments->parsed() || cmd_atom->parsed()) {
            const bool is_atom = cmd_atom->parsed();
            json cfg = c.base_config();
            cfg["v"] = vec_spec;
            cfg["K"] = order_K;
            cfg["m"] = c.m;
            cfg["max_leakage"] = c.max_leakage;
            const GammaSet S = gamma_set(c.m, 1);
            const CoeffVector v = parse_vector(vec_spec, S);
            const MomentSequence ms = moments(v, order_K, S, c.tol, c.max_leakage);
            if (c.out.format == "csv")
                emit_moment_csv(c.out, ms);
            else
                c.out.doc = moment_summary(ms);
            c.out.finish(is_atom ? "atom" : "moments", cfg);
        } else if (cmd_ergodic->parsed()) {
            json cfg = c.base_config();
            cfg["v"] = vec_spec;
            cfg["N"] = cesaro_N;
            cfg["m"] = c.m;
            cfg["max_leakage"] = c.max_leakage;
            const GammaSet S = gamma_set(c.m, 1);
            const CoeffVector f = parse_vector(vec_spec, S);
            const CesaroResult r = cesaro_average(f, cesaro_N, S, c.tol, c.max_leakage);
            if (c.out.format == "csv") {
                const MomentSequence ms = moments(f, cesaro_N, S, c.tol, c.max_leakage);
                emit_moment_csv(c.out, ms);
            } else {
                put_number(c.out.doc, "projection_re", r.projection_coeff.real());
                put_number(c.out.doc, "projection_im", r.projection_coeff.imag());
                put_number(c.out.doc, "residual_norm", r.residual_norm);
                put_number(c.out.doc, "leakage_budget", r.leakage_budget);
                c.out.doc["N"] = cesaro_N;
                c.out.doc["truncation"] = S.size();
            }
            c.out.finish("ergodic", cfg);
        } else if (cmd_sample->parsed()) {
            json cfg = c.base_config();
            cfg["samples"] = n_samples;
            cfg["depth"] = depth;
            const SampleBatch b = sample_batch(kQuarter, depth, n_samples, c.seed);
            if (c.out.format == "csv") {
                c.out.csv << "index,x,y\n";
                for (std::size_t i = 0; i < b.points.size(); ++i)
                    c.out.csv << i << ',' << fmt(b.points[i]) << ','
                              << fmt(b.points[i] + 1.0 / 3.0) << '\n';
            } else {
                double mn = 1e300, mx = -1e300, mean = 0.0;
                for (const double x : b.points) {
                    mn = std::min(mn, x);
                    mx = std::max(mx, x);
                    mean += x;
                }
                mean /= static_cast<double>(b.points.size());
                c.out.doc["n"] = b.points.size();
                put_number(c.out.doc, "mean", mean);
                put_number(c.out.doc, "min", mn);
                put_number(c.out.doc, "max", mx);
            }
            c.out.finish("sample", cfg);
        } else if (cmd_char->parsed()) {
            json cfg = c.base_config();
            if (char_ts.empty())
                for (int t = 1; t <= 20; ++t) char_ts.push_back(t);
            cfg["t"] = char_ts;
            cfg["samples"] = n_samples;
            cfg["depth"] = depth;
            const SampleBatch b = sample_batch(kQuarter, depth, n_samples, c.seed);
            double worst = 0.0;
            json arr = json::array();
            if (c.out.format == "csv") c.out.csv << "t,re,im,product_value,abs_err\n";
            for (const double t : char_ts) {
                const auto e = empirical_char(t, b);
                const double p = mu_hat(t, kQuarter, c.tol).value;
                const double err = std::abs(e - std::complex<double>{p, 0.0});
                worst = std::max(worst, err);
                if (c.out.format == "csv") {
                    c.out.csv << fmt(t) << ',' << fmt(e.real()) << ',' << fmt(e.imag()) << ','
                              << fmt(p) << ',' << fmt(err) << '\n';
                } else {
                    json r;
                    put_number(r, "t", t);
                    put_number(r, "re", e.real());
                    put_number(r, "im", e.imag());
                    put_number(r, "product_value", p);
                    put_number(r, "abs_err", err);
                    arr.push_back(r);
                }
            }
            if (c.out.format == "json") {
                c.out.doc["values"] = arr;
                put_number(c.out.doc, "worst_abs_err", worst);
                put_number(c.out.doc, "bound_4_over_sqrt_n",
                           4.0 / std::sqrt(static_cast<double>(n_samples)));
            }
            c.out.finish("char", cfg);
        } else if (cmd_push->parsed()) {
            json cfg = c.base_config();
            cfg["n_scale"] = n_scale;
            cfg["a"] = q_a;
            cfg["b"] = q_b;
            cfg["frame"] = frame;
            cfg["samples"] = n_samples;
            cfg["depth"] = depth;
            const SampleBatch b = sample_batch(kQuarter, depth, n_samples, c.seed);
            const IntervalQuery q{q_a, q_b,
                                  frame == "unit" ? IntervalQuery::Frame::UnitEmbedded
                                                  : IntervalQuery::Frame::Symmetric};
            const MassEstimate e = pushforward_mass(b, n_scale, q);
            if (c.out.format == "csv") {
                c.out.csv << "n_scale,a,b,estimate,wilson_lo,wilson_hi,count,n\n"
                          << n_scale << ',' << fmt(q_a) << ',' << fmt(q_b) << ','
                          << fmt(e.estimate) << ',' << fmt(e.wilson_lo) << ','
                          << fmt(e.wilson_hi) << ',' << e.count << ',' << e.n << '\n';
            } else {
                put_number(c.out.doc, "estimate", e.estimate);
                put_number(c.out.doc, "wilson_lo", e.wilson_lo);
                put_number(c.out.doc, "wilson_hi", e.wilson_hi);
                c.out.doc["count"] = e.count;
                c.out.doc["n"] = e.n;
            }
            c.out.finish("pushforward", cfg);
        } else if (cmd_fig->parsed()) {
            json cfg = c.base_config();
            cfg["levels"] = levels;
            cfg["grid"] = gridM;
            const Figure1Data d = figure1_data(levels, gridM);
            if (c.out.format == "csv") {
                c.out.csv << "kind,level,index,a,b\n";
                for (std::size_t i = 0; i < d.sawtooth.size(); ++i)
                    c.out.csv << "sawtooth,0," << i << ',' << fmt(d.sawtooth[i].x) << ','
                              << fmt(d.sawtooth[i].y) << '\n';
                for (std::size_t i = 0; i < d.cantor_levels.size(); ++i)
                    c.out.csv << "cantor," << d.cantor_levels[i].level << ',' << i << ','
                              << fmt(d.cantor_levels[i].lo) << ',' << fmt(d.cantor_levels[i].hi)
                              << '\n';
                for (std::size_t i = 0; i < d.preimages.size(); ++i)
                    c.out.csv << "preimage,0," << i << ',' << fmt(d.preimages[i].lo) << ','
                              << fmt(d.preimages[i].hi) << '\n';
            } else {
                c.out.doc["sawtooth_points"] = d.sawtooth.size();
                c.out.doc["cantor_intervals"] = d.cantor_levels.size();
                c.out.doc["preimage_intervals"] = d.preimages.size();
            }
            c.out.finish("figure1", cfg);
        }
    } catch (const TruncationError& e) {
        std::cerr << "truncation refusal: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "argument error: " << e.what() << '\n';
        return 2;
    } catch (const std::range_error& e) {
        std::cerr << "range error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
