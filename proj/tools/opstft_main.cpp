// Command-line surface over the library.  Every command prints a JSON
// report to stdout and obeys the exit-code contract:
//   0  success
//   2  input error (parse failure, dimension mismatch, bad parameters)
//   3  verification failure (a pass flag came out false)
// The dimension N is always inferred from input files and cross-checked
// across them, never taken as a flag.  Seeded randomness is reproduced
// from a documented generator (mt19937_64 with explicit Box-Muller), so
// reports are identical across platforms for a fixed --seed.

#include "CLI11.hpp"
#include "json.hpp"

#include "opstft/coorbit.hpp"
#include "opstft/gframe.hpp"
#include "opstft/hs_algebra.hpp"
#include "opstft/io.hpp"
#include "opstft/norms.hpp"
#include "opstft/op_stft.hpp"
#include "opstft/phase_space.hpp"
#include "opstft/rng.hpp"
#include "opstft/weights.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using json = nlohmann::json;
using namespace opstft;

// 1e-9 unless OPSTFT_TOL supplies a decimal literal
double verification_tolerance() {
    const char* env = std::getenv("OPSTFT_TOL");
    if (!env || !*env) return 1e-9;
    char* end = nullptr;
    double tol = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(tol > 0.0))
        throw std::runtime_error(std::string("OPSTFT_TOL: not a positive decimal literal: \"") +
                                 env + "\"");
    return tol;
}

struct Report {
    json doc;

    explicit Report(const std::string& command) {
        doc["command"] = command;
        doc["inputs"] = json::object();
        doc["values"] = json::object();
        doc["residuals"] = json::object();
        doc["pass"] = json::object();
    }

    void input(const std::string& path) { doc["inputs"][path] = file_digest(path); }
    void seed(uint64_t s) { doc["seed"] = s; }
    void value(const std::string& name, const json& v) { doc["values"][name] = v; }
    void residual(const std::string& name, double r) { doc["residuals"][name] = r; }
    void check(const std::string& name, bool ok) { doc["pass"][name] = ok; }

    int emit() const {
        std::cout << doc.dump(2) << std::endl;
        for (const auto& [name, ok] : doc["pass"].items())
            if (!ok.get<bool>()) return 3;
        return 0;
    }
};

int require_same_n(int have, Eigen::Index got, const std::string& path) {
    if (have != 0 && have != static_cast<int>(got))
        throw std::runtime_error(path + ": dimension " + std::to_string(got) +
                                 " does not match expected N = " + std::to_string(have));
    return static_cast<int>(got);
}

// parses "inf" or a decimal >= 1
double parse_exponent(const std::string& text, const std::string& flag) {
    if (text == "inf" || text == "Inf" || text == "INF") return kInf;
    char* end = nullptr;
    double p = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0' || !(p >= 1.0))
        throw std::runtime_error(flag + ": expected a number >= 1 or \"inf\", got \"" + text +
                                 "\"");
    return p;
}

double field_scale(const OperatorField& psi) { return std::max(psi.max_cell_norm(), 1e-300); }

// ── transform ────────────────────────────────────────────────────────

int cmd_transform(const std::string& window_path, const std::string& target_path,
                  const std::string& spectrogram_path, const std::string& field_path) {
    Report report("transform");
    OperatorMatrix window = read_matrix_json(window_path);
    report.input(window_path);
    int n = require_same_n(0, window.rows(), window_path);
    OperatorMatrix target = read_matrix_json(target_path);
    report.input(target_path);
    require_same_n(n, target.rows(), target_path);

    OperatorField field = op_stft(window, target);
    report.value("n", n);
    report.value("max_cell_norm", field.max_cell_norm());
    if (!spectrogram_path.empty()) {
        write_real_grid_csv(spectrogram_path, field.hs_norm_field());
        report.value("spectrogram", spectrogram_path);
    }
    if (!field_path.empty()) {
        write_field_json(field_path, field);
        report.value("field", field_path);
    }
    return report.emit();
}

// ── verify ───────────────────────────────────────────────────────────

void suite_moyal(Report& report, SeededRng& rng, int n, double tol) {
    OperatorMatrix s = rng.matrix(n), t = rng.matrix(n), q = rng.matrix(n), r = rng.matrix(n);
    MoyalPair pair = moyal_orthogonality(s, t, q, r);
    double rel = std::abs(pair.lhs - pair.rhs) / std::max(std::abs(pair.rhs), 1e-300);
    report.residual("quadruple", rel);
    report.check("quadruple", rel <= tol);

    OperatorMatrix su = rng.unit_matrix(n), tu = rng.unit_matrix(n);
    MoyalPair iso = moyal_orthogonality(su, tu, su, tu);
    double dev = std::max(std::abs(iso.lhs - 1.0), std::abs(iso.rhs - 1.0));
    report.residual("isometry", dev);
    report.check("isometry", dev <= tol);
}

void suite_twisted(Report& report, SeededRng& rng, int n, double tol) {
    OperatorMatrix q = rng.matrix(n), t = rng.matrix(n), s = rng.matrix(n), r = rng.matrix(n);
    OperatorField got = twisted_conv(op_stft(q, t), op_stft(s, r));
    OperatorField want = hs_inner(r, q) * op_stft(s, t);
    double rel = (got - want).max_cell_norm() / field_scale(want);
    report.residual("composition", rel);
    report.check("composition", rel <= tol);
}

void suite_projection(Report& report, SeededRng& rng, int n, double tol) {
    OperatorMatrix s = rng.unit_matrix(n);
    OperatorField psi(n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) psi.at(k, l) = rng.matrix(n);

    OperatorField once = kernel_project(s, psi);
    OperatorField twice = kernel_project(s, once);
    double idem = (twice - once).max_cell_norm() / field_scale(once);
    report.residual("idempotency", idem);
    report.check("idempotency", idem <= tol);

    OperatorMatrix t = rng.matrix(n);
    MembershipResult inside = membership_check(op_stft(s, t), s);
    report.residual("member_residual", inside.residual);
    report.check("member", inside.is_member);

    MembershipResult outside = membership_check(psi, s);
    report.residual("nonmember_residual", outside.residual);
    report.check("nonmember_rejected", !outside.is_member);

    MembershipResult zero = membership_check(OperatorField(n), s);
    report.residual("zero_field_residual", zero.residual);
    report.check("zero_field", zero.is_member && zero.residual == 0.0);
}

void suite_correspondence(Report& report, SeededRng& rng, int n, double tol) {
    OperatorMatrix s = rng.unit_matrix(n), t = rng.matrix(n);
    OperatorMatrix back = correspondence_inverse(correspondence_forward(t, s), s);
    double round = (back - t).norm() / t.norm();
    report.residual("inversion", round);
    report.check("inversion", round <= tol);

    OperatorField psi(n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) psi.at(k, l) = rng.matrix(n);
    OperatorField projected = correspondence_forward(correspondence_inverse(psi, s), s);
    OperatorField want = kernel_project(s, psi);
    double proj = (projected - want).max_cell_norm() / field_scale(want);
    report.residual("projection_composition", proj);
    report.check("projection_composition", proj <= tol);
}

void suite_toeplitz(Report& report, SeededRng& rng, int n, double tol) {
    OperatorMatrix s = rng.unit_matrix(n), t = rng.matrix(n);
    ScalarField f = rng.scalar_field(n);
    OperatorMatrix via_transform = toeplitz(s, f, t);
    OperatorMatrix via_convolution = conv_fun_op(f, s * s.adjoint()) * t;
    double rel = (via_transform - via_convolution).norm() / via_convolution.norm();
    report.residual("two_formulas", rel);
    report.check("two_formulas", rel <= tol);
}

void suite_young(Report& report, SeededRng& rng, int n, double tol) {
    OperatorField f(n), h(n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            f.at(k, l) = rng.matrix(n);
            h.at(k, l) = rng.matrix(n);
        }
    Weight one = Weight::ones(n);
    Weight poly = polynomial_weight(1.0, n);
    struct Combo {
        const char* name;
        const Weight& v;
        const Weight& m;
    };
    const Combo combos[] = {{"flat", one, one}, {"poly_flat", poly, one}, {"poly_poly", poly, poly}};
    const double pqs[][2] = {{1.0, 1.0}, {2.0, 2.0}};
    for (const Combo& combo : combos)
        for (auto& pq : pqs) {
            YoungPair pair = young_twisted_check(f, h, combo.v, combo.m, pq[0], pq[1]);
            std::string name = std::string(combo.name) + "_p" + std::to_string(int(pq[0])) +
                               "q" + std::to_string(int(pq[1]));
            double margin = (pair.rhs - pair.lhs) / std::max(pair.rhs, 1e-300);
            report.residual(name, margin);
            report.check(name, pair.lhs <= pair.rhs * (1.0 + tol));
        }
    bool rejected = false;
    try {
        young_twisted_check(f, h, one, poly, 1.0, 1.0);
    } catch (const std::invalid_argument&) {
        rejected = true;
    }
    report.check("rejects_non_moderate", rejected);
}

int cmd_verify(const std::string& suite, int n, uint64_t seed) {
    if (n < 2 || n > 16) throw std::runtime_error("verify: --n must lie in [2, 16]");
    Report report("verify");
    report.value("suite", suite);
    report.value("n", n);
    report.seed(seed);
    double tol = verification_tolerance();
    report.value("tolerance", tol);
    SeededRng rng(seed);
    if (suite == "moyal")
        suite_moyal(report, rng, n, tol);
    else if (suite == "twisted")
        suite_twisted(report, rng, n, tol);
    else if (suite == "projection")
        suite_projection(report, rng, n, tol);
    else if (suite == "correspondence")
        suite_correspondence(report, rng, n, tol);
    else if (suite == "toeplitz")
        suite_toeplitz(report, rng, n, tol);
    else if (suite == "young")
        suite_young(report, rng, n, tol);
    return report.emit();
}

// ── framebounds ──────────────────────────────────────────────────────

int cmd_framebounds(const std::string& window_path, int alpha, int beta) {
    Report report("framebounds");
    OperatorMatrix window = read_matrix_json(window_path);
    report.input(window_path);
    int n = static_cast<int>(window.rows());
    Lattice lat(alpha, beta, n);  // throws on non-divisibility
    FrameReport bounds = frame_bounds(window, lat);
    report.value("n", n);
    report.value("alpha", alpha);
    report.value("beta", beta);
    report.value("lower", bounds.lower);
    report.value("upper", bounds.upper);
    report.value("is_frame", bounds.is_frame);
    report.value("condition", bounds.is_frame ? json(bounds.condition) : json("inf"));
    return report.emit();
}

// ── coorbitnorm ──────────────────────────────────────────────────────

int cmd_coorbitnorm(const std::string& window_path, const std::string& target_path,
                    const std::string& p_text, const std::string& q_text,
                    const std::string& weight_path, const std::string& window2_path) {
    Report report("coorbitnorm");
    double p = parse_exponent(p_text, "--p");
    double q = parse_exponent(q_text, "--q");
    OperatorMatrix window = read_matrix_json(window_path);
    report.input(window_path);
    int n = require_same_n(0, window.rows(), window_path);
    OperatorMatrix target = read_matrix_json(target_path);
    report.input(target_path);
    require_same_n(n, target.rows(), target_path);

    Weight m = Weight::ones(n);
    if (!weight_path.empty()) {
        RealGrid grid = read_real_grid_csv(weight_path);
        report.input(weight_path);
        require_same_n(n, grid.rows(), weight_path);
        require_same_n(n, grid.cols(), weight_path);
        m = Weight(grid);
    }
    if (window.norm() == 0.0)
        throw std::runtime_error(window_path + ": window must be nonzero");

    double norm = mixed_norm(op_stft(window, target), p, q, m);
    report.value("n", n);
    report.value("p", p_text);
    report.value("q", q_text);
    report.value("norm", norm);

    if (!window2_path.empty()) {
        OperatorMatrix second = read_matrix_json(window2_path);
        report.input(window2_path);
        require_same_n(n, second.rows(), window2_path);
        // rigorous sandwich constants need a submultiplicative envelope
        if (!check_submultiplicative(m).ok)
            throw std::runtime_error(weight_path +
                                     ": equivalence bounds need a submultiplicative weight");
        CoorbitParams params = make_coorbit_params(window, p, q, m, m);
        EquivalenceBounds eq = window_equivalence(second, window, params);
        double norm2 = coorbit_norm(target, make_coorbit_params(second, p, q, m, m));
        double ratio = norm2 / std::max(norm, 1e-300);
        report.value("norm2", norm2);
        report.value("lower", eq.lower);
        report.value("upper", eq.upper);
        report.value("cross_base_second", eq.cross_s0_r);
        report.value("cross_second_base", eq.cross_r_s0);
        report.value("ratio", ratio);
        double tol = verification_tolerance();
        report.check("sandwich", ratio >= eq.lower * (1.0 - tol) - tol &&
                                     ratio <= eq.upper * (1.0 + tol) + tol);
    }
    return report.emit();
}

// ── localize ─────────────────────────────────────────────────────────

int cmd_localize(const std::string& phi_path, const std::string& symbol_path,
                 const std::string& out_path, bool characterize, int alpha, int beta,
                 const std::string& p_text, const std::string& q_text,
                 const std::string& target_path, uint64_t seed) {
    Report report("localize");
    Signal phi = read_signal_csv(phi_path);
    report.input(phi_path);
    int n = require_same_n(0, phi.size(), phi_path);
    RealGrid h = read_real_grid_csv(symbol_path);
    report.input(symbol_path);
    require_same_n(n, h.rows(), symbol_path);
    require_same_n(n, h.cols(), symbol_path);
    if ((h < 0.0).any())
        throw std::runtime_error(symbol_path + ": symbol entries must be nonnegative");

    OperatorMatrix a = localization_op(phi, h.cast<Complex>().matrix());
    Lattice lat(alpha, beta, n);
    SymbolBounds symbol = symbol_frame_condition(h, lat);
    report.value("n", n);
    report.value("alpha", alpha);
    report.value("beta", beta);
    report.value("operator_norm", schatten_norm(a, kInf));
    report.value("symbol_lower", symbol.lower);
    report.value("symbol_upper", symbol.upper);
    if (!out_path.empty()) {
        write_matrix_json(out_path, a);
        report.value("out", out_path);
    }

    if (characterize) {
        double p = parse_exponent(p_text, "--p");
        double q = parse_exponent(q_text, "--q");
        OperatorMatrix target;
        if (!target_path.empty()) {
            target = read_matrix_json(target_path);
            report.input(target_path);
            require_same_n(n, target.rows(), target_path);
        } else {
            report.seed(seed);
            target = SeededRng(seed).matrix(n);
        }
        double norm = characterization_seq(target, phi, h, lat, p, q, Weight::ones(n));
        EigenBracket bracket = characterization_bracket(phi, h, lat);
        report.value("seq_norm", norm);
        report.value("bracket_lower", bracket.lower);
        report.value("bracket_upper", bracket.upper);
        if (p == 2.0 && q == 2.0) {
            double tol = verification_tolerance();
            double sq = norm * norm, scale = target.squaredNorm();
            report.check("bracket", sq >= bracket.lower * scale * (1.0 - tol) - tol &&
                                        sq <= bracket.upper * scale * (1.0 + tol) + tol);
        }
    }
    return report.emit();
}

// ── correlate ────────────────────────────────────────────────────────

int cmd_correlate(const std::vector<std::string>& signal_paths, const std::string& out_path) {
    Report report("correlate");
    int n = 0;
    std::vector<Signal> signals;
    for (const std::string& path : signal_paths) {
        Signal f = read_signal_csv(path);
        report.input(path);
        n = require_same_n(n, f.size(), path);
        signals.push_back(std::move(f));
    }
    if (static_cast<int>(signals.size()) > n)
        throw std::runtime_error("correlate: at most N = " + std::to_string(n) +
                                 " signals fit one data operator");

    OperatorMatrix data = OperatorMatrix::Zero(n, n);
    for (size_t i = 0; i < signals.size(); ++i)
        data += rank_one(signals[i], basis_vector(n, static_cast<int>(i)));
    RealGrid field = spectrogram(data, data);
    RealGrid squared = field * field;  // total correlation sums |V_{f_n} f_m|^2
    write_real_grid_csv(out_path, squared);
    report.value("n", n);
    report.value("signals", static_cast<int>(signals.size()));
    report.value("out", out_path);
    report.value("peak", squared.maxCoeff());
    return report.emit();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"operator-valued short-time Fourier analysis on Z_N x Z_N"};
    app.require_subcommand(1);

    std::string window_path, target_path, spectrogram_path, field_path;
    auto* transform = app.add_subcommand("transform", "operator STFT of target against window");
    transform->add_option("--window", window_path, "window operator (JSON)")->required();
    transform->add_option("--target", target_path, "target operator (JSON)")->required();
    transform->add_option("--spectrogram", spectrogram_path, "write hs-norm field CSV here");
    transform->add_option("--field", field_path, "write full operator field JSON here");

    std::string suite;
    int verify_n = 8;
    uint64_t seed = 1;
    auto* verify = app.add_subcommand("verify", "run a seeded identity suite");
    verify->add_option("--suite", suite, "one of moyal|twisted|projection|correspondence|toeplitz|young")
        ->required()
        ->check(CLI::IsMember({"moyal", "twisted", "projection", "correspondence", "toeplitz",
                               "young"}));
    verify->add_option("--n", verify_n, "dimension (2..16)");
    verify->add_option("--seed", seed, "random seed");

    std::string fb_window;
    int alpha = 1, beta = 1;
    auto* framebounds = app.add_subcommand("framebounds", "g-frame bounds over a lattice");
    framebounds->add_option("--window", fb_window, "window operator (JSON)")->required();
    framebounds->add_option("--alpha", alpha, "time step (divides N)")->required();
    framebounds->add_option("--beta", beta, "frequency step (divides N)")->required();

    std::string cn_window, cn_target, cn_p = "2", cn_q = "2", cn_weight, cn_window2;
    auto* coorbitnorm = app.add_subcommand("coorbitnorm", "weighted coorbit norm of a target");
    coorbitnorm->add_option("--window", cn_window, "analyzing window (JSON)")->required();
    coorbitnorm->add_option("--target", cn_target, "target operator (JSON)")->required();
    coorbitnorm->add_option("--p", cn_p, "inner exponent (>= 1 or inf)")->required();
    coorbitnorm->add_option("--q", cn_q, "outer exponent (>= 1 or inf)")->required();
    coorbitnorm->add_option("--weight", cn_weight, "weight grid CSV (default: flat)");
    coorbitnorm->add_option("--window2", cn_window2,
                            "second window: also report equivalence bounds");

    std::string lo_phi, lo_symbol, lo_out, lo_p = "2", lo_q = "2", lo_target;
    bool characterize = false;
    int lo_alpha = 1, lo_beta = 1;
    uint64_t lo_seed = 1;
    auto* localize = app.add_subcommand("localize", "localization operator from a symbol");
    localize->add_option("--phi", lo_phi, "window signal CSV (rows re,im)")->required();
    localize->add_option("--symbol", lo_symbol, "nonnegative symbol grid CSV")->required();
    localize->add_option("--out", lo_out, "write the operator matrix JSON here");
    localize->add_flag("--characterize", characterize,
                       "also compute the localization-translate sequence norm");
    localize->add_option("--alpha", lo_alpha, "lattice time step");
    localize->add_option("--beta", lo_beta, "lattice frequency step");
    localize->add_option("--p", lo_p, "sequence inner exponent");
    localize->add_option("--q", lo_q, "sequence outer exponent");
    localize->add_option("--target", lo_target, "target operator JSON (default: seeded)");
    localize->add_option("--seed", lo_seed, "seed for the default target");

    std::vector<std::string> signal_paths;
    std::string co_out = "correlation.csv";
    auto* correlate = app.add_subcommand("correlate", "squared total-correlation field");
    correlate->add_option("--signals", signal_paths, "signal CSV files (each N rows re,im)")
        ->required()
        ->expected(1, -1);
    correlate->add_option("--out", co_out, "output CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (transform->parsed())
            return cmd_transform(window_path, target_path, spectrogram_path, field_path);
        if (verify->parsed()) return cmd_verify(suite, verify_n, seed);
        if (framebounds->parsed()) return cmd_framebounds(fb_window, alpha, beta);
        if (coorbitnorm->parsed())
            return cmd_coorbitnorm(cn_window, cn_target, cn_p, cn_q, cn_weight, cn_window2);
        if (localize->parsed())
            return cmd_localize(lo_phi, lo_symbol, lo_out, characterize, lo_alpha, lo_beta,
                                lo_p, lo_q, lo_target, lo_seed);
        if (correlate->parsed()) return cmd_correlate(signal_paths, co_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
