// tcoulomb: exact and numerical spectra of the truncated Coulomb potential
// V(r) = -beta/(r+1). Emits machine-readable results (CSV with #-metadata,
// or JSON) for every library operation, plus figure-reproduction data.

#include <CLI11.hpp>
#include <json.hpp>

#include <tcoulomb/errors.hpp>
#include <tcoulomb/frobenius.hpp>
#include <tcoulomb/model.hpp>
#include <tcoulomb/oracle.hpp>
#include <tcoulomb/spectrum.hpp>
#include <tcoulomb/version.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace tcoulomb;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int k = 1; k < argc; ++k) {
        if (k > 1) s += ' ';
        s += argv[k];
    }
    return s;
}

// CODATA 2018 hydrogen preset (Z = 1, reduced mass of the e-p system)
PhysicalParams hydrogen_preset(double r0) {
    constexpr double kElectronMass = 9.1093837015e-31;
    constexpr double kProtonMass = 1.67262192369e-27;
    PhysicalParams p;
    p.mass = kElectronMass / (1.0 + kElectronMass / kProtonMass);
    p.charge = 1.602176634e-19;
    p.atomic_number = 1;
    p.epsilon0 = 8.8541878128e-12;
    p.cutoff_radius = r0;
    p.hbar = 1.054571817e-34;
    return p;
}

struct Output {
    std::string format = "csv";  // csv | json
    std::string path = "-";      // "-" means stdout

    void add_common_flags(CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        cmd->add_option("--out", path, "Output path ('-' for stdout)")->capture_default_str();
    }
};

void write_text(const Output& out, const std::string& text) {
    if (out.path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out.path, std::ios::binary);
    if (!f) throw UsageError("cannot open output path: " + out.path);
    f << text;
}

// rows share one flat schema per command; every number at 17 significant digits
struct Table {
    std::string schema;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;  // pre-formatted cells
    json json_rows = json::array();

    void emit(const Output& out, const std::string& cmdline) const {
        if (out.format == "csv") {
            std::ostringstream os;
            os << "# tcoulomb " << kVersion << "\n";
            os << "# command: " << cmdline << "\n";
            os << "# schema: " << schema << "\n";
            for (std::size_t c = 0; c < columns.size(); ++c) {
                os << columns[c] << (c + 1 < columns.size() ? "," : "");
            }
            os << "\n";
            for (const auto& row : rows) {
                for (std::size_t c = 0; c < row.size(); ++c) {
                    os << row[c] << (c + 1 < row.size() ? "," : "");
                }
                os << "\n";
            }
            write_text(out, os.str());
        } else {
            json doc;
            doc["tool"] = "tcoulomb";
            doc["version"] = kVersion;
            doc["command"] = cmdline;
            doc["schema"] = schema;
            doc["results"] = json_rows;
            write_text(out, doc.dump(2) + "\n");
        }
    }
};

std::string coeffs_cell(const std::vector<double>& coeffs) {
    std::string s;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (k) s += ' ';
        s += fmt17(coeffs[k]);
    }
    return s;
}

void append_solution(Table& t, const ExactSolution& s) {
    const double big_n = s.n + s.l + 2;
    const double energy_breve = s.energy_tilde / (s.beta * s.beta);
    t.rows.push_back({std::to_string(s.n), std::to_string(s.l), std::to_string(s.i),
                      fmt17(s.alpha), fmt17(s.beta), std::to_string(s.nodes),
                      fmt17(s.energy_tilde), fmt17(energy_breve),
                      "\"" + coeffs_cell(s.coeffs) + "\""});
    json r;
    r["n"] = s.n;
    r["l"] = s.l;
    r["i"] = s.i;
    r["alpha"] = s.alpha;
    r["beta"] = s.beta;
    r["nu"] = s.nodes;
    r["energy_tilde"] = s.energy_tilde;
    r["energy_breve"] = energy_breve;
    r["coeffs"] = s.coeffs;
    (void)big_n;
    t.json_rows.push_back(std::move(r));
}

const char* source_name(PointSource s) {
    switch (s) {
        case PointSource::exact: return "exact";
        case PointSource::oracle: return "oracle";
        case PointSource::interpolated: return "interpolated";
    }
    return "?";
}

int cmd_exact(int n, int l, double tol, const Output& out, const std::string& cmdline) {
    Table t;
    t.schema = "exact v1";
    t.columns = {"n", "l", "i", "alpha", "beta", "nu", "energy_tilde", "energy_breve", "coeffs"};
    for (const auto& s : solve_truncation(n, l, tol)) append_solution(t, s);
    t.emit(out, cmdline);
    return 0;
}

int cmd_curve(int nu, int l, int n_max, double tol, const Output& out, const std::string& cmdline) {
    SpectralCurve c = build_curve(nu, l, n_max, tol);
    Table t;
    t.schema = "curve v1";
    t.columns = {"nu", "l", "n", "i", "beta", "alpha", "source"};
    for (const auto& p : c.points) {
        t.rows.push_back({std::to_string(c.nu), std::to_string(c.l), std::to_string(p.n),
                          std::to_string(p.i), fmt17(p.beta), fmt17(p.alpha), source_name(p.source)});
        json r;
        r["nu"] = c.nu;
        r["l"] = c.l;
        r["n"] = p.n;
        r["i"] = p.i;
        r["beta"] = p.beta;
        r["alpha"] = p.alpha;
        r["source"] = source_name(p.source);
        t.json_rows.push_back(std::move(r));
    }
    t.emit(out, cmdline);
    return 0;
}

int cmd_interp(int nu, int l, int n_max, double beta, double tol, const Output& out,
               const std::string& cmdline) {
    SpectralCurve c = build_curve(nu, l, n_max, tol);
    const double alpha = interpolate(c, beta);
    Table t;
    t.schema = "interp v1";
    t.columns = {"nu", "l", "beta", "alpha", "n_points", "source"};
    t.rows.push_back({std::to_string(nu), std::to_string(l), fmt17(beta), fmt17(alpha),
                      std::to_string(c.points.size()), "interpolated"});
    json r;
    r["nu"] = nu;
    r["l"] = l;
    r["beta"] = beta;
    r["alpha"] = alpha;
    r["n_points"] = c.points.size();
    r["source"] = "interpolated";
    t.json_rows.push_back(std::move(r));
    t.emit(out, cmdline);
    return 0;
}

int cmd_oracle(double beta, int l, int nu, double tol, const Output& out, const std::string& cmdline) {
    OracleResult r = solve_state(make_problem(beta, l, nu, tol), nu);
    Table t;
    t.schema = "oracle v1";
    t.columns = {"beta", "l", "nu", "alpha", "energy_tilde", "grid_error_estimate"};
    t.rows.push_back({fmt17(beta), std::to_string(l), std::to_string(r.nu), fmt17(r.alpha),
                      fmt17(r.energy_tilde), fmt17(r.grid_error_estimate)});
    json j;
    j["beta"] = beta;
    j["l"] = l;
    j["nu"] = r.nu;
    j["alpha"] = r.alpha;
    j["energy_tilde"] = r.energy_tilde;
    j["grid_error_estimate"] = r.grid_error_estimate;
    t.json_rows.push_back(std::move(j));
    t.emit(out, cmdline);
    return 0;
}

int cmd_wavefn(int n, int l, int i, double r_max, int samples, double tol, const Output& out,
               const std::string& cmdline) {
    auto sols = solve_truncation(n, l, tol);
    if (i < 1 || i > static_cast<int>(sols.size())) {
        throw UsageError("root index i must lie in [1, " + std::to_string(sols.size()) + "]");
    }
    const ExactSolution& s = sols[static_cast<std::size_t>(i - 1)];
    if (r_max <= 0.0) r_max = 30.0 / s.alpha;
    if (samples < 2) throw UsageError("need at least two samples");
    Table t;
    t.schema = "wavefn v1";
    t.columns = {"n", "l", "i", "r", "f"};
    for (int k = 0; k < samples; ++k) {
        const double r = r_max * k / (samples - 1);
        const double f = eval_wavefunction(s, r);
        t.rows.push_back({std::to_string(n), std::to_string(l), std::to_string(i), fmt17(r), fmt17(f)});
        json row;
        row["n"] = n;
        row["l"] = l;
        row["i"] = i;
        row["r"] = r;
        row["f"] = f;
        t.json_rows.push_back(std::move(row));
    }
    t.emit(out, cmdline);
    return 0;
}

int cmd_figures(const std::string& dir, int n_max, const Output&, const std::string& cmdline) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);

    auto open_fig = [&](const std::string& name, const std::string& schema) {
        std::ofstream f(fs::path(dir) / name, std::ios::binary);
        if (!f) throw UsageError("cannot write " + (fs::path(dir) / name).string());
        f << "# tcoulomb " << kVersion << "\n# command: " << cmdline << "\n# schema: " << schema
          << "\ncurve_id,beta,alpha,source\n";
        return f;
    };

    {
        // Fig. 1: alpha_{nu,0}(beta), nu = 0..8, exact points plus the
        // numerical cross at beta = 40 on every curve
        std::ofstream f = open_fig("fig1.csv", "figure v1");
        for (int nu = 0; nu <= 8; ++nu) {
            SpectralCurve c = build_curve(nu, 0, std::max(n_max, nu));
            const std::string id = "nu" + std::to_string(nu) + "_l0";
            for (const auto& p : c.points) {
                f << id << ',' << fmt17(p.beta) << ',' << fmt17(p.alpha) << ",exact\n";
            }
            OracleResult r = solve_state(make_problem(40.0, 0, nu), nu);
            f << id << ",40," << fmt17(r.alpha) << ",oracle\n";
        }
    }
    {
        // Fig. 2: alpha_{0,l}(beta), l = 0..9
        std::ofstream f = open_fig("fig2.csv", "figure v1");
        for (int l = 0; l <= 9; ++l) {
            SpectralCurve c = build_curve(0, l, n_max);
            const std::string id = "nu0_l" + std::to_string(l);
            for (const auto& p : c.points) {
                f << id << ',' << fmt17(p.beta) << ',' << fmt17(p.alpha) << ",exact\n";
            }
        }
    }
    {
        // Fig. 3: the Coulomb-degenerate families k = 2 and k = 3, raw exact
        // points plus interpolated samples on each family's common hull
        std::ofstream f = open_fig("fig3.csv", "figure v1");
        for (int k = 2; k <= 3; ++k) {
            std::vector<SpectralCurve> family;
            double lo = 0.0, hi = 40.0;
            for (int nu = 0; nu <= k; ++nu) {
                family.push_back(build_curve(nu, k - nu, n_max));
                lo = std::max(lo, family.back().beta_min());
                hi = std::min(hi, family.back().beta_max());
            }
            for (const auto& c : family) {
                const std::string id =
                    "k" + std::to_string(k) + "_nu" + std::to_string(c.nu) + "_l" + std::to_string(c.l);
                for (const auto& p : c.points) {
                    if (p.beta > 40.0) break;
                    f << id << ',' << fmt17(p.beta) << ',' << fmt17(p.alpha) << ",exact\n";
                }
                for (int g = 0; g < 33; ++g) {
                    const double beta = lo + (hi - lo) * g / 32.0;
                    f << id << ',' << fmt17(beta) << ',' << fmt17(interpolate(c, beta))
                      << ",interpolated\n";
                }
            }
        }
    }
    return 0;
}

struct CheckReport {
    json checks = json::array();
    bool all_passed = true;

    void record(const std::string& name, bool passed, const std::string& detail = "") {
        json c;
        c["name"] = name;
        c["passed"] = passed;
        if (!detail.empty()) c["detail"] = detail;
        checks.push_back(std::move(c));
        all_passed = all_passed && passed;
        std::cout << (passed ? "ok   " : "FAIL ") << name;
        if (!detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << "\n";
    }
};

int cmd_check(const std::string& level, bool inject_fault, const Output& out,
              const std::string& cmdline) {
    const bool full = level == "full";
    CheckReport rep;

    const int realness_n = full ? 20 : 5;
    const int realness_l = full ? 10 : 3;
    {
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= realness_n && ok; ++n) {
            for (int l = 0; l <= realness_l && ok; ++l) {
                RationalPolynomial p = truncation_polynomial(n, l);
                SturmChain chain(p);
                int count = chain.count_roots(Rational(0), p.root_bound());
                if (count != n + 1 || !chain.squarefree()) {
                    ok = false;
                    detail = "n=" + std::to_string(n) + " l=" + std::to_string(l) + " count=" +
                             std::to_string(count);
                }
            }
        }
        rep.record("root realness and count (n<=" + std::to_string(realness_n) + ", l<=" +
                       std::to_string(realness_l) + ")",
                   ok, detail);
    }

    {
        const int node_n = full ? 10 : 5;
        const int node_l = full ? 5 : 3;
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= node_n && ok; ++n) {
            for (int l = 0; l <= node_l && ok; ++l) {
                auto sols = solve_truncation(n, l);
                if (inject_fault && n == 1 && l == 0) {
                    sols[0].coeffs.back() += 0.5;  // test hook: corrupt one coefficient
                }
                for (auto& s : sols) {
                    int counted = count_nodes(s);
                    if (counted != s.nodes) {
                        ok = false;
                        detail = "n=" + std::to_string(n) + " l=" + std::to_string(l) + " i=" +
                                 std::to_string(s.i) + ": " + std::to_string(counted) + " nodes";
                        break;
                    }
                }
            }
        }
        rep.record("node theorem (nodes = n+1-i)", ok, detail);
    }

    {
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= (full ? 10 : 5) && ok; ++n) {
            for (int l = 0; l <= (full ? 5 : 3) && ok; ++l) {
                for (const auto& s : solve_truncation(n, l)) {
                    const double big_n = n + l + 2;
                    const double breve = s.energy_tilde / (s.beta * s.beta);
                    if (std::fabs(breve + 0.5 / (big_n * big_n)) > 1e-12 * 0.5 / (big_n * big_n)) {
                        ok = false;
                        detail = "n=" + std::to_string(n) + " l=" + std::to_string(l);
                        break;
                    }
                }
            }
        }
        rep.record("breve-frame energy identity", ok, detail);
    }

    {
        const int ode_n = full ? 10 : 3;
        const int ode_l = full ? 5 : 1;
        const int pts = full ? 50 : 10;
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= ode_n && ok; ++n) {
            for (int l = 0; l <= ode_l && ok; ++l) {
                for (const auto& s : solve_truncation(n, l)) {
                    const double r_lo = 1e-3, r_hi = 30.0 / s.alpha;
                    for (int k = 0; k < pts; ++k) {
                        const double r = r_lo * std::pow(r_hi / r_lo, k / (pts - 1.0));
                        const double res = ode_residual(s, r);
                        const double scale = std::max(std::fabs(eval_wavefunction(s, r)), 1.0);
                        if (std::fabs(res) > 1e-10 * scale) {
                            ok = false;
                            detail = "n=" + std::to_string(n) + " l=" + std::to_string(l) + " r=" +
                                     fmt17(r);
                            break;
                        }
                    }
                    if (!ok) break;
                }
            }
        }
        rep.record("radial-equation residuals", ok, detail);
    }

    {
        bool ok = true;
        std::string detail;
        const int eq_n = full ? 3 : 2;
        const int eq_l = full ? 2 : 1;
        for (int n = 0; n <= eq_n && ok; ++n) {
            for (int l = 0; l <= eq_l && ok; ++l) {
                for (const auto& s : solve_truncation(n, l)) {
                    double dev = validate_exact(s, 1e-6);
                    if (std::fabs(dev) > 1e-6) {
                        ok = false;
                        detail = "n=" + std::to_string(n) + " l=" + std::to_string(l);
                        break;
                    }
                }
            }
        }
        rep.record("independent-oracle equivalence", ok, detail);
    }

    {
        bool ok = true;
        std::string detail;
        std::vector<ExactSolution> states{solve_truncation(0, 0)[0]};
        if (full) {
            states.push_back(solve_truncation(1, 0)[0]);
            states.push_back(solve_truncation(1, 0)[1]);
        }
        for (const auto& s : states) {
            HellmannFeynman hf = hellmann_feynman_check(s);
            if (std::fabs(hf.lhs - hf.rhs) > 1e-4) {
                ok = false;
                detail = "n=" + std::to_string(s.n) + " i=" + std::to_string(s.i);
                break;
            }
        }
        rep.record("Hellmann-Feynman theorem", ok, detail);
    }

    if (full) {
        bool ok = true;
        std::string detail;
        try {
            monotonicity_scan(9, 12.0, 20);
            for (int k = 2; k <= 3; ++k) {
                std::vector<double> grid{8.0 + 2 * k, 12.0 + 2 * k};
                auto table = degeneracy_split(k, grid, 16);
                for (double beta : grid) {
                    double prev = 1e300;
                    for (const auto& e : table) {
                        if (e.beta != beta) continue;
                        if (!e.alpha || !(*e.alpha < prev)) {
                            ok = false;
                            detail = "family k=" + std::to_string(k);
                        }
                        if (e.alpha) prev = *e.alpha;
                    }
                }
            }
        } catch (const Error& err) {
            ok = false;
            detail = err.what();
        }
        rep.record("spectral-curve monotonicity and degeneracy ordering", ok, detail);
    }

    std::cout << (rep.all_passed ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
    if (out.path != "-") {
        json doc;
        doc["tool"] = "tcoulomb";
        doc["version"] = kVersion;
        doc["command"] = cmdline;
        doc["level"] = level;
        doc["passed"] = rep.all_passed;
        doc["checks"] = rep.checks;
        std::ofstream f(out.path, std::ios::binary);
        if (!f) throw UsageError("cannot open output path: " + out.path);
        f << doc.dump(2) << "\n";
    }
    return rep.all_passed ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and numerical spectra of the truncated Coulomb potential -beta/(r+1)"};
    app.require_subcommand(1);
    const std::string cmdline = join_args(argc, argv);

    int n = 0, l = 0, i = 1, nu = 0, n_max = 20, samples = 200;
    double beta = 0.0, tol = 1e-12, oracle_tol = 1e-9, r_max = 0.0, hydrogen_r0 = 0.0;
    std::string dir = ".", level = "quick";
    bool inject_fault = false;
    Output out;

    CLI::App* exact = app.add_subcommand("exact", "All exact (alpha, beta) pairs for one (n, l)");
    exact->add_option("--n", n, "Truncation order")->required();
    exact->add_option("--l", l, "Angular momentum");
    exact->add_option("--tol", tol, "Root bracketing tolerance")->capture_default_str();
    out.add_common_flags(exact);

    CLI::App* curve = app.add_subcommand("curve", "Exact points of the spectral curve alpha_{nu,l}(beta)");
    curve->add_option("--nu", nu, "Radial quantum number")->required();
    curve->add_option("--l", l, "Angular momentum");
    curve->add_option("--n-max", n_max, "Largest truncation order")->capture_default_str();
    curve->add_option("--tol", tol, "Root bracketing tolerance")->capture_default_str();
    out.add_common_flags(curve);

    CLI::App* interp = app.add_subcommand("interp", "Interpolate alpha_{nu,l} at a coupling beta");
    interp->add_option("--nu", nu, "Radial quantum number")->required();
    interp->add_option("--l", l, "Angular momentum");
    interp->add_option("--n-max", n_max, "Largest truncation order")->capture_default_str();
    CLI::Option* interp_beta = interp->add_option("--beta", beta, "Coupling");
    interp->add_option("--hydrogen-r0", hydrogen_r0,
                       "Compute beta from the hydrogen preset with this cutoff radius [m]");
    out.add_common_flags(interp);

    CLI::App* oracle = app.add_subcommand("oracle", "Numerical eigenvalue by Numerov shooting");
    CLI::Option* oracle_beta = oracle->add_option("--beta", beta, "Coupling");
    oracle->add_option("--l", l, "Angular momentum");
    oracle->add_option("--nu", nu, "Radial node count");
    oracle->add_option("--tol", oracle_tol, "Eigenvalue tolerance")->capture_default_str();
    oracle->add_option("--hydrogen-r0", hydrogen_r0,
                       "Compute beta from the hydrogen preset with this cutoff radius [m]");
    out.add_common_flags(oracle);

    CLI::App* wavefn = app.add_subcommand("wavefn", "Sample one exact eigenfunction");
    wavefn->add_option("--n", n, "Truncation order")->required();
    wavefn->add_option("--l", l, "Angular momentum");
    wavefn->add_option("--i", i, "Root index (1-based, ascending alpha)")->required();
    wavefn->add_option("--r-max", r_max, "Sampling range (default 30/alpha)");
    wavefn->add_option("--samples", samples, "Number of samples")->capture_default_str();
    wavefn->add_option("--tol", tol, "Root bracketing tolerance")->capture_default_str();
    out.add_common_flags(wavefn);

    CLI::App* check = app.add_subcommand("check", "Run the invariant suites");
    check->add_option("--level", level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}))
        ->capture_default_str();
    check->add_flag("--inject-fault", inject_fault, "Corrupt one coefficient (test hook)")
        ->group("");  // hidden
    out.add_common_flags(check);

    CLI::App* figures = app.add_subcommand("figures", "Write fig1.csv, fig2.csv, fig3.csv");
    figures->add_option("--out-dir", dir, "Output directory")->required();
    figures->add_option("--n-max", n_max, "Largest truncation order")->capture_default_str();

    try {
        app.parse(argc, argv);

        if (hydrogen_r0 > 0.0) beta = beta_from_physical(hydrogen_preset(hydrogen_r0));

        if (exact->parsed()) return cmd_exact(n, l, tol, out, cmdline);
        if (curve->parsed()) return cmd_curve(nu, l, n_max, tol, out, cmdline);
        if (interp->parsed()) {
            if (!*interp_beta && hydrogen_r0 <= 0.0) {
                throw UsageError("interp needs --beta or --hydrogen-r0");
            }
            return cmd_interp(nu, l, n_max, beta, tol, out, cmdline);
        }
        if (oracle->parsed()) {
            if (!*oracle_beta && hydrogen_r0 <= 0.0) {
                throw UsageError("oracle needs --beta or --hydrogen-r0");
            }
            return cmd_oracle(beta, l, nu, oracle_tol, out, cmdline);
        }
        if (wavefn->parsed()) return cmd_wavefn(n, l, i, r_max, samples, tol, out, cmdline);
        if (check->parsed()) return cmd_check(level, inject_fault, out, cmdline);
        if (figures->parsed()) return cmd_figures(dir, n_max, out, cmdline);
        throw UsageError("no subcommand given");
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 1;
    } catch (const IntegrityError& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return 2;
    } catch (const ConvergenceError& e) {
        std::cerr << "convergence error: " << e.what() << "\n";
        return 3;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
