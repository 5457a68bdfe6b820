// Command-line front end: every computation in the library exposed as a
// subcommand emitting CSV (or a verification report) for plotting and
// regression tests.
//
// Exit codes: 0 success, 1 usage error, 2 numerical non-convergence,
// 3 physics-invariant violation (entropic bound / Parseval).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "landau/landau.hpp"

namespace {

constexpr int exit_usage = 1;
constexpr int exit_nonconvergence = 2;
constexpr int exit_invariant = 3;

// Margin slack for the entropic-bound exit policy.
constexpr double bbm_margin_slack = 1e-6;

struct OutputTarget {
    std::ofstream file;
    std::ostream* stream = nullptr;

    static OutputTarget open(const std::string& path) {
        OutputTarget target;
        if (path == "-") {
            target.stream = &std::cout;
            return target;
        }
        target.file.open(path);
        if (!target.file)
            throw std::invalid_argument("cannot open output file: " + path);
        target.stream = &target.file;
        return target;
    }
    std::ostream& out() { return *stream; }
};

void add_param_options(CLI::App* cmd, landau::ModelParams& params) {
    cmd->add_option("--m", params.m, "particle mass")->check(CLI::PositiveNumber);
    cmd->add_option("--hbar", params.hbar, "reduced Planck constant")->check(CLI::PositiveNumber);
    cmd->add_option("--kB", params.k_B, "Boltzmann constant")->check(CLI::PositiveNumber);
    cmd->add_option("--theta", params.theta, "tilt parameter (0 = Hermitian limit)");
    cmd->add_option("--py", params.p_y, "transverse momentum");
    cmd->add_option("--N", params.N, "particle count")->check(CLI::PositiveNumber);
}

CLI::Validator odd_points_check() {
    return CLI::Validator(
        [](std::string& input) -> std::string {
            int value = 0;
            try {
                value = std::stoi(input);
            } catch (...) {
                return "not an integer";
            }
            if (value < 3 || value % 2 == 0) return "grid points must be odd and >= 3";
            if (value > landau::grid_points_cap)
                return "grid points exceed the cap " + std::to_string(landau::grid_points_cap);
            return {};
        },
        "ODD");
}

struct TauRange {
    double min = 0.1;
    double max = 100.0;
    int points = 64;
};

TauRange parse_tau_range(const std::string& spec) {
    TauRange range;
    const auto first = spec.find(':');
    const auto second = spec.find(':', first == std::string::npos ? first : first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw CLI::ValidationError("--tau", "expected MIN:MAX:POINTS");
    try {
        range.min = std::stod(spec.substr(0, first));
        range.max = std::stod(spec.substr(first + 1, second - first - 1));
        range.points = std::stoi(spec.substr(second + 1));
    } catch (...) {
        throw CLI::ValidationError("--tau", "expected MIN:MAX:POINTS with numeric fields");
    }
    if (!(range.min > 0.0) || !(range.max > range.min) || range.points < 2)
        throw CLI::ValidationError("--tau", "need 0 < MIN < MAX and POINTS >= 2");
    return range;
}

int run_density(const landau::ModelParams& params, int n, int points, double half_width,
                const std::string& out_path) {
    landau::GridSpec grid = landau::auto_grid(params, n);
    if (half_width > 0.0) grid.half_width = half_width;
    grid.points = points;
    // Converged normalization constant, then samples on the requested grid.
    const landau::SampledWavefunction converged = landau::normalize(params, n, grid);
    OutputTarget target = OutputTarget::open(out_path);
    std::ostream& out = target.out();
    out << "x,re_psi,im_psi,prob_density,entropic_density\n";
    for (int j = 0; j < grid.points; ++j) {
        const double x = grid.node(j);
        const std::complex<double> psi =
            converged.norm_constant * landau::eval_unnormalized(params, n, x);
        const double rho = std::norm(psi);
        const double entropic = rho > 0.0 ? -rho * std::log(rho) : 0.0;
        landau::csv_row(out, x, psi.real(), psi.imag(), rho, entropic);
    }
    return 0;
}

int run_momentum(const landau::ModelParams& params, int n, int points, double half_width,
                 const std::string& out_path) {
    const landau::SampledWavefunction wf =
        landau::normalize(params, n, landau::auto_grid(params, n));
    landau::GridSpec kgrid = landau::auto_kgrid(params, n);
    if (half_width > 0.0) kgrid.half_width = half_width;
    kgrid.points = points;
    const landau::SampledWavefunction phi = landau::fourier_transform(wf, kgrid);
    OutputTarget target = OutputTarget::open(out_path);
    std::ostream& out = target.out();
    out << "k,re_phi,im_phi,prob_density,entropic_density\n";
    for (int j = 0; j < kgrid.points; ++j) {
        const std::complex<double> value = phi.samples[static_cast<std::size_t>(j)];
        const double rho = std::norm(value);
        const double entropic = rho > 0.0 ? -rho * std::log(rho) : 0.0;
        landau::csv_row(out, kgrid.node(j), value.real(), value.imag(), rho, entropic);
    }
    return 0;
}

int run_table1(const landau::ModelParams& params, bool compare, bool sweep,
               const std::string& out_path) {
    std::vector<landau::EntropyReport> reports;
    if (sweep) {
        // Dense field sweep: 25 log-spaced points per decade across the
        // standard range, the full curve rather than 3 samples.
        std::vector<double> omegas;
        for (int i = 0; i <= 50; ++i) omegas.push_back(std::pow(10.0, 1.0 + i / 25.0));
        static constexpr int ns[] = {0, 1, 2, 3};
        reports = landau::table1(params, ns, omegas);
    } else {
        reports = landau::table1(params);
    }

    OutputTarget target = OutputTarget::open(out_path);
    std::ostream& out = target.out();
    out << "n,omega,S_x,S_k,sum,bbm_bound,margin\n";
    bool bound_violated = false;
    for (const auto& report : reports) {
        landau::csv_row(out, report.n, report.omega, report.S_x, report.S_k, report.sum,
                        report.bbm, report.margin);
        if (report.margin < -bbm_margin_slack) bound_violated = true;
    }

    if (compare) {
        double max_dx = 0.0, max_dk = 0.0;
        int max_dx_n = 0, max_dk_n = 0;
        double max_dx_omega = 0.0, max_dk_omega = 0.0;
        int within = 0;
        for (const auto& ref : landau::reference_entropies) {
            for (const auto& report : reports) {
                if (report.n != ref.n || report.omega != ref.omega) continue;
                const double dx = std::abs(report.S_x - ref.S_x);
                const double dk = std::abs(report.S_k - ref.S_k);
                if (dx > max_dx) { max_dx = dx; max_dx_n = ref.n; max_dx_omega = ref.omega; }
                if (dk > max_dk) { max_dk = dk; max_dk_n = ref.n; max_dk_omega = ref.omega; }
                within += dx <= 2e-2;
                within += dk <= 2e-2;
            }
        }
        std::cerr << "compare: max |dS_x| = " << landau::format_number(max_dx) << " at (n="
                  << max_dx_n << ", omega=" << landau::format_number(max_dx_omega) << ")\n"
                  << "compare: max |dS_k| = " << landau::format_number(max_dk) << " at (n="
                  << max_dk_n << ", omega=" << landau::format_number(max_dk_omega) << ")\n"
                  << "compare: entries within 2e-2 of the embedded reference: " << within
                  << "/24\n";
    }

    if (bound_violated) {
        std::cerr << "table1: entropic uncertainty bound violated\n";
        return exit_invariant;
    }
    return 0;
}

int run_thermo(const landau::ModelParams& params, const std::vector<double>& omegas,
               const TauRange& range, const std::string& out_path) {
    OutputTarget target = OutputTarget::open(out_path);
    std::ostream& out = target.out();
    out << "tau,omega,F_per_N,U_per_N,S_per_NkB,Cv_per_NkB\n";
    for (const double omega : omegas) {
        landau::ModelParams p = params;
        p.omega = omega;
        const landau::ThermoCurve curve = landau::thermo_curve(p, range.min, range.max, range.points);
        for (const auto& point : curve.points)
            landau::csv_row(out, point.tau, omega, point.F_per_N, point.U_per_N, point.S_per_NkB,
                            point.Cv_per_NkB);
    }
    return 0;
}

// Frozen independent value of the Hermitian-limit ground-state entropy
// (same in both representations): ln(pi)/2 + ln(2) + euler_gamma - 1/2.
constexpr double hermitian_entropy = 1.3427277883861783;

int run_verify(const landau::ModelParams& base, double tol, int points, int max_points) {
    landau::EntropyOptions options;
    options.entropy_abs_tol = tol;
    options.initial_points = points;
    options.max_points = max_points;

    bool all_pass = true;
    auto report = [&](const std::string& name, bool pass, const std::string& detail) {
        std::cout << "suite " << name << ": " << (pass ? "PASS" : "FAIL") << " - " << detail
                  << "\n";
        all_pass = all_pass && pass;
    };

    {
        landau::ModelParams p = base;
        p.theta = 0.0;
        p.p_y = 0.0;
        p.omega = 1.0;
        const landau::EntropyReport r = landau::entropy_report(p, 0, options);
        const bool pass = std::abs(r.S_x - hermitian_entropy) <= 1e-4 &&
                          std::abs(r.S_k - hermitian_entropy) <= 1e-4 &&
                          r.margin >= -bbm_margin_slack;
        std::ostringstream detail;
        detail << "S_x=" << landau::format_number(r.S_x) << " S_k=" << landau::format_number(r.S_k)
               << " expected " << landau::format_number(hermitian_entropy) << " each, sum margin "
               << landau::format_number(r.margin);
        report("hermitian-limit-oracle", pass, detail.str());
    }

    {
        bool pass = true;
        double worst_defect = 0.0;
        double worst_margin = std::numeric_limits<double>::infinity();
        for (int n = 0; n <= 3 && pass; ++n) {
            for (const double omega : {1.0, 5.0, 10.0, 100.0, 1000.0}) {
                landau::ModelParams p = base;
                p.omega = omega;
                const landau::EntropyReport r = landau::entropy_report(p, n, options);
                worst_defect = std::max(worst_defect, r.parseval_defect);
                worst_margin = std::min(worst_margin, r.margin);
                if (r.parseval_defect > 1e-6 || r.margin < -bbm_margin_slack) {
                    pass = false;
                    break;
                }
            }
        }
        std::ostringstream detail;
        detail << "max Parseval defect " << landau::format_number(worst_defect)
               << ", min bound margin " << landau::format_number(worst_margin)
               << " over n 0..3, omega {1,5,10,100,1000}";
        report("parseval-and-entropic-bound", pass, detail.str());
    }

    {
        bool pass = true;
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double x = 0.05 * std::pow(5.0 / 0.05, i / 49.0); // beta*hbar*omega
            landau::ModelParams p = base;
            p.omega = 1.0;
            const double beta = x / (p.hbar * p.omega);
            const double closed = landau::partition_closed(p, beta).value;
            const double series = landau::partition_series_adaptive(p, beta).value;
            const double defect = std::abs(series - closed) / closed;
            worst = std::max(worst, defect);
            if (defect > 1e-10) pass = false;
        }
        report("partition-closed-vs-series", pass,
               "max relative defect " + landau::format_number(worst) +
                   " over beta*hbar*omega in [0.05, 5]");
    }

    {
        bool pass = true;
        double worst_fd = 0.0, worst_legendre = 0.0;
        for (const double omega : {10.0, 100.0}) {
            for (const double tau : {0.2, 1.0, 5.0, 25.0}) {
                landau::ModelParams p = base;
                p.omega = omega;
                const landau::DerivativeDefects d = landau::crosscheck_derivatives(p, tau);
                worst_fd = std::max(worst_fd, d.max_fd_defect());
                worst_legendre = std::max(worst_legendre, d.legendre_defect);
                if (d.max_fd_defect() > 1e-6 || d.legendre_defect > 1e-9) pass = false;
            }
        }
        std::ostringstream detail;
        detail << "max finite-difference defect " << landau::format_number(worst_fd)
               << ", max Legendre defect " << landau::format_number(worst_legendre);
        report("derivative-identities", pass, detail.str());
    }

    if (!all_pass) {
        std::cout << "verify: FAIL\n";
        return exit_invariant;
    }
    std::cout << "verify: PASS\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shannon entropies and thermodynamics of a charged particle in a magnetic field"};
    app.require_subcommand(1);

    landau::ModelParams params; // defaults m = hbar = k_B = p_y = theta = 1

    int n = 0;
    double omega = 0.0;
    int points = 2049;
    double half_width = 0.0;
    std::string out_path = "-";
    bool compare = false;
    bool sweep = false;
    std::vector<double> omega_list;
    std::string tau_spec = "0.1:100:64";
    double verify_tol = 1e-7;
    int verify_max_points = landau::grid_points_cap;

    CLI::App* density = app.add_subcommand("density", "position-space density CSV");
    density->add_option("--n", n, "quantum number")->required()->check(CLI::Range(0, 64));
    density->add_option("--omega", omega, "cyclotron frequency")->required()->check(CLI::PositiveNumber);
    density->add_option("--points", points, "output grid points")->check(odd_points_check());
    density->add_option("--half-width", half_width, "grid half-width override")->check(CLI::PositiveNumber);
    density->add_option("--out", out_path, "output path or - for stdout");
    add_param_options(density, params);

    CLI::App* momentum = app.add_subcommand("momentum", "momentum-space density CSV");
    momentum->add_option("--n", n, "quantum number")->required()->check(CLI::Range(0, 64));
    momentum->add_option("--omega", omega, "cyclotron frequency")->required()->check(CLI::PositiveNumber);
    momentum->add_option("--points", points, "output grid points")->check(odd_points_check());
    momentum->add_option("--half-width", half_width, "grid half-width override")->check(CLI::PositiveNumber);
    momentum->add_option("--out", out_path, "output path or - for stdout");
    add_param_options(momentum, params);

    CLI::App* table = app.add_subcommand("table1", "entropy table over the standard lattice");
    CLI::Option* compare_opt =
        table->add_flag("--compare", compare,
                        "diff against the embedded reference values (report on stderr)");
    table->add_flag("--sweep", sweep, "dense log-spaced field sweep instead of the 3-point lattice")
        ->excludes(compare_opt);
    table->add_option("--out", out_path, "output path or - for stdout");
    add_param_options(table, params);

    CLI::App* thermo = app.add_subcommand("thermo", "thermodynamic sweep CSV");
    thermo->add_option("--omega", omega_list, "cyclotron frequencies (comma separated)")
        ->required()
        ->delimiter(',');
    thermo->add_option("--tau", tau_spec, "temperature range MIN:MAX:POINTS");
    thermo->add_option("--out", out_path, "output path or - for stdout");
    add_param_options(thermo, params);

    CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
    verify->add_option("--tol", verify_tol, "entropy convergence tolerance")->check(CLI::PositiveNumber);
    verify->add_option("--points", points, "initial grid points")->check(odd_points_check());
    verify->add_option("--max-points", verify_max_points, "grid doubling cap")->check(odd_points_check());
    add_param_options(verify, params);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (density->parsed()) {
            params.omega = omega;
            return run_density(params, n, points, half_width, out_path);
        }
        if (momentum->parsed()) {
            params.omega = omega;
            return run_momentum(params, n, points, half_width, out_path);
        }
        if (table->parsed()) return run_table1(params, compare, sweep, out_path);
        if (thermo->parsed()) return run_thermo(params, omega_list, parse_tau_range(tau_spec), out_path);
        if (verify->parsed()) return run_verify(params, verify_tol, points, verify_max_points);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    } catch (const landau::NonConvergence& e) {
        std::cerr << "non-convergence: " << e.what() << "\n";
        return exit_nonconvergence;
    } catch (const landau::TruncationBias& e) {
        std::cerr << "truncation bias: " << e.what() << "\n";
        return exit_nonconvergence;
    } catch (const landau::ParsevalViolation& e) {
        std::cerr << "Parseval violation: " << e.what() << "\n";
        return exit_invariant;
    } catch (const landau::BbmViolation& e) {
        std::cerr << "entropic bound violation: " << e.what() << "\n";
        return exit_invariant;
    } catch (const landau::UnnormalizedDensity& e) {
        std::cerr << "unnormalized density: " << e.what() << "\n";
        return exit_invariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
