// qdsd: command-line front end for the two-qutrit amplitude-damping
// simulator. Subcommands reproduce the standard trajectory figures as CSV,
// scan the state family, and analyze user-supplied density matrices.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qdsd/dsd.hpp"
#include "qdsd/dynamics.hpp"
#include "qdsd/errors.hpp"
#include "qdsd/linalg.hpp"
#include "qdsd/matrix_io.hpp"
#include "qdsd/measures.hpp"
#include "qdsd/states.hpp"

namespace {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParseError = 2,
    kValidationError = 3,
    kIoError = 4,
    kNoConvergence = 5,
    kOtherError = 6,
};

struct RunConfig {
    double alpha = 4.2;
    double gamma_ratio = 0.5;
    double t_max = 20.0;
    std::size_t n_points = 2001;
    double tol = 1e-10;
    bool rotated = false;
    std::string family = "horodecki";
    std::string input_path;
    std::string output_path;
};

std::string format_number(double v) {
    char buffer[48];
    std::snprintf(buffer, sizeof(buffer), "%.12g", v);
    return buffer;
}

std::string format_optional_time(const std::optional<double>& t) {
    return t ? format_number(*t) : std::string("none");
}

qdsd::DensityMatrix make_family_state(const RunConfig& cfg) {
    if (cfg.family == "isotropic") {
        if (cfg.rotated) throw qdsd::ParameterRangeError("rotated", "--rotated applies to the horodecki family only");
        return qdsd::isotropic_state(cfg.alpha);
    }
    if (cfg.family != "horodecki")
        throw qdsd::ParameterRangeError("family", "unknown family '" + cfg.family + "'");
    return cfg.rotated ? qdsd::horodecki_state_rotated(cfg.alpha) : qdsd::horodecki_state(cfg.alpha);
}

qdsd::ScanOptions scan_options(const RunConfig& cfg) {
    qdsd::ScanOptions options;
    options.eig_tol = cfg.tol;
    return options;
}

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) throw qdsd::IoError("cannot open '" + path + "' for writing");
    out << contents;
    if (!out) throw qdsd::IoError("failed while writing '" + path + "'");
}

void print_report_common(std::ostream& out, const RunConfig& cfg, const qdsd::DsdReport& report) {
    out << "gamma_ratio = " << format_number(cfg.gamma_ratio) << '\n';
    out << "t_max = " << format_number(cfg.t_max) << '\n';
    out << "t_N = " << format_optional_time(report.t_negativity_death) << '\n';
    out << "t_R = " << format_optional_time(report.t_realignment_death) << '\n';
    out << "trajectory_type = " << qdsd::to_string(report.type) << '\n';
    if (report.window)
        out << "window = (" << format_number(report.window->first) << ", "
            << format_number(report.window->second) << ")\n";
    else
        out << "window = none\n";
    if (report.initially_ppt) out << "initially_ppt = true\n";
    if (report.entanglement_after_tn_unknown) out << "entanglement_after_tN_unknown = true\n";
    if (report.t_realignment_death && report.t_negativity_death &&
        *report.t_realignment_death < *report.t_negativity_death)
        out << "note = t_R < t_N (realignment detection dies while the state is still NPT)\n";
}

int run_figure(int which, const RunConfig& cfg) {
    const qdsd::DensityMatrix rho0 = make_family_state(cfg);
    const qdsd::DecayParams params = qdsd::DecayParams::from_ratio(cfg.gamma_ratio);

    std::ostringstream csv;
    if (which == 5) {
        csv << "t,eig1,eig2,eig3\n";
        for (std::size_t i = 0; i < cfg.n_points; ++i) {
            const double t = cfg.t_max * static_cast<double>(i) / static_cast<double>(cfg.n_points - 1);
            const auto rho = qdsd::propagate_closed_form(rho0, t, params);
            const auto eigs = qdsd::hermitian_eigenvalues(qdsd::partial_transpose(rho));
            csv << format_number(t) << ',' << format_number(eigs[0]) << ',' << format_number(eigs[1])
                << ',' << format_number(eigs[2]) << '\n';
        }
    } else {
        csv << "t,negativity,ccnr_score\n";
        const qdsd::Trajectory trajectory =
            qdsd::sample_trajectory(rho0, params, cfg.t_max, cfg.n_points, cfg.tol);
        for (std::size_t i = 0; i < trajectory.times.size(); ++i) {
            csv << format_number(trajectory.times[i]) << ','
                << format_number(trajectory.samples[i].negativity) << ','
                << format_number(trajectory.samples[i].ccnr_score) << '\n';
        }
    }
    write_text_file(cfg.output_path, csv.str());

    const qdsd::DsdReport report =
        qdsd::classify_trajectory(rho0, params, cfg.t_max, scan_options(cfg));
    std::cout << "command = figure" << which << '\n';
    std::cout << "family = " << cfg.family << (cfg.rotated ? " (rotated)" : "") << '\n';
    std::cout << "alpha = " << format_number(cfg.alpha) << '\n';
    print_report_common(std::cout, cfg, report);
    std::cout << "output = " << cfg.output_path << '\n';
    return kOk;
}

int run_scan_alpha(const RunConfig& cfg, const std::vector<double>& alphas) {
    const qdsd::DecayParams params = qdsd::DecayParams::from_ratio(cfg.gamma_ratio);
    std::ostringstream csv;
    csv << "alpha,t_N,t_R,trajectory_type,note\n";
    for (double alpha : alphas) {
        RunConfig state_cfg = cfg;
        state_cfg.alpha = alpha;
        const qdsd::DsdReport report = qdsd::classify_trajectory(
            make_family_state(state_cfg), params, cfg.t_max, scan_options(cfg));
        csv << format_number(alpha) << ',' << format_optional_time(report.t_negativity_death) << ','
            << format_optional_time(report.t_realignment_death) << ',' << qdsd::to_string(report.type)
            << ',' << (report.initially_ppt ? "initially_ppt" : "") << '\n';
    }
    write_text_file(cfg.output_path, csv.str());
    std::cout << "command = scan-alpha\n";
    std::cout << "family = " << cfg.family << (cfg.rotated ? " (rotated)" : "") << '\n';
    std::cout << "rows = " << alphas.size() << '\n';
    std::cout << "output = " << cfg.output_path << '\n';
    return kOk;
}

int run_analyze(const RunConfig& cfg) {
    const qdsd::ComplexMatrix raw = qdsd::read_density_matrix_file(cfg.input_path);
    const qdsd::DensityMatrix rho0(raw);
    if (rho0.dim() != 9)
        throw qdsd::ValidationError("shape", "analyze expects a 9x9 two-qutrit density matrix, got dim " +
                                                 std::to_string(rho0.dim()));
    const qdsd::DecayParams params = qdsd::DecayParams::from_ratio(cfg.gamma_ratio);
    const qdsd::CriteriaSample statics = qdsd::criteria_sample(rho0, cfg.tol);
    const qdsd::DsdReport report =
        qdsd::classify_trajectory(rho0, params, cfg.t_max, scan_options(cfg));

    std::ostringstream out;
    out << "command = analyze\n";
    out << "input = " << cfg.input_path << '\n';
    out << "negativity = " << format_number(statics.negativity) << '\n';
    out << "ccnr_score = " << format_number(statics.ccnr_score) << '\n';
    out << "pt_min_eigenvalue = " << format_number(statics.pt_min_eigenvalue) << '\n';
    out << "ppt = " << (qdsd::is_ppt(rho0, cfg.tol) ? "true" : "false") << '\n';
    print_report_common(out, cfg, report);
    std::cout << out.str();
    if (!cfg.output_path.empty()) write_text_file(cfg.output_path, out.str());
    return kOk;
}

void warn_if_deviating(const CLI::App* sub, const RunConfig& cfg, int which) {
    const double published_alpha = which == 4 ? 4.5 : 4.2;
    const bool overridden = sub->count("--alpha") > 0 || sub->count("--gamma-ratio") > 0;
    if (overridden && (cfg.alpha != published_alpha || cfg.gamma_ratio != 0.5)) {
        std::cerr << "note: figure" << which << " is defined for alpha = " << published_alpha
                  << ", gamma-ratio = 0.5; running with alpha = " << format_number(cfg.alpha)
                  << ", gamma-ratio = " << format_number(cfg.gamma_ratio) << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-qutrit amplitude-damping trajectories, entanglement criteria, and "
                 "distillability-sudden-death analysis"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::vector<double> alphas;

    const auto add_numeric_flags = [&](CLI::App* sub) {
        sub->add_option("--gamma-ratio", cfg.gamma_ratio, "gamma_u / gamma_e")->capture_default_str();
        sub->add_option("--t-max", cfg.t_max, "trajectory horizon in gamma_e*t units")
            ->capture_default_str();
        sub->add_option("--n-points", cfg.n_points, "CSV sample count")->capture_default_str();
        sub->add_option("--tol", cfg.tol, "negativity zero threshold")->capture_default_str();
    };

    CLI::App* figure3 = app.add_subcommand(
        "figure3", "Negativity and realignment score vs time for the alpha = 4.2 family state");
    CLI::App* figure4 = app.add_subcommand(
        "figure4", "Negativity and realignment score vs time for the alpha = 4.5 family state");
    CLI::App* figure5 = app.add_subcommand(
        "figure5", "Three smallest partial-transpose eigenvalues vs time for the rotated alpha = 4.2 state");
    for (CLI::App* sub : {figure3, figure4, figure5}) {
        sub->add_option("--alpha", cfg.alpha, "family parameter override");
        sub->add_option("--output", cfg.output_path, "CSV output path");
        add_numeric_flags(sub);
    }

    CLI::App* scan = app.add_subcommand("scan-alpha", "Death times and trajectory type per alpha");
    scan->add_option("alphas", alphas, "family parameter values")->required()->expected(-1);
    scan->add_flag("--rotated", cfg.rotated, "use the locally rotated family");
    scan->add_option("--family", cfg.family, "state family: horodecki or isotropic")
        ->check(CLI::IsMember({"horodecki", "isotropic"}))
        ->capture_default_str();
    scan->add_option("--output", cfg.output_path, "CSV output path");
    add_numeric_flags(scan);

    CLI::App* analyze = app.add_subcommand("analyze", "Static criteria and trajectory report for a matrix file");
    analyze->add_option("--input", cfg.input_path, "density-matrix text file")->required();
    analyze->add_option("--output", cfg.output_path, "also write the report here");
    add_numeric_flags(analyze);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (figure3->parsed()) {
            if (figure3->count("--output") == 0) cfg.output_path = "figure3.csv";
            warn_if_deviating(figure3, cfg, 3);
            return run_figure(3, cfg);
        }
        if (figure4->parsed()) {
            if (figure4->count("--alpha") == 0) cfg.alpha = 4.5;
            if (figure4->count("--output") == 0) cfg.output_path = "figure4.csv";
            warn_if_deviating(figure4, cfg, 4);
            return run_figure(4, cfg);
        }
        if (figure5->parsed()) {
            if (figure5->count("--output") == 0) cfg.output_path = "figure5.csv";
            cfg.rotated = true;
            warn_if_deviating(figure5, cfg, 5);
            return run_figure(5, cfg);
        }
        if (scan->parsed()) {
            if (scan->count("--output") == 0) cfg.output_path = "scan-alpha.csv";
            return run_scan_alpha(cfg, alphas);
        }
        if (analyze->parsed()) return run_analyze(cfg);
    } catch (const qdsd::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const qdsd::ValidationError& e) {
        std::cerr << "validation error (" << e.invariant() << "): " << e.what() << '\n';
        return kValidationError;
    } catch (const qdsd::IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kIoError;
    } catch (const qdsd::NoConvergenceError& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return kNoConvergence;
    } catch (const qdsd::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kOtherError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
