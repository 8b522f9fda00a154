#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rhermite/rhermite.hpp"

namespace {

using namespace rhermite;

// Invalid values exit 1 with a one-line diagnostic; CLI11 keeps exit 2 for
// unknown flags and subcommands.
struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int parse_int(const std::string& text, const std::string& name) {
    int value = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw CliError("--" + name + " expects an integer, got '" + text + "'");
    return value;
}

double parse_float(const std::string& text, const std::string& name) {
    double value = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw CliError("--" + name + " expects a number, got '" + text + "'");
    return value;
}

ModelParams make_params(const std::string& r_str, const std::string& nu_str) {
    int r = parse_int(r_str, "r");
    Rational nu;
    try {
        nu = parse_rational(nu_str);
    } catch (const std::invalid_argument& e) {
        throw CliError(std::string("--nu: ") + e.what());
    }
    try {
        return ModelParams(r, nu);
    } catch (const std::invalid_argument& e) {
        throw CliError(e.what());
    }
}

int parse_degree(const std::string& n_str) {
    int N = parse_int(n_str, "N");
    if (N < 0) throw CliError("--N must be nonnegative, got " + n_str);
    return N;
}

int parse_nmax(const std::string& nmax_str) {
    int n_max = parse_int(nmax_str, "nmax");
    if (n_max < 0) throw CliError("--nmax must be nonnegative, got " + nmax_str);
    return n_max;
}

EvalGrid parse_grid(const std::string& text) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t colon = text.find(':', start);
        parts.push_back(text.substr(start, colon - start));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    if (parts.size() != 3)
        throw CliError("--grid expects t_min:t_max:count, got '" + text + "'");
    EvalGrid grid;
    grid.t_min = parse_float(parts[0], "grid");
    grid.t_max = parse_float(parts[1], "grid");
    grid.count = parse_int(parts[2], "grid");
    try {
        grid_points(grid);
    } catch (const std::invalid_argument& e) {
        throw CliError(std::string("--grid: ") + e.what());
    }
    return grid;
}

void check_format(const std::string& format) {
    if (format != "csv" && format != "json")
        throw CliError("--format must be csv or json, got '" + format + "'");
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw CliError("cannot open output file: " + output_path);
    out << text;
}

std::string json_text(const Json& j) { return j.dump() + "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hermite-type functions on r radial lines in the complex plane"};
    app.require_subcommand(1);

    std::string r_str, nu_str, n_str, nmax_str = "16";
    std::string format = "csv", output, grid_str = "-2:2:201";

    auto add_params = [&](CLI::App* sub) {
        sub->add_option("--r", r_str, "number of lines, odd positive integer")->required();
        sub->add_option("--nu", nu_str, "deformation parameter, rational like 7/3")->required();
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", format, "csv or json (default csv)");
        sub->add_option("--output", output, "write to file instead of standard output");
    };

    CLI::App* poly = app.add_subcommand("poly", "coefficients of the degree-N polynomial");
    add_params(poly);
    poly->add_option("--N", n_str, "polynomial degree")->required();
    add_output(poly);

    CLI::App* gram = app.add_subcommand(
        "gram", "pairing table for degrees 0..nmax; nonzero off-diagonal fails the run");
    add_params(gram);
    gram->add_option("--nmax", nmax_str, "largest degree in the table")->required();
    add_output(gram);

    CLI::App* norms = app.add_subcommand(
        "norms", "squared norms: closed form next to the table diagonal");
    add_params(norms);
    norms->add_option("--nmax", nmax_str, "largest degree in the table")->required();
    add_output(norms);

    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "degree classes, deformed numbers, and oscillator energies");
    add_params(spectrum);
    spectrum->add_option("--nmax", nmax_str, "largest degree in the table")->required();
    add_output(spectrum);

    CLI::App* eval = app.add_subcommand("eval", "sample the normalized function on all rays");
    add_params(eval);
    eval->add_option("--N", n_str, "function index")->required();
    eval->add_option("--grid", grid_str, "t_min:t_max:count (default -2:2:201)");
    add_output(eval);

    CLI::App* verify = app.add_subcommand(
        "verify", "run every module invariant, one pass/fail line each");
    add_params(verify);
    verify->add_option("--nmax", nmax_str, "pairing-table size for the orthogonality checks");

    app.add_subcommand("errata", "corrected formulas with computed numeric evidence");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << app.help() << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (poly->parsed()) {
            ModelParams params = make_params(r_str, nu_str);
            int N = parse_degree(n_str);
            check_format(format);
            SparsePoly p = radial_hermite(params, N);
            emit(format == "csv" ? poly_to_csv(p) : json_text(poly_to_json(params, N, p)),
                 output);
        } else if (gram->parsed()) {
            ModelParams params = make_params(r_str, nu_str);
            int n_max = parse_nmax(nmax_str);
            check_format(format);
            GramMatrix gm = gram_matrix(params, n_max);
            emit(format == "csv" ? gram_to_csv(gm) : json_text(gram_to_json(gm)), output);
            if (!gm.off_diagonal_exact_zero()) {
                std::cerr << "error: symbolic off-diagonal entry is nonzero\n";
                return 1;
            }
        } else if (norms->parsed()) {
            ModelParams params = make_params(r_str, nu_str);
            int n_max = parse_nmax(nmax_str);
            check_format(format);
            GramMatrix gm = gram_matrix(params, n_max);
            emit(format == "csv" ? norms_to_csv(gm) : json_text(norms_to_json(gm)), output);
        } else if (spectrum->parsed()) {
            ModelParams params = make_params(r_str, nu_str);
            int n_max = parse_nmax(nmax_str);
            check_format(format);
            std::vector<SpectrumRow> rows = spectrum_table(params, n_max);
            emit(format == "csv" ? spectrum_to_csv(rows)
                                 : json_text(spectrum_to_json(params, rows)),
                 output);
        } else if (eval->parsed()) {
            ModelParams params = make_params(r_str, nu_str);
            int N = parse_degree(n_str);
            EvalGrid grid = parse_grid(grid_str);
            check_format(format);
            emit(format == "csv" ? eval_to_csv(params, N, grid)
                                 : json_text(eval_to_json(params, N, grid)),
                 output);
        } else if (verify->parsed()) {
            ModelParams params = make_params(r_str, nu_str);
            int n_max = parse_nmax(nmax_str);
            std::vector<CheckResult> results = run_verification(params, n_max);
            for (const CheckResult& c : results)
                std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
            std::cout << (all_passed(results) ? "all checks passed\n" : "CHECKS FAILED\n");
            return all_passed(results) ? 0 : 1;
        } else {
            for (const ErratumEntry& e : errata_entries()) {
                std::cout << e.id << ": " << e.summary << "\n";
                std::cout << "  uncorrected: " << e.uncorrected << "\n";
                std::cout << "  corrected:   " << e.corrected << "\n";
                std::cout << "  evidence:    " << e.evidence << "\n";
            }
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
