#pragma once

#include <nlohmann/json.hpp>

#include <charconv>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "rhermite/inner_product.hpp"
#include "rhermite/oscillator.hpp"
#include "rhermite/params.hpp"
#include "rhermite/poly.hpp"

namespace rhermite {

using Json = nlohmann::ordered_json;

// 15 significant digits, locale-independent, no negative zero.
inline std::string format_double(double v) {
    if (v == 0.0) v = 0.0;  // squash -0
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 15);
    return std::string(buf, res.ptr);
}

// The value a reader of the textual form will see; JSON mirrors store this so
// both formats parse back to identical doubles.
inline double reparse_double(double v) {
    std::string s = format_double(v);
    double out = 0;
    std::from_chars(s.data(), s.data() + s.size(), out);
    return out;
}

inline std::string zeta_symbolic_string(const SymbolicMoment& m) {
    return to_string(m.coeff()) + "*Gamma(" + to_string(m.base()) + ")";
}

struct EvalGrid {
    double t_min = -2.0;
    double t_max = 2.0;
    int count = 201;
};

inline std::vector<double> grid_points(const EvalGrid& grid) {
    if (grid.count < 2) throw std::invalid_argument("grid needs at least two points");
    if (!(grid.t_max > grid.t_min)) throw std::invalid_argument("grid needs t_max > t_min");
    std::vector<double> ts;
    ts.reserve(grid.count);
    for (int k = 0; k < grid.count; ++k)
        ts.push_back(grid.t_min + k * (grid.t_max - grid.t_min) / (grid.count - 1));
    return ts;
}

inline std::string poly_to_csv(const SparsePoly& p) {
    std::string out = "degree,coeff_num,coeff_den\n";
    for (const auto& [d, c] : p.terms())
        out += std::to_string(d) + "," + to_string(numerator(c)) + "," +
               to_string(denominator(c)) + "\n";
    return out;
}

inline Json poly_to_json(const ModelParams& params, int N, const SparsePoly& p) {
    Json terms = Json::array();
    for (const auto& [d, c] : p.terms()) terms.push_back(Json::array({d, to_string(c)}));
    Json j;
    j["N"] = N;
    j["r"] = params.r();
    j["nu"] = to_string(params.nu());
    j["terms"] = std::move(terms);
    return j;
}

inline std::string gram_to_csv(const GramMatrix& gm) {
    std::string out = "N,M,value_float,base,coeff_num,coeff_den\n";
    for (int i = 0; i < gm.size(); ++i)
        for (int j = 0; j < gm.size(); ++j) {
            SymbolicMoment m = gm.entry(i, j).single();
            out += std::to_string(i) + "," + std::to_string(j) + "," +
                   format_double(gm.entry_float(i, j)) + "," + to_string(m.base()) + "," +
                   to_string(numerator(m.coeff())) + "," + to_string(denominator(m.coeff())) +
                   "\n";
        }
    return out;
}

inline Json gram_to_json(const GramMatrix& gm) {
    Json entries = Json::array();
    for (int i = 0; i < gm.size(); ++i)
        for (int j = 0; j < gm.size(); ++j) {
            SymbolicMoment m = gm.entry(i, j).single();
            Json e;
            e["N"] = i;
            e["M"] = j;
            e["value_float"] = reparse_double(gm.entry_float(i, j));
            e["base"] = to_string(m.base());
            e["coeff_num"] = to_string(numerator(m.coeff()));
            e["coeff_den"] = to_string(denominator(m.coeff()));
            entries.push_back(std::move(e));
        }
    Json j;
    j["r"] = gm.params().r();
    j["nu"] = to_string(gm.params().nu());
    j["nmax"] = gm.n_max();
    j["entries"] = std::move(entries);
    return j;
}

// Largest |closed-form - diagonal| / closed-form over the table; the two are
// equal symbolically, so this measures only the float paths against each
// other.
inline double norms_max_rel_deviation(const GramMatrix& gm) {
    double worst = 0;
    for (int N = 0; N < gm.size(); ++N) {
        double closed = norm_sq(gm.params(), N).to_float();
        worst = std::max(worst, std::abs(closed - gm.entry_float(N, N)) / closed);
    }
    return worst;
}

inline std::string norms_to_csv(const GramMatrix& gm) {
    std::string out = "N,zeta_float,zeta_symbolic\n";
    for (int N = 0; N < gm.size(); ++N) {
        SymbolicMoment m = norm_sq(gm.params(), N);
        out += std::to_string(N) + "," + format_double(m.to_float()) + "," +
               zeta_symbolic_string(m) + "\n";
    }
    out += "# max_rel_deviation_vs_gram_diagonal," +
           format_double(norms_max_rel_deviation(gm)) + "\n";
    return out;
}

inline Json norms_to_json(const GramMatrix& gm) {
    Json rows = Json::array();
    for (int N = 0; N < gm.size(); ++N) {
        SymbolicMoment m = norm_sq(gm.params(), N);
        Json row;
        row["N"] = N;
        row["zeta_float"] = reparse_double(m.to_float());
        row["zeta_symbolic"] = zeta_symbolic_string(m);
        rows.push_back(std::move(row));
    }
    Json j;
    j["r"] = gm.params().r();
    j["nu"] = to_string(gm.params().nu());
    j["nmax"] = gm.n_max();
    j["rows"] = std::move(rows);
    j["max_rel_deviation_vs_gram_diagonal"] = reparse_double(norms_max_rel_deviation(gm));
    return j;
}

inline std::string spectrum_to_csv(const std::vector<SpectrumRow>& rows) {
    std::string out = "N,class,deformed_number,E_H0,E_SUSY,zeta_float\n";
    for (const SpectrumRow& row : rows)
        out += std::to_string(row.N) + "," + to_cstring(row.parity) + "," +
               to_string(row.deformed_number) + "," + to_string(row.energy_h0) + "," +
               std::to_string(row.energy_susy) + "," + format_double(row.zeta_float) + "\n";
    return out;
}

inline Json spectrum_to_json(const ModelParams& params, const std::vector<SpectrumRow>& rows) {
    Json out_rows = Json::array();
    for (const SpectrumRow& row : rows) {
        Json r;
        r["N"] = row.N;
        r["class"] = to_cstring(row.parity);
        r["deformed_number"] = to_string(row.deformed_number);
        r["E_H0"] = to_string(row.energy_h0);
        r["E_SUSY"] = row.energy_susy;
        r["zeta_float"] = reparse_double(row.zeta_float);
        out_rows.push_back(std::move(r));
    }
    Json j;
    j["r"] = params.r();
    j["nu"] = to_string(params.nu());
    j["rows"] = std::move(out_rows);
    return j;
}

inline std::string eval_to_csv(const ModelParams& params, int N, const EvalGrid& grid) {
    WeightedFloatFunction h = hermite_function(params, N);
    std::vector<double> ts = grid_points(grid);
    std::string out = "ray_index,t,re_h,im_h\n";
    for (int j = 0; j < params.r(); ++j)
        for (double t : ts) {
            std::complex<double> v = h.evaluate_on_ray(j, t);
            out += std::to_string(j) + "," + format_double(t) + "," + format_double(v.real()) +
                   "," + format_double(v.imag()) + "\n";
        }
    return out;
}

inline Json eval_to_json(const ModelParams& params, int N, const EvalGrid& grid) {
    WeightedFloatFunction h = hermite_function(params, N);
    std::vector<double> ts = grid_points(grid);
    Json rows = Json::array();
    for (int j = 0; j < params.r(); ++j)
        for (double t : ts) {
            std::complex<double> v = h.evaluate_on_ray(j, t);
            Json row;
            row["ray_index"] = j;
            row["t"] = reparse_double(t);
            row["re_h"] = reparse_double(v.real());
            row["im_h"] = reparse_double(v.imag());
            rows.push_back(std::move(row));
        }
    Json j;
    j["r"] = params.r();
    j["nu"] = to_string(params.nu());
    j["N"] = N;
    j["rows"] = std::move(rows);
    return j;
}

}  // namespace rhermite
