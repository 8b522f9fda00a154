#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rhermite/inner_product.hpp"
#include "rhermite/operators.hpp"
#include "rhermite/params.hpp"
#include "rhermite/poly.hpp"
#include "rhermite/polynomials.hpp"

namespace rhermite {

// The function e^{-x^{2r}/2} poly(x), tracked by its polynomial part.  The
// envelope is never expanded; operators are conjugated through it, so the
// plain derivative in x^r picks up the extra -x^r term analytically.
struct WeightedFunction {
    ModelParams params;
    SparsePoly poly;
};

inline WeightedFunction weighted(const ModelParams& params, SparsePoly poly) {
    return {params, std::move(poly)};
}

// Unnormalized ladder pair: A lowers by r, Adag raises by r.  On the
// envelope-carrying functions A acts on polynomial parts as Y itself and
// Adag as (2x^r - Y); the conventional pair has an extra 1/sqrt(2) each,
// kept out of the exact path.
inline WeightedFunction lower_A(const WeightedFunction& w) {
    return {w.params, dunkl_Y(w.poly, w.params)};
}

inline WeightedFunction raise_Adag(const WeightedFunction& w) {
    return {w.params, Rational(2) * w.poly.shifted(w.params.r()) - dunkl_Y(w.poly, w.params)};
}

// Oscillator Hamiltonian in factorized form, (A Adag + Adag A)/4.
inline WeightedFunction apply_H0(const WeightedFunction& w) {
    SparsePoly sym = lower_A(raise_Adag(w)).poly + raise_Adag(lower_A(w)).poly;
    return {w.params, Rational(1, 4) * sym};
}

// Unnormalized supercharge: S acts on polynomial parts as
// (Y - x^r) R + x^r, the grading R making S square to twice the SUSY
// Hamiltonian.  S = sqrt(2) Q.
inline WeightedFunction apply_S(const WeightedFunction& w) {
    SparsePoly reflected = reflect_Rr(w.poly, w.params);
    SparsePoly out = dunkl_Y(reflected, w.params) - reflected.shifted(w.params.r()) +
                     w.poly.shifted(w.params.r());
    return {w.params, out};
}

enum class SusyRoute { supercharge, commutator };

// H = Q^2 = S^2/2, equivalently H0 - (1/2)[Y, x^r] R; the two routes must
// agree exactly and that agreement is part of the test gate.
inline WeightedFunction apply_H_susy(const WeightedFunction& w,
                                     SusyRoute route = SusyRoute::supercharge) {
    if (route == SusyRoute::supercharge) {
        return {w.params, Rational(1, 2) * apply_S(apply_S(w)).poly};
    }
    SparsePoly reflected = reflect_Rr(w.poly, w.params);
    SparsePoly comm = dunkl_Y(reflected.shifted(w.params.r()), w.params) -
                      dunkl_Y(reflected, w.params).shifted(w.params.r());
    return {w.params, apply_H0(w).poly - Rational(1, 2) * comm};
}

// Pairing of two envelope-carrying functions: the two half-weights join into
// the full weight, so this is exactly the polynomial-part pairing.
inline SymbolicSum weighted_inner_product(const WeightedFunction& u, const WeightedFunction& v) {
    if (!(u.params == v.params))
        throw std::invalid_argument("pairing requires identical model parameters");
    return inner_product(u.poly, v.poly, u.params);
}

inline double weighted_inner_product_float(const WeightedFunction& u, const WeightedFunction& v) {
    if (!(u.params == v.params))
        throw std::invalid_argument("pairing requires identical model parameters");
    return inner_product_float(u.poly, v.poly, u.params);
}

// Normalized eigenfunction in double precision: zeta_N^{-1/2} H_N times the
// envelope, sampled on the star of r lines through the origin.
struct WeightedFloatFunction {
    ModelParams params;
    FloatPoly poly;

    // Ray j points along e^{2 pi i j / r}; the envelope is real on every ray.
    std::complex<double> evaluate_on_ray(int j, double t) const {
        if (j < 0 || j >= params.r())
            throw std::invalid_argument("ray index out of range: " + std::to_string(j));
        std::complex<double> dir =
            std::polar(1.0, 2.0 * std::acos(-1.0) * j / params.r());
        double envelope = std::exp(-std::pow(t, 2 * params.r()) / 2.0);
        return poly.evaluate(dir * t) * envelope;
    }
};

inline WeightedFloatFunction hermite_function(const ModelParams& params, int N) {
    double zeta = norm_sq(params, N).to_float();
    return {params, make_float(radial_hermite(params, N), 1.0 / std::sqrt(zeta))};
}

struct SpectrumRow {
    int N;
    Parity parity;
    Rational deformed_number;  // [N]
    Rational energy_h0;        // ([N] + [N+r])/2
    long energy_susy;          // floor(N/r), rounded up to the next even integer
    double zeta_float;
};

inline std::vector<SpectrumRow> spectrum_table(const ModelParams& params, int n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
    std::vector<SpectrumRow> rows;
    rows.reserve(n_max + 1);
    for (int N = 0; N <= n_max; ++N) {
        DegreeClass dc = params.degree_class(N);
        SpectrumRow row;
        row.N = N;
        row.parity = dc.parity;
        row.deformed_number = params.deformed_number(N);
        row.energy_h0 =
            (params.deformed_number(N) + params.deformed_number(N + params.r())) / 2;
        row.energy_susy = dc.quotient + (dc.quotient % 2);
        row.zeta_float = norm_sq(params, N).to_float();
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace rhermite
