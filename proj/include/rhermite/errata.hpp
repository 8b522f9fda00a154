#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "rhermite/inner_product.hpp"
#include "rhermite/io.hpp"
#include "rhermite/operators.hpp"
#include "rhermite/oscillator.hpp"
#include "rhermite/params.hpp"
#include "rhermite/polynomials.hpp"

namespace rhermite {

// Formula variants that circulate in uncorrected form.  Each entry states the
// variant, the form this library implements, and numeric evidence computed on
// the spot that rules the variant out.
struct ErratumEntry {
    std::string id;
    std::string summary;
    std::string uncorrected;
    std::string corrected;
    std::string evidence;
};

// Uncorrected closed form of the squared norm; kept evaluable so the
// discrepancy against the Gram diagonal stays demonstrable.
inline double misprinted_norm_value(const ModelParams& params, int N) {
    DegreeClass dc = params.degree_class(N);
    double nu = to_double(params.nu());
    int r = params.r();
    double arg = (N + r) / (2 * r) + (2 * nu + 2 + 2 * dc.residue - r) / (2.0 * r);
    return std::pow(2.0, dc.quotient) * std::tgamma(N / (2 * r) + 1.0) * std::tgamma(arg);
}

inline std::vector<ErratumEntry> errata_entries() {
    std::vector<ErratumEntry> out;

    {
        // Anchor r=1, nu=0: the classical line, where every number is familiar.
        ModelParams p(1, Rational(0));
        SparsePoly h0 = radial_hermite(p, 0);
        SparsePoly h1 = radial_hermite(p, 1);
        SparsePoly wrong =
            SparsePoly::monomial(1, Rational(2)) * h1 + Rational(2) * p.deformed_number(1) * h0;
        double bad = inner_product_float(wrong, h0, p);
        bool good = inner_product(radial_hermite(p, 2), h0, p).is_zero();
        out.push_back(
            {"recurrence-sign",
             "three-term recurrence has a minus sign on the lower term",
             "H_{N+r} = 2 x^r H_N + 2 [N] H_{N-r}",
             "H_{N+r} = 2 x^r H_N - 2 [N] H_{N-r}",
             "r=1, nu=0: plus-sign H_2 pairs with H_0 to " + format_double(bad) +
                 " (= 4*sqrt(pi)); minus-sign H_2 " +
                 (good ? "cancels to 0 exactly" : "FAILED to cancel") +
                 " and reproduces the classical H_2 = 4x^2 - 2"});
    }

    {
        ModelParams p(3, Rational(1));
        SparsePoly h0 = radial_hermite(p, 0);
        SparsePoly h3 = radial_hermite(p, 3);
        SparsePoly h6 = radial_hermite(p, 6);
        SparsePoly wrong = h3.shifted(3) * Rational(2) + dunkl_Y(h3, p);
        SparsePoly right = h3.shifted(3) * Rational(2) - dunkl_Y(h3, p);
        out.push_back(
            {"raising-operator-sign",
             "the raising ladder subtracts the lowering part",
             "raise = (Y + 2 x^r) on polynomial parts",
             "raise = (2 x^r - Y) on polynomial parts",
             "r=3, nu=1: (Y + 2x^3) H_3 = " + to_string(wrong.coeff(6)) + "x^6 + " +
                 to_string(wrong.coeff(0)) + " which is not in the family, while (2x^3 - Y) H_3 " +
                 "= H_6 " + (right == h6 ? "exactly" : "FAILED") +
                 "; the uncorrected image pairs with H_0 to " +
                 format_double(inner_product_float(wrong, h0, p)) +
                 " while the corrected one " +
                 (inner_product(right, h0, p).is_zero() ? "cancels to 0 exactly"
                                                        : "FAILED to cancel")});
    }

    {
        ModelParams p(1, Rational(0));
        double bad = misprinted_norm_value(p, 1);
        double good = norm_sq(p, 1).to_float();
        double gram = inner_product_float(radial_hermite(p, 1), radial_hermite(p, 1), p);
        out.push_back(
            {"norm-constant",
             "squared norm is 2^{floor(N/r)} [N]! Gamma(nu_s + 1/2)",
             "zeta_N = 2^{floor(N/r)} Gamma(floor(N/2r)+1) Gamma(floor((N+r)/2r) + "
             "(2nu+2+2s-r)/(2r))",
             "zeta_N = 2^{floor(N/r)} [N]! Gamma(nu_s + 1/2)",
             "r=1, nu=0, N=1: uncorrected form gives " + format_double(bad) +
                 " (= sqrt(pi)) but direct integration gives " + format_double(gram) +
                 " (= 2*sqrt(pi)), matching the corrected form " + format_double(good)});
    }

    {
        ModelParams p(1, Rational(0));
        SparsePoly h1 = radial_hermite(p, 1);
        // gamma_N = 2^{floor(N/r)} [N]! / zeta_N, proposed as the square of the
        // normalizing factor.
        SymbolicMoment zeta = norm_sq(p, 1);
        double gamma1 = 2.0 * to_double(p.deformed_factorial(1)) / zeta.to_float();
        double with_gamma = gamma1 * inner_product_float(h1, h1, p);
        double with_zeta = inner_product_float(h1, h1, p) / zeta.to_float();
        out.push_back(
            {"normalization-constant",
             "orthonormalization divides by zeta_N, not by the proposed gamma_N",
             "h_N = gamma_N^{1/2} H_N e^{-x^{2r}/2} with gamma_N = 2^{floor(N/r)} [N]! / zeta_N",
             "h_N = zeta_N^{-1/2} H_N e^{-x^{2r}/2}",
             "r=1, nu=0, N=1: gamma-scaled norm is " + format_double(with_gamma) +
                 ", zeta-scaled norm is " + format_double(with_zeta) + " = 1 as required"});
    }

    {
        ModelParams p(3, Rational(1));
        WeightedFunction h3 = weighted(p, radial_hermite(p, 3));
        WeightedFunction Hh3 = apply_H_susy(h3, SusyRoute::supercharge);
        bool eq2 = Hh3.poly == Rational(2) * h3.poly;
        out.push_back(
            {"susy-spectrum",
             "supersymmetric energies depend on the parity of floor(N/r)",
             "H h_N = floor(N/r) h_N for all N",
             "H h_N = (n + n mod 2) h_N with n = floor(N/r): even n keeps E = n, odd n lifts to "
             "E = n + 1",
             "r=3, nu=1, N=3 (n=1): exact application gives H h_3 = 2 h_3 (" +
                 std::string(eq2 ? "verified" : "FAILED") +
                 "), not 1 * h_3; the spectrum is the even integers"});
    }

    return out;
}

}  // namespace rhermite
