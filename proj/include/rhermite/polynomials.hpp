#pragma once

#include <stdexcept>
#include <string>

#include "rhermite/params.hpp"
#include "rhermite/poly.hpp"
#include "rhermite/rational.hpp"

namespace rhermite {

enum class PolyMethod { recurrence, closed_form };

// Generalized Laguerre polynomial L_n^{(alpha)} by the three-term recurrence
// (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}.
inline SparsePoly laguerre(int n, const Rational& alpha) {
    if (n < 0) throw std::invalid_argument("laguerre degree must be nonnegative");
    SparsePoly prev = SparsePoly::constant(Rational(1));
    if (n == 0) return prev;
    SparsePoly cur = SparsePoly::constant(1 + alpha) - SparsePoly::monomial(1);
    for (int k = 1; k < n; ++k) {
        SparsePoly next =
            (SparsePoly::constant(Rational(2 * k + 1) + alpha) - SparsePoly::monomial(1)) * cur -
            (Rational(k) + alpha) * prev;
        next *= Rational(1, k + 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// Hermite polynomial for the weight |x|^{2 nu} e^{-x^2} on the line.
// Both construction paths produce identical coefficients:
//   recurrence   H_{k+1} = 2x H_k - 2(k + theta_k) H_{k-1},
//                theta_k = 2 nu for odd k, 0 for even k;
//   closed form  H_{2m}   = (-1)^m 2^{2m}   m! L_m^{(nu-1/2)}(x^2),
//                H_{2m+1} = (-1)^m 2^{2m+1} m! x L_m^{(nu+1/2)}(x^2).
inline SparsePoly gen_hermite(int n, const Rational& nu,
                              PolyMethod method = PolyMethod::closed_form) {
    if (n < 0) throw std::invalid_argument("degree must be nonnegative, got " + std::to_string(n));
    if (2 * nu <= -1) throw std::invalid_argument("nu must exceed -1/2, got " + to_string(nu));
    if (method == PolyMethod::recurrence) {
        SparsePoly prev = SparsePoly::constant(Rational(1));
        if (n == 0) return prev;
        SparsePoly cur = SparsePoly::monomial(1, Rational(2));
        for (int k = 1; k < n; ++k) {
            Rational theta = (k % 2 == 1) ? 2 * nu : Rational(0);
            SparsePoly next =
                SparsePoly::monomial(1, Rational(2)) * cur - (2 * (Rational(k) + theta)) * prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
        return cur;
    }
    const int m = n / 2;
    Rational scale = ((m % 2 == 0) ? Rational(1) : Rational(-1)) * pow2(n) * Rational(factorial(m));
    Rational alpha = nu + Rational((n % 2 == 0) ? -1 : 1, 2);
    SparsePoly body = laguerre(m, alpha).substitute_power(2);
    if (n % 2 == 1) body = body.shifted(1);
    return scale * body;
}

// Hermite-type polynomial adapted to r equally spaced lines through the
// origin.  With N = n r + s (0 <= s < r) it is x^s H_n(x^r) for the
// one-variable family at the slice parameter nu_s, equivalently the ladder
//   H_{M} = 2 x^r H_{M-r} - 2 [M-r] H_{M-2r}
// seeded by H_s = x^s, where [.] is the deformed number.  The closed form is
// the source of truth; the recurrence is the cross-check.
inline SparsePoly radial_hermite(const ModelParams& params, int N,
                                 PolyMethod method = PolyMethod::closed_form) {
    DegreeClass dc = params.degree_class(N);
    if (method == PolyMethod::closed_form) {
        SparsePoly slice = gen_hermite(dc.quotient, params.nu_s(dc.residue));
        return slice.substitute_power(params.r()).shifted(dc.residue);
    }
    const int r = params.r();
    SparsePoly prev;  // H_{M-2r}, zero below the seed
    SparsePoly cur = SparsePoly::monomial(dc.residue);
    for (int M = dc.residue + r; M <= N; M += r) {
        SparsePoly next = SparsePoly::monomial(r, Rational(2)) * cur;
        Rational a = params.deformed_number(M - r);
        if (a != 0) next -= (2 * a) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace rhermite
