#pragma once

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "rhermite/params.hpp"
#include "rhermite/poly.hpp"
#include "rhermite/polynomials.hpp"
#include "rhermite/rational.hpp"

namespace rhermite {

inline double gamma_value(double x) {
    if (!(x > 0)) throw std::domain_error("gamma argument must be positive, got " +
                                          std::to_string(x));
    return std::tgamma(x);
}

// One exact multiple of one Gamma value, coeff * Gamma(base), kept with
// base in (0,1] so that values in the same class compare by coeff alone.
class SymbolicMoment {
  public:
    SymbolicMoment() = default;

    static SymbolicMoment zero() { return SymbolicMoment(); }

    static SymbolicMoment of(Rational coeff, Rational arg) {
        if (coeff == 0) return zero();
        if (arg <= 0) throw std::domain_error("gamma argument must be positive, got " +
                                              to_string(arg));
        while (arg > 1) {
            arg -= 1;
            coeff *= arg;
        }
        SymbolicMoment m;
        m.coeff_ = std::move(coeff);
        m.base_ = std::move(arg);
        return m;
    }

    const Rational& coeff() const { return coeff_; }
    const Rational& base() const { return base_; }
    bool is_zero() const { return coeff_ == 0; }

    double to_float() const {
        if (coeff_ == 0) return 0.0;
        return to_double(coeff_) * gamma_value(to_double(base_));
    }

    friend bool operator==(const SymbolicMoment& a, const SymbolicMoment& b) = default;

  private:
    Rational coeff_ = Rational(0);
    Rational base_ = Rational(1);
};

// Exact linear combination of Gamma values, keyed by reduced base.  The
// pairing of two polynomials lands here; orthogonality shows up as the empty
// sum, with no floating point involved.
class SymbolicSum {
  public:
    SymbolicSum() = default;

    void add_gamma(const Rational& coeff, const Rational& arg) { add(SymbolicMoment::of(coeff, arg)); }

    void add(const SymbolicMoment& m) {
        if (m.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m.base(), m.coeff());
        if (!inserted) {
            it->second += m.coeff();
            if (it->second == 0) terms_.erase(it);
        }
    }

    const std::map<Rational, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // The sums produced by the radial pairing always collapse to one Gamma
    // class; anything else here is a logic error at the call site.
    SymbolicMoment single() const {
        if (terms_.empty()) return SymbolicMoment::zero();
        if (terms_.size() > 1)
            throw std::logic_error("expected at most one gamma class, found " +
                                   std::to_string(terms_.size()));
        return SymbolicMoment::of(terms_.begin()->second, terms_.begin()->first);
    }

    double to_float() const {
        double v = 0;
        for (const auto& [base, coeff] : terms_) v += to_double(coeff) * gamma_value(to_double(base));
        return v;
    }

    SymbolicSum& operator+=(const SymbolicSum& o) {
        for (const auto& [base, coeff] : o.terms_) add(SymbolicMoment::of(coeff, base));
        return *this;
    }
    SymbolicSum& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [base, coeff] : terms_) coeff *= s;
        }
        return *this;
    }
    friend SymbolicSum operator+(SymbolicSum a, const SymbolicSum& b) { return a += b; }
    friend SymbolicSum operator*(SymbolicSum a, const Rational& s) { return a *= s; }
    friend SymbolicSum operator*(const Rational& s, SymbolicSum a) { return a *= s; }
    friend SymbolicSum operator-(SymbolicSum a) { return a *= Rational(-1); }
    friend bool operator==(const SymbolicSum& a, const SymbolicSum& b) = default;

  private:
    std::map<Rational, Rational> terms_;
};

// k-th weight moment over one line: zero for odd k by symmetry, otherwise
// (1/r) Gamma((2 nu + k + 1)/(2r)) after the substitution t = x^{2r}.
inline SymbolicMoment moment(const ModelParams& params, int k) {
    if (k < 0) throw std::invalid_argument("moment order must be nonnegative");
    if (k % 2 == 1) return SymbolicMoment::zero();
    Rational arg = (2 * params.nu() + k + 1) / (2 * params.r());
    if (arg <= 0) throw std::domain_error("weight is not integrable at these parameters");
    return SymbolicMoment::of(Rational(1, params.r()), arg);
}

// Same value through the plain double Gamma path, bypassing the symbolic
// normalization; used for independent float accumulation.
inline double moment_float(const ModelParams& params, int k) {
    if (k < 0) throw std::invalid_argument("moment order must be nonnegative");
    if (k % 2 == 1) return 0.0;
    double arg = to_double((2 * params.nu() + k + 1) / (2 * params.r()));
    return gamma_value(arg) / params.r();
}

// Ray pairing: bilinear extension of <x^a, x^b> = r [a = b mod r] M_{a+b}.
// Coefficients are real, so conjugation is a no-op.
inline SymbolicSum inner_product(const SparsePoly& f, const SparsePoly& g,
                                 const ModelParams& params) {
    SymbolicSum out;
    const int r = params.r();
    for (const auto& [a, fa] : f.terms())
        for (const auto& [b, gb] : g.terms()) {
            if ((a - b) % r != 0 || (a + b) % 2 == 1) continue;
            Rational arg = (2 * params.nu() + a + b + 1) / (2 * r);
            out.add_gamma(fa * gb, arg);  // r * M_{a+b} = Gamma(arg)
        }
    return out;
}

namespace detail {

using BigFloat = boost::multiprecision::cpp_bin_float_50;

// gammas, when given, holds Gamma((2nu + k + 1)/(2r)) indexed by k = a + b;
// precomputing it turns the Gram fill from Gamma-bound to multiply-bound.
inline BigFloat pair_numeric(const SparsePoly& f, const SparsePoly& g, const ModelParams& params,
                             const std::vector<BigFloat>* gammas) {
    BigFloat out = 0;
    const int r = params.r();
    for (const auto& [a, fa] : f.terms())
        for (const auto& [b, gb] : g.terms()) {
            if ((a - b) % r != 0 || (a + b) % 2 == 1) continue;
            BigFloat gamma;
            if (gammas) {
                gamma = (*gammas)[a + b];
            } else {
                gamma = boost::math::tgamma(
                    BigFloat((2 * params.nu() + a + b + 1) / (2 * r)));
            }
            out += BigFloat(fa) * BigFloat(gb) * gamma;
        }
    return out;
}

}  // namespace detail

// Numeric path that never sees the symbolic cancellation.  The pairing of two
// degree-24 inputs cancels through eleven orders of magnitude, far beyond what
// double or long double can absorb, so the accumulation runs at 50 digits and
// only the final value is rounded.
inline double inner_product_float(const SparsePoly& f, const SparsePoly& g,
                                  const ModelParams& params) {
    return detail::pair_numeric(f, g, params, nullptr).convert_to<double>();
}

// Squared norm of the degree-N ladder polynomial:
//   zeta_N = 2^n [N]! Gamma(nu_s + 1/2),  n = floor(N/r),
// equivalently 2^{2n} floor(n/2)! Gamma(floor((n+1)/2) + nu_s + 1/2).
inline SymbolicMoment norm_sq(const ModelParams& params, int N) {
    DegreeClass dc = params.degree_class(N);
    Rational coeff = pow2(dc.quotient) * params.deformed_factorial(N);
    Rational arg = params.nu_s(dc.residue) + Rational(1, 2);
    return SymbolicMoment::of(coeff, arg);
}

class GramMatrix {
  public:
    GramMatrix(ModelParams params, int n_max, std::vector<std::vector<SymbolicSum>> sym,
               std::vector<std::vector<double>> flt)
        : params_(std::move(params)), n_max_(n_max), sym_(std::move(sym)), flt_(std::move(flt)) {}

    const ModelParams& params() const { return params_; }
    int n_max() const { return n_max_; }
    int size() const { return n_max_ + 1; }

    const SymbolicSum& entry(int N, int M) const { return sym_.at(N).at(M); }
    double entry_float(int N, int M) const { return flt_.at(N).at(M); }

    bool off_diagonal_exact_zero() const {
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < size(); ++j)
                if (i != j && !sym_[i][j].is_zero()) return false;
        return true;
    }

    // Largest float off-diagonal entry relative to the diagonal scale.
    double max_offdiag_rel() const {
        double worst = 0;
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < size(); ++j) {
                if (i == j) continue;
                double scale = std::sqrt(flt_[i][i] * flt_[j][j]);
                worst = std::max(worst, std::abs(flt_[i][j]) / scale);
            }
        return worst;
    }

  private:
    ModelParams params_;
    int n_max_;
    std::vector<std::vector<SymbolicSum>> sym_;
    std::vector<std::vector<double>> flt_;
};

namespace detail {
// RADIAL_HERMITE_THREADS caps the worker count; unset means one thread per
// hardware unit.  Entries are filled with disjoint writes, so the thread
// count never changes any output bit.
inline int thread_count(int jobs) {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
    if (const char* env = std::getenv("RADIAL_HERMITE_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) n = static_cast<int>(v);
    }
    return std::max(1, std::min(n, jobs));
}
}  // namespace detail

inline GramMatrix gram_matrix(const ModelParams& params, int n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
    const int n = n_max + 1;
    std::vector<SparsePoly> basis(n);
    for (int i = 0; i < n; ++i) basis[i] = radial_hermite(params, i);

    std::vector<std::vector<SymbolicSum>> sym(n, std::vector<SymbolicSum>(n));
    std::vector<std::vector<double>> flt(n, std::vector<double>(n, 0.0));

    std::vector<detail::BigFloat> gammas(2 * n_max + 1, detail::BigFloat(0));
    for (int k = 0; k <= 2 * n_max; k += 2)
        gammas[k] = boost::math::tgamma(
            detail::BigFloat((2 * params.nu() + k + 1) / (2 * params.r())));

    const int workers = detail::thread_count(n);
    auto fill_rows = [&](int first) {
        for (int i = first; i < n; i += workers)
            for (int j = i; j < n; ++j) {
                sym[i][j] = inner_product(basis[i], basis[j], params);
                flt[i][j] =
                    detail::pair_numeric(basis[i], basis[j], params, &gammas).convert_to<double>();
            }
    };
    if (workers == 1) {
        fill_rows(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(fill_rows, w);
        for (auto& t : pool) t.join();
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            sym[i][j] = sym[j][i];
            flt[i][j] = flt[j][i];
        }
    return GramMatrix(params, n_max, std::move(sym), std::move(flt));
}

}  // namespace rhermite
