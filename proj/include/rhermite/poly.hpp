#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "rhermite/rational.hpp"

namespace rhermite {

namespace detail {

using TermMap = std::map<int, Rational>;

inline void add_term(TermMap& m, int degree, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = m.emplace(degree, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) m.erase(it);
    }
}

inline TermMap mul_maps(const TermMap& a, const TermMap& b) {
    TermMap out;
    for (const auto& [da, ca] : a)
        for (const auto& [db, cb] : b) add_term(out, da + db, ca * cb);
    return out;
}

template <typename T>
T pow_int(T z, unsigned k) {
    T acc(1);
    while (k) {
        if (k & 1) acc *= z;
        z *= z;
        k >>= 1;
    }
    return acc;
}

// Horner over the degree gaps, highest degree first.  Relative error stays
// within a few ulps of machine precision times the term-magnitude sum
// sum_k |c_k| |z|^k; for |z| <= 10 and degree <= 64 that is below 1e-13
// relative to this bound.
template <typename Scalar>
Scalar eval_map(const TermMap& m, const Scalar& z, const auto& coeff_cast) {
    if (m.empty()) return Scalar(0);
    auto it = m.rbegin();
    Scalar acc = coeff_cast(it->second);
    int prev = it->first;
    for (++it; it != m.rend(); ++it) {
        acc = acc * pow_int(z, static_cast<unsigned>(prev - it->first)) + coeff_cast(it->second);
        prev = it->first;
    }
    if (prev > 0) acc *= pow_int(z, static_cast<unsigned>(prev));
    if (prev < 0) acc /= pow_int(z, static_cast<unsigned>(-prev));
    return acc;
}

}  // namespace detail

class LaurentPoly;

// Polynomial with exact rational coefficients, stored sparsely by degree.
// Zero coefficients are never stored; the zero polynomial has degree() -1.
class SparsePoly {
  public:
    SparsePoly() = default;

    static SparsePoly constant(Rational c) {
        SparsePoly p;
        detail::add_term(p.terms_, 0, c);
        return p;
    }

    static SparsePoly monomial(int degree, Rational c = Rational(1)) {
        if (degree < 0)
            throw std::invalid_argument("monomial degree must be nonnegative, got " +
                                        std::to_string(degree));
        SparsePoly p;
        detail::add_term(p.terms_, degree, c);
        return p;
    }

    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

    Rational coeff(int degree) const {
        auto it = terms_.find(degree);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void set_coeff(int degree, const Rational& c) {
        if (degree < 0)
            throw std::invalid_argument("degree must be nonnegative, got " +
                                        std::to_string(degree));
        terms_.erase(degree);
        detail::add_term(terms_, degree, c);
    }

    SparsePoly& operator+=(const SparsePoly& o) {
        for (const auto& [d, c] : o.terms_) detail::add_term(terms_, d, c);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& o) {
        for (const auto& [d, c] : o.terms_) detail::add_term(terms_, d, -c);
        return *this;
    }
    SparsePoly& operator*=(const SparsePoly& o) {
        terms_ = detail::mul_maps(terms_, o.terms_);
        return *this;
    }
    SparsePoly& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [d, c] : terms_) c *= s;
        }
        return *this;
    }

    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(SparsePoly a, const SparsePoly& b) { return a *= b; }
    friend SparsePoly operator*(SparsePoly a, const Rational& s) { return a *= s; }
    friend SparsePoly operator*(const Rational& s, SparsePoly a) { return a *= s; }
    friend SparsePoly operator-(SparsePoly a) { return a *= Rational(-1); }
    friend bool operator==(const SparsePoly& a, const SparsePoly& b) = default;

    // x -> x^power, so each degree is multiplied by `power`.
    SparsePoly substitute_power(int power) const {
        if (power <= 0) throw std::invalid_argument("substitution power must be positive");
        SparsePoly out;
        for (const auto& [d, c] : terms_) out.terms_.emplace(d * power, c);
        return out;
    }

    // Multiply by x^k.  Negative k must divide exactly; otherwise the result
    // would leave the polynomial ring.
    SparsePoly shifted(int k) const {
        SparsePoly out;
        for (const auto& [d, c] : terms_) {
            if (d + k < 0)
                throw std::domain_error("shift by " + std::to_string(k) +
                                        " drops degree " + std::to_string(d) + " below zero");
            out.terms_.emplace(d + k, c);
        }
        return out;
    }

    std::complex<double> evaluate(const std::complex<double>& z) const {
        return detail::eval_map(terms_, z, [](const Rational& c) {
            return std::complex<double>(to_double(c));
        });
    }

    Rational evaluate_exact(const Rational& x) const {
        return detail::eval_map(terms_, x, [](const Rational& c) { return c; });
    }

  private:
    friend class LaurentPoly;
    std::map<int, Rational> terms_;
};

// Finitely many integer degrees of either sign.  Used as the carrier for
// operator intermediates whose negative-degree parts must cancel before the
// result is handed back as a SparsePoly.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    LaurentPoly(const SparsePoly& p) : terms_(p.terms_) {}

    static LaurentPoly monomial(int degree, Rational c = Rational(1)) {
        LaurentPoly p;
        detail::add_term(p.terms_, degree, c);
        return p;
    }

    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
    bool has_negative_degrees() const { return !terms_.empty() && terms_.begin()->first < 0; }

    Rational coeff(int degree) const {
        auto it = terms_.find(degree);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(int degree, const Rational& c) { detail::add_term(terms_, degree, c); }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [d, c] : o.terms_) detail::add_term(terms_, d, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [d, c] : o.terms_) detail::add_term(terms_, d, -c);
        return *this;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) {
        terms_ = detail::mul_maps(terms_, o.terms_);
        return *this;
    }
    LaurentPoly& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [d, c] : terms_) c *= s;
        }
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
    friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }
    friend LaurentPoly operator-(LaurentPoly a) { return a *= Rational(-1); }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

    // Multiply by x^k, any sign.
    LaurentPoly shifted(int k) const {
        LaurentPoly out;
        for (const auto& [d, c] : terms_) out.terms_.emplace(d + k, c);
        return out;
    }

    SparsePoly to_sparse() const {
        if (has_negative_degrees())
            throw std::logic_error("negative degrees did not cancel; lowest is x^" +
                                   std::to_string(min_degree()));
        SparsePoly p;
        p.terms_ = terms_;
        return p;
    }

    std::complex<double> evaluate(const std::complex<double>& z) const {
        if (z == std::complex<double>(0) && has_negative_degrees())
            throw std::domain_error("evaluation at 0 with negative-degree terms");
        return detail::eval_map(terms_, z, [](const Rational& c) {
            return std::complex<double>(to_double(c));
        });
    }

    Rational evaluate_exact(const Rational& x) const {
        if (x == 0 && has_negative_degrees())
            throw std::domain_error("evaluation at 0 with negative-degree terms");
        return detail::eval_map(terms_, x, [](const Rational& c) { return c; });
    }

  private:
    std::map<int, Rational> terms_;
};

// Double-precision view, for plotting, grids and float cross-checks.
struct FloatPoly {
    std::map<int, double> terms;

    std::complex<double> evaluate(const std::complex<double>& z) const {
        if (terms.empty()) return {0.0, 0.0};
        auto it = terms.rbegin();
        std::complex<double> acc(it->second);
        int prev = it->first;
        for (++it; it != terms.rend(); ++it) {
            acc = acc * detail::pow_int(z, static_cast<unsigned>(prev - it->first)) +
                  std::complex<double>(it->second);
            prev = it->first;
        }
        if (prev > 0) acc *= detail::pow_int(z, static_cast<unsigned>(prev));
        return acc;
    }
};

inline FloatPoly make_float(const SparsePoly& p, double scale = 1.0) {
    FloatPoly f;
    for (const auto& [d, c] : p.terms()) f.terms[d] = to_double(c) * scale;
    return f;
}

inline SparsePoly derivative(const SparsePoly& p) {
    SparsePoly out;
    for (const auto& [d, c] : p.terms())
        if (d != 0) out.set_coeff(d - 1, c * d);
    return out;
}

inline LaurentPoly derivative(const LaurentPoly& p) {
    LaurentPoly out;
    for (const auto& [d, c] : p.terms())
        if (d != 0) out.add_term(d - 1, c * d);
    return out;
}

}  // namespace rhermite
