#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rhermite/params.hpp"
#include "rhermite/poly.hpp"
#include "rhermite/rational.hpp"

namespace rhermite {

namespace detail {
inline int mod_residue(int d, int m) {
    int v = d % m;
    return v < 0 ? v + m : v;
}
}  // namespace detail

// Degree-residue projection: keep the terms with degree = i (mod m).
inline LaurentPoly project(const LaurentPoly& p, int i, int m) {
    if (m <= 0) throw std::invalid_argument("projection modulus must be positive");
    if (i < 0 || i >= m)
        throw std::invalid_argument("projection residue " + std::to_string(i) +
                                    " outside [0, " + std::to_string(m) + ")");
    LaurentPoly out;
    for (const auto& [d, c] : p.terms())
        if (detail::mod_residue(d, m) == i) out.add_term(d, c);
    return out;
}

inline SparsePoly project(const SparsePoly& p, int i, int m) {
    return project(LaurentPoly(p), i, m).to_sparse();
}

// Grading sign: +1 on degrees = 0..r-1 (mod 2r), -1 on degrees = r..2r-1.
// At r = 1 this is the parity flip p(x) -> p(-x).
inline LaurentPoly reflect_Rr(const LaurentPoly& p, const ModelParams& params) {
    const int m = 2 * params.r();
    LaurentPoly out;
    for (const auto& [d, c] : p.terms())
        out.add_term(d, detail::mod_residue(d, m) < params.r() ? c : -c);
    return out;
}

inline SparsePoly reflect_Rr(const SparsePoly& p, const ModelParams& params) {
    return reflect_Rr(LaurentPoly(p), params).to_sparse();
}

// Derivative in the variable x^r: x^d -> (d/r) x^{d-r}.  The result may leave
// the polynomial ring, hence the Laurent return type.
inline LaurentPoly deriv_dxr(const LaurentPoly& p, const ModelParams& params) {
    LaurentPoly out;
    for (const auto& [d, c] : p.terms())
        if (d != 0) out.add_term(d - params.r(), c * Rational(d, params.r()));
    return out;
}

inline LaurentPoly deriv_dxr(const SparsePoly& p, const ModelParams& params) {
    return deriv_dxr(LaurentPoly(p), params);
}

// Deformed derivative: d/dx^r plus an x^{-r}-weighted projection combination,
//   Y = d/dx^r + (rx^r)^{-1} sum_s [ (2nu+1+s-r) P_{r+s}(2r) - s P_s(2r) ].
// Assembled literally on the Laurent carrier; on monomials this comes out as
// Y x^N = [N] x^{N-r}, so negative degrees always cancel on polynomial input.
inline LaurentPoly dunkl_Y(const LaurentPoly& p, const ModelParams& params) {
    const int r = params.r();
    LaurentPoly out = deriv_dxr(p, params);
    LaurentPoly mix;
    for (int s = 0; s < r; ++s) {
        Rational w = 2 * params.nu() + 1 + s - r;
        if (w != 0) mix += w * project(p, r + s, 2 * r);
        if (s != 0) mix -= Rational(s) * project(p, s, 2 * r);
    }
    out += mix.shifted(-r) * Rational(1, r);
    return out;
}

inline SparsePoly dunkl_Y(const SparsePoly& p, const ModelParams& params) {
    return dunkl_Y(LaurentPoly(p), params).to_sparse();
}

// Finite expression tree over the primitive operators, so identities like
// anticommutators and squared supercharges can be stated once and applied
// to arbitrary inputs.
class OperatorExpr {
  public:
    static OperatorExpr identity() { return OperatorExpr(Kind::identity); }

    static OperatorExpr projection(int i, int m) {
        if (m <= 0 || i < 0 || i >= m) throw std::invalid_argument("bad projection indices");
        OperatorExpr e(Kind::projection);
        e.i_ = i;
        e.m_ = m;
        return e;
    }

    static OperatorExpr reflection() { return OperatorExpr(Kind::reflection); }
    static OperatorExpr derivative() { return OperatorExpr(Kind::derivative); }
    static OperatorExpr dunkl() { return OperatorExpr(Kind::dunkl); }
    static OperatorExpr mul_xr() { return OperatorExpr(Kind::mul_xr); }

    // compose(a, b) applies b first.
    static OperatorExpr compose(OperatorExpr a, OperatorExpr b) {
        OperatorExpr e(Kind::compose);
        e.children_.push_back(std::move(a));
        e.children_.push_back(std::move(b));
        return e;
    }

    static OperatorExpr sum(std::vector<std::pair<Rational, OperatorExpr>> parts) {
        OperatorExpr e(Kind::sum);
        for (auto& [w, op] : parts) {
            e.weights_.push_back(std::move(w));
            e.children_.push_back(std::move(op));
        }
        return e;
    }

    LaurentPoly apply(const LaurentPoly& p, const ModelParams& params) const {
        switch (kind_) {
            case Kind::identity:
                return p;
            case Kind::projection:
                return project(p, i_, m_);
            case Kind::reflection:
                return reflect_Rr(p, params);
            case Kind::derivative:
                return deriv_dxr(p, params);
            case Kind::dunkl:
                return dunkl_Y(p, params);
            case Kind::mul_xr:
                return p.shifted(params.r());
            case Kind::compose: {
                LaurentPoly q = p;
                for (auto it = children_.rbegin(); it != children_.rend(); ++it)
                    q = it->apply(q, params);
                return q;
            }
            case Kind::sum: {
                LaurentPoly acc;
                for (std::size_t k = 0; k < children_.size(); ++k)
                    acc += weights_[k] * children_[k].apply(p, params);
                return acc;
            }
        }
        throw std::logic_error("unreachable operator kind");
    }

    SparsePoly apply(const SparsePoly& p, const ModelParams& params) const {
        return apply(LaurentPoly(p), params).to_sparse();
    }

  private:
    enum class Kind { identity, projection, reflection, derivative, dunkl, mul_xr, compose, sum };

    explicit OperatorExpr(Kind k) : kind_(k) {}

    Kind kind_;
    int i_ = 0;
    int m_ = 0;
    std::vector<OperatorExpr> children_;
    std::vector<Rational> weights_;
};

inline OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b) {
    return OperatorExpr::sum({{Rational(1), OperatorExpr::compose(a, b)},
                              {Rational(-1), OperatorExpr::compose(b, a)}});
}

inline OperatorExpr anticommutator(const OperatorExpr& a, const OperatorExpr& b) {
    return OperatorExpr::sum({{Rational(1), OperatorExpr::compose(a, b)},
                              {Rational(1), OperatorExpr::compose(b, a)}});
}

}  // namespace rhermite
