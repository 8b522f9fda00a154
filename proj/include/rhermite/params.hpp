#pragma once

#include <stdexcept>
#include <string>

#include "rhermite/rational.hpp"

namespace rhermite {

enum class Parity { even_class, odd_class };

inline const char* to_cstring(Parity p) {
    return p == Parity::even_class ? "even" : "odd";
}

// Position of a degree N relative to the ray count r: N = quotient*r + residue.
// The parity of the quotient decides which deformation shift applies.
struct DegreeClass {
    int degree = 0;
    int quotient = 0;
    int residue = 0;
    Parity parity = Parity::even_class;
};

class ModelParams {
  public:
    ModelParams(int r, Rational nu) : r_(r), nu_(std::move(nu)) {
        if (r_ <= 0 || r_ % 2 == 0)
            throw std::invalid_argument("r must be an odd positive integer, got " +
                                        std::to_string(r_));
        if (2 * nu_ <= -1)
            throw std::invalid_argument("nu must exceed -1/2, got " + to_string(nu_));
    }

    int r() const { return r_; }
    const Rational& nu() const { return nu_; }

    // The reflection-part coefficients of the deformed derivative are all
    // strictly positive iff nu > (r-1)/2; outside that range the operator
    // algebra still closes, so this is advisory only.
    bool operator_domain_ok() const { return 2 * nu_ > r_ - 1; }

    DegreeClass degree_class(int N) const {
        if (N < 0) throw std::invalid_argument("degree must be nonnegative, got " +
                                               std::to_string(N));
        DegreeClass dc;
        dc.degree = N;
        dc.quotient = N / r_;
        dc.residue = N % r_;
        dc.parity = (dc.quotient % 2 == 0) ? Parity::even_class : Parity::odd_class;
        return dc;
    }

    // Parameter of the one-variable slice attached to residue s.
    Rational nu_s(int s) const {
        if (s < 0 || s >= r_)
            throw std::invalid_argument("residue out of range: " + std::to_string(s));
        return Rational(2 * nu_ + 2 * s + 1 - r_) / (2 * r_);
    }

    Rational vartheta(int N) const {
        DegreeClass dc = degree_class(N);
        if (dc.parity == Parity::even_class) return Rational(0);
        return 2 * nu_s(dc.residue);
    }

    // Deformed substitute for N/r; zero exactly on degrees below r.
    Rational deformed_number(int N) const {
        DegreeClass dc = degree_class(N);
        return Rational(dc.quotient) + vartheta(N);
    }

    // Product of the deformed numbers along the ladder ending at N.
    Rational deformed_factorial(int N) const {
        DegreeClass dc = degree_class(N);
        Rational f(1);
        for (int k = 1; k <= dc.quotient; ++k) f *= deformed_number(k * r_ + dc.residue);
        return f;
    }

    friend bool operator==(const ModelParams& a, const ModelParams& b) {
        return a.r_ == b.r_ && a.nu_ == b.nu_;
    }

  private:
    int r_;
    Rational nu_;
};

}  // namespace rhermite
