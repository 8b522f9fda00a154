// Walks the raising ladder out of each ground state at r=3, nu=1 and shows
// the operator identities that organize the family.

#include <cstdio>
#include <string>

#include "rhermite/rhermite.hpp"

using namespace rhermite;

namespace {

std::string poly_text(const SparsePoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [d, c] = *it;
        if (!out.empty()) out += c > 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        Rational a = c > 0 ? c : -c;
        if (a != 1 || d == 0) out += to_string(a);
        if (d > 0) {
            out += a != 1 ? "*x" : "x";
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out;
}

}  // namespace

int main() {
    ModelParams params(3, Rational(1));
    std::printf("family on r=%d radial lines, weight |x|^(2*%s) exp(-x^%d)\n\n",
                params.r(), to_string(params.nu()).c_str(), 2 * params.r());

    std::printf("raising chains: each ground state x^s climbs in steps of r\n");
    for (int s = 0; s < params.r(); ++s) {
        WeightedFunction w = weighted(params, SparsePoly::monomial(s));
        std::printf("  s=%d:", s);
        for (int step = 0; step < 3; ++step) {
            std::printf("  %s", poly_text(w.poly).c_str());
            if (step < 2) std::printf("  ->");
            w = raise_Adag(w);
        }
        std::printf("\n");
    }

    std::printf("\nlowering returns with the deformed number [N]:\n");
    for (int N = 3; N <= 8; ++N) {
        SparsePoly h = radial_hermite(params, N);
        SparsePoly down = lower_A(weighted(params, h)).poly;
        bool exact = down == Rational(2) * params.deformed_number(N) *
                                 radial_hermite(params, N - params.r());
        std::printf("  A H_%d = 2*[%d] H_%d,  [%d] = %s  (%s)\n", N, N, N - params.r(), N,
                    to_string(params.deformed_number(N)).c_str(),
                    exact ? "exact" : "MISMATCH");
    }

    std::printf("\nenergies (boson H0, supersymmetric H) and squared norms:\n");
    std::printf("  %2s %6s %15s %6s %6s  %s\n", "N", "class", "[N]", "E_H0", "E_H", "zeta_N");
    for (const SpectrumRow& row : spectrum_table(params, 9))
        std::printf("  %2d %6s %15s %6s %6ld  %s\n", row.N, to_cstring(row.parity),
                    to_string(row.deformed_number).c_str(),
                    to_string(row.energy_h0).c_str(), row.energy_susy,
                    format_double(row.zeta_float).c_str());

    std::printf("\nground level is %d-fold degenerate; the first excited level doubles it.\n",
                params.r());

    std::printf("\northogonality, exact: <H_4, H_7> ");
    SymbolicSum cross = inner_product(radial_hermite(params, 4), radial_hermite(params, 7),
                                      params);
    std::printf("%s\n", cross.is_zero() ? "cancels to 0" : "UNEXPECTEDLY NONZERO");
    SymbolicMoment z4 = norm_sq(params, 4);
    std::printf("diagonal, closed form:   <H_4, H_4> = %s*Gamma(%s) = %s\n",
                to_string(z4.coeff()).c_str(), to_string(z4.base()).c_str(),
                format_double(z4.to_float()).c_str());
    return 0;
}
