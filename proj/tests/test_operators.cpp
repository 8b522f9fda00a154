#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "rhermite/operators.hpp"
#include "rhermite/polynomials.hpp"

using namespace rhermite;

namespace {

const std::vector<Rational> kNuGrid = {Rational(0), Rational(1, 2), Rational(1), Rational(7, 3)};
const std::vector<int> kRGrid = {1, 3, 5};

SparsePoly random_poly(std::mt19937_64& rng, int max_deg, int terms = 8) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    SparsePoly p;
    for (int t = 0; t < terms; ++t)
        p += SparsePoly::monomial(deg(rng), Rational(num(rng), den(rng)));
    return p;
}

// Independent one-line oracle: p' + nu (p - p(-x))/x, the x-division exact
// because the reflected difference has odd support only.
SparsePoly yang_dunkl(const SparsePoly& p, const Rational& nu) {
    ModelParams line(1, nu);
    SparsePoly odd_part = p - reflect_Rr(p, line);
    return derivative(p) + (nu * odd_part).shifted(-1);
}

}  // namespace

TEST_CASE("projection keeps one degree residue") {
    SparsePoly x2 = SparsePoly::monomial(2);
    CHECK(project(x2, 0, 2) == x2);
    CHECK(project(x2, 1, 2).is_zero());
    CHECK(project(SparsePoly::monomial(8), 2, 6) == SparsePoly::monomial(8));

    CHECK_THROWS_AS(project(x2, 6, 6), std::invalid_argument);
    CHECK_THROWS_AS(project(x2, -1, 6), std::invalid_argument);
    CHECK_THROWS_AS(project(x2, 0, 0), std::invalid_argument);

    // Laurent side uses the true residue for negative degrees.
    LaurentPoly l = LaurentPoly::monomial(-4);
    CHECK(project(l, 2, 6) == l);
    CHECK(project(l, 4, 6).is_zero());
}

TEST_CASE("projections resolve the identity and are idempotent") {
    std::mt19937_64 rng(101);
    for (int m : {2, 3, 6, 10}) {
        SparsePoly p = random_poly(rng, 30);
        SparsePoly sum;
        for (int i = 0; i < m; ++i) {
            SparsePoly pi = project(p, i, m);
            sum += pi;
            CHECK(project(pi, i, m) == pi);
            for (int j = 0; j < m; ++j)
                if (j != i) CHECK(project(pi, j, m).is_zero());
        }
        CHECK(sum == p);
    }
}

TEST_CASE("projection agrees with the root-of-unity character average") {
    // P_i(m) p at z equals (1/m) sum_k w^{-ik} p(w^k z), w = e^{2 pi i/m}.
    std::mt19937_64 rng(202);
    std::uniform_real_distribution<double> mag(0.3, 1.4);
    std::uniform_real_distribution<double> ang(0.0, 6.28318);
    const double tau = 6.283185307179586;
    for (int m : {2, 3, 6}) {
        SparsePoly p = random_poly(rng, 24);
        double bound = 1.0;
        for (const auto& [d, c] : p.terms()) bound += std::abs(to_double(c)) * std::pow(1.4, d);
        for (int i = 0; i < m; ++i) {
            SparsePoly pi = project(p, i, m);
            for (int t = 0; t < 4; ++t) {
                std::complex<double> z = std::polar(mag(rng), ang(rng));
                std::complex<double> avg = 0;
                for (int k = 0; k < m; ++k)
                    avg += std::polar(1.0, -tau * i * k / m) *
                           p.evaluate(std::polar(1.0, tau * k / m) * z);
                avg /= static_cast<double>(m);
                CHECK(std::abs(avg - pi.evaluate(z)) <= 1e-12 * bound);
            }
        }
    }
}

TEST_CASE("reflection signs follow the degree class") {
    ModelParams p3(3, Rational(1));
    CHECK(reflect_Rr(SparsePoly::monomial(2), p3) == SparsePoly::monomial(2));
    CHECK(reflect_Rr(SparsePoly::monomial(4), p3) == SparsePoly::monomial(4, Rational(-1)));

    std::mt19937_64 rng(303);
    for (int r : kRGrid) {
        ModelParams params(r, Rational(1, 2));
        SparsePoly p = random_poly(rng, 40);
        CHECK(reflect_Rr(reflect_Rr(p, params), params) == p);
    }

    // r = 1 is the parity flip.
    ModelParams line(1, Rational(0));
    SparsePoly p = random_poly(rng, 15);
    SparsePoly flipped = reflect_Rr(p, line);
    for (const auto& [d, c] : p.terms())
        CHECK(flipped.coeff(d) == ((d % 2 == 0) ? c : -c));
}

TEST_CASE("derivative in x^r") {
    ModelParams p3(3, Rational(1));
    LaurentPoly d = deriv_dxr(SparsePoly::monomial(7, Rational(2)), p3);
    CHECK(d == LaurentPoly::monomial(4, Rational(14, 3)));
    CHECK(deriv_dxr(SparsePoly::constant(Rational(5)), p3).is_zero());
    CHECK(deriv_dxr(SparsePoly::monomial(1), p3).min_degree() == -2);

    ModelParams line(1, Rational(0));
    std::mt19937_64 rng(404);
    SparsePoly p = random_poly(rng, 20);
    CHECK(deriv_dxr(p, line) == LaurentPoly(derivative(p)));
}

TEST_CASE("deformed derivative acts on monomials by the deformed number") {
    for (int r : kRGrid)
        for (const Rational& nu : kNuGrid) {
            ModelParams params(r, nu);
            for (int N = 0; N <= 60; ++N) {
                SparsePoly img = dunkl_Y(SparsePoly::monomial(N), params);
                Rational factor = params.deformed_number(N);
                if (N < r) {
                    CHECK(img.is_zero());
                } else {
                    CHECK(img == SparsePoly::monomial(N - r, factor));
                }
            }
        }

    ModelParams p31(3, Rational(1));
    CHECK(dunkl_Y(SparsePoly::monomial(7), p31) == SparsePoly::monomial(4, Rational(2)));
    CHECK(dunkl_Y(SparsePoly::monomial(4), p31) == SparsePoly::monomial(1, Rational(5, 3)));
}

TEST_CASE("deformed derivative reduces to the one-line deformed derivative at r = 1") {
    std::mt19937_64 rng(505);
    for (const Rational& nu : kNuGrid) {
        ModelParams line(1, nu);
        for (int N = 0; N <= 60; ++N) {
            SparsePoly mono = SparsePoly::monomial(N);
            CHECK(dunkl_Y(mono, line) == yang_dunkl(mono, nu));
        }
        for (int t = 0; t < 10; ++t) {
            SparsePoly p = random_poly(rng, 40);
            CHECK(dunkl_Y(p, line) == yang_dunkl(p, nu));
        }
    }
}

TEST_CASE("deformed derivative lowers the ladder polynomials") {
    for (int r : kRGrid)
        for (const Rational& nu : kNuGrid) {
            ModelParams params(r, nu);
            for (int N = 0; N <= 40; ++N) {
                SparsePoly img = dunkl_Y(radial_hermite(params, N), params);
                if (N < r) {
                    CHECK(img.is_zero());
                } else {
                    CHECK(img == (2 * params.deformed_number(N)) * radial_hermite(params, N - r));
                }
            }
        }
}

TEST_CASE("no polynomial is an eigenfunction above the kernel") {
    // The kernel is exactly span{1, x, ..., x^{r-1}}; any p of degree >= r
    // maps to a nonzero polynomial of strictly smaller degree, so Y p = c p
    // is impossible for every scalar c.
    std::mt19937_64 rng(606);
    for (int r : kRGrid) {
        ModelParams params(r, Rational(1, 2));
        for (int s = 0; s < r; ++s) CHECK(dunkl_Y(SparsePoly::monomial(s), params).is_zero());
        for (int t = 0; t < 20; ++t) {
            SparsePoly p = random_poly(rng, 30);
            p += SparsePoly::monomial(30);  // pin the degree at 30 >= r
            SparsePoly img = dunkl_Y(p, params);
            CHECK_FALSE(img.is_zero());
            CHECK(img.degree() < p.degree());
        }
    }
}

TEST_CASE("operator trees compose, scale, and sum") {
    ModelParams params(3, Rational(1));
    SparsePoly p = SparsePoly::monomial(7, Rational(3));

    OperatorExpr yxr = OperatorExpr::compose(OperatorExpr::dunkl(), OperatorExpr::mul_xr());
    CHECK(yxr.apply(p, params) == SparsePoly::monomial(7, Rational(3) * params.deformed_number(10)));

    OperatorExpr ident = OperatorExpr::identity();
    CHECK(ident.apply(p, params) == p);

    OperatorExpr half_sum = OperatorExpr::sum({{Rational(1, 2), ident}, {Rational(1, 2), ident}});
    CHECK(half_sum.apply(p, params) == p);

    CHECK(OperatorExpr::projection(1, 6).apply(p, params) == p);
    CHECK_THROWS_AS(OperatorExpr::projection(6, 6), std::invalid_argument);
}

TEST_CASE("reflection anticommutes with the odd generators") {
    std::mt19937_64 rng(707);
    OperatorExpr anti_y = anticommutator(OperatorExpr::dunkl(), OperatorExpr::reflection());
    OperatorExpr anti_x = anticommutator(OperatorExpr::mul_xr(), OperatorExpr::reflection());
    for (int r : kRGrid)
        for (const Rational& nu : {Rational(0), Rational(7, 3)}) {
            ModelParams params(r, nu);
            for (int t = 0; t < 10; ++t) {
                SparsePoly p = random_poly(rng, 30);
                CHECK(anti_y.apply(p, params).is_zero());
                CHECK(anti_x.apply(p, params).is_zero());
            }
        }
}

TEST_CASE("commutator of Y with multiplication by x^r") {
    OperatorExpr comm = commutator(OperatorExpr::dunkl(), OperatorExpr::mul_xr());
    for (int r : kRGrid)
        for (const Rational& nu : kNuGrid) {
            ModelParams params(r, nu);

            // Same content written as a projection sum.
            std::vector<std::pair<Rational, OperatorExpr>> parts = {
                {Rational(1), OperatorExpr::identity()}};
            for (int s = 0; s < r; ++s) {
                Rational w = Rational(2 * nu + 2 * s + 1 - r) / r;
                parts.push_back({w, OperatorExpr::projection(s, 2 * r)});
                parts.push_back({-w, OperatorExpr::projection(r + s, 2 * r)});
            }
            OperatorExpr proj_form = OperatorExpr::sum(parts);

            for (int N = 0; N <= 60; ++N) {
                SparsePoly mono = SparsePoly::monomial(N);
                Rational gap =
                    params.deformed_number(N + r) - params.deformed_number(N);
                CHECK(comm.apply(mono, params) == SparsePoly::monomial(N, gap));
                CHECK(proj_form.apply(mono, params) == SparsePoly::monomial(N, gap));

                DegreeClass dc = params.degree_class(N);
                Rational expected = (dc.parity == Parity::even_class)
                                        ? 1 + 2 * params.nu_s(dc.residue)
                                        : 1 - 2 * params.nu_s(dc.residue);
                CHECK(gap == expected);
            }
        }
}

TEST_CASE("graded intertwining of Y with the order-2r projections") {
    for (int r : kRGrid) {
        ModelParams params(r, Rational(7, 3));
        for (int s = 0; s < 2 * r; ++s) {
            OperatorExpr left = OperatorExpr::compose(OperatorExpr::dunkl(),
                                                      OperatorExpr::projection(s, 2 * r));
            OperatorExpr right = OperatorExpr::compose(
                OperatorExpr::projection((r + s) % (2 * r), 2 * r), OperatorExpr::dunkl());
            for (int N = 0; N <= 60; ++N) {
                LaurentPoly mono = LaurentPoly::monomial(N);
                CHECK(left.apply(mono, params) == right.apply(mono, params));
            }
        }
    }
}
