#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "repst/algebraic.hpp"
#include "repst/polynomial.hpp"

using namespace repst;

namespace {

Poly from_ints(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return Poly(std::move(v));
}

Poly random_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg_dist(0, max_deg);
    std::uniform_int_distribution<int> num_dist(-20, 20);
    std::uniform_int_distribution<int> den_dist(1, 6);
    int deg = deg_dist(rng);
    std::vector<Rational> coeffs;
    for (int k = 0; k <= deg; ++k) {
        Rational c(num_dist(rng), den_dist(rng));
        c.canonicalize();
        coeffs.push_back(c);
    }
    return Poly(std::move(coeffs));
}

// independent route for the integer-valued test: finite differences at 0
// give the coefficients in the binomial basis, which must all be integers
bool integer_valued_by_binomial_basis(const Poly& p) {
    int d = std::max(0, p.degree());
    std::vector<Rational> row;
    for (int x = 0; x <= d; ++x) row.push_back(p.eval(Rational(x)));
    for (int level = 0; level <= d; ++level) {
        if (!is_integer(row[0])) return false;
        for (size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
        row.pop_back();
    }
    return true;
}

const Poly kTauModulus = from_ints({15, -7, 1});  // T^2 - 7T + 15

}  // namespace

TEST_CASE("polynomial ring basics") {
    Poly t = Poly::variable();
    CHECK((t - Poly(Rational(1))) * (t + Poly(Rational(1))) == from_ints({-1, 0, 1}));
    CHECK(Poly().degree() == -1);
    CHECK(from_ints({0}).is_zero());
    CHECK(from_ints({3, 0, 0}).degree() == 0);

    auto [q, r] = from_ints({-1, 0, 1}).divmod(from_ints({-1, 1}));
    CHECK(q == from_ints({1, 1}));
    CHECK(r.is_zero());
    CHECK_THROWS_AS(t.divmod(Poly()), std::domain_error);

    std::mt19937 rng(20240811);
    for (int i = 0; i < 200; ++i) {
        Poly a = random_poly(rng, 6), b = random_poly(rng, 4);
        if (b.is_zero()) continue;
        auto [quot, rem] = a.divmod(b);
        CHECK(quot * b + rem == a);
        CHECK(rem.degree() < b.degree());
    }
}

TEST_CASE("polynomial printing") {
    CHECK(from_ints({0}).to_string() == "0");
    CHECK(from_ints({-5}).to_string() == "-5");
    CHECK(Poly::variable().to_string() == "T");
    CHECK(from_ints({0, -1}).to_string() == "-T");
    CHECK(from_ints({1, -2, 1}).to_string() == "T^2 - 2*T + 1");
    Poly q21 = q_polynomial({2, 1});
    CHECK(q21.to_string() == "(1/3)*T^3 - 2*T^2 + (8/3)*T");
    CHECK(factored_string(Rational(1, 3), {{Rational(4), 1}, {Rational(2), 1}, {Rational(0), 1}}) ==
          "(1/3)*(T - 4)*(T - 2)*T");
    CHECK(factored_string(Rational(1), {{Rational(-1), 2}}) == "(T + 1)^2");
}

TEST_CASE("content polynomial") {
    CHECK(content_polynomial({1}) == Poly::variable());
    CHECK(content_polynomial({2}) == from_ints({0, 1, 1}));                 // T(T+1)
    CHECK(content_polynomial({2, 1}) == from_ints({0, -1, 0, 1}));          // (T-1)T(T+1)
    CHECK(content_polynomial({}) == Poly(Rational(1)));

    for (const Partition& p : enumerate_partitions_up_to(6)) {
        Poly cp = content_polynomial(p);
        CHECK(cp.degree() == partition_sum(p));
        if (!p.empty()) {
            CHECK(cp.leading() == 1);
            CHECK(cp.eval(Rational(0)) == 0);  // the cell (1,1) has content 0
            // all roots lie in [-(columns-1), rows-1]
            int rows = static_cast<int>(p.size());
            int cols = p[0];
            for (const Rational& r : content_polynomial_roots(p)) {
                CHECK(r >= Rational(-(cols - 1)));
                CHECK(r <= Rational(rows - 1));
            }
        }
    }
}

TEST_CASE("q polynomial") {
    CHECK(q_polynomial({1}) == from_ints({-1, 1}));  // T - 1
    Poly q21 = q_polynomial({2, 1});
    Poly expected21 = poly_from_root(Rational(4)) * poly_from_root(Rational(2)) *
                      poly_from_root(Rational(0));
    CHECK(q21 == expected21.scaled(Rational(1, 3)));

    Poly q321 = q_polynomial({3, 2, 1});
    Poly expected321 = poly_from_root(Rational(8)) * poly_from_root(Rational(6)) *
                       poly_from_root(Rational(4)) * poly_from_root(Rational(2)) *
                       poly_from_root(Rational(1)) * poly_from_root(Rational(0));
    CHECK(q321 == expected321.scaled(Rational(1, 45)));

    // Q_{(1)}(n) = n - 1 = dim of the padded hook (n-1, 1)
    for (int n = 3; n <= 10; ++n)
        CHECK(q_polynomial({1}).eval(Rational(n)) == to_rat(hook_dimension({n - 1, 1})));

    for (const Partition& p : enumerate_partitions_up_to(6)) {
        Poly q = q_polynomial(p);
        CHECK(q.degree() == partition_sum(p));
        Rational expected_lead = to_rat(hook_dimension(p));
        expected_lead /= Rational(factorial(partition_sum(p)));
        if (!p.empty()) CHECK(q.leading() == expected_lead);
    }
}

TEST_CASE("q polynomial integrality and padded dimensions") {
    // integer-valued, and integral at every point of [-10, 10]
    for (const Partition& p : enumerate_partitions_up_to(6)) {
        Poly q = q_polynomial(p);
        CHECK(is_integer_valued(q));
        for (int n = -10; n <= 10; ++n) CHECK(is_integer(q.eval(Rational(n))));
    }
    // the values at large m are dimensions of padded shapes
    for (const Partition& p : enumerate_partitions_up_to(5)) {
        Poly q = q_polynomial(p);
        for (int m = 2 * partition_sum(p) + 1; m <= 15; ++m)
            CHECK(q.eval(Rational(m)) == to_rat(hook_dimension(pad_partition(p, m))));
    }
}

TEST_CASE("integer-valued polynomial test") {
    CHECK(is_integer_valued(from_ints({0, -1, 1}).scaled(Rational(1, 2))));  // T(T-1)/2
    CHECK_FALSE(is_integer_valued(Poly::variable().scaled(Rational(1, 2))));
    CHECK(is_integer_valued(q_polynomial({2, 1})));
    CHECK(is_integer_valued(Poly()));

    // two independent implementations agree on random inputs
    std::mt19937 rng(987654321);
    int integer_valued_seen = 0;
    for (int i = 0; i < 1000; ++i) {
        Poly p = random_poly(rng, 6);
        bool expected = integer_valued_by_binomial_basis(p);
        CHECK(is_integer_valued(p) == expected);
        if (expected) ++integer_valued_seen;
        // binomial-basis polynomials are integer valued by construction
        Poly binom(Rational(1));
        std::uniform_int_distribution<int> kd(0, 5), cd(-3, 3);
        int k = kd(rng);
        for (int j = 0; j < k; ++j)
            binom *= (Poly::variable() - Poly(Rational(j))).scaled(Rational(1, j + 1));
        binom = binom.scaled(Rational(cd(rng)));
        CHECK(is_integer_valued(binom));
    }
    CHECK(integer_valued_seen < 1000);  // the sample actually exercises both outcomes
}

TEST_CASE("reduce mod and algebraic numbers") {
    // the section 7 remainder: 45 * Q_{(3,2,1)} has remainder 135T - 1080
    Poly q321 = q_polynomial({3, 2, 1});
    auto [quot, rem] = q321.scaled(Rational(45)).divmod(kTauModulus);
    CHECK(rem == from_ints({-1080, 135}));
    (void)quot;

    AlgebraicNumber chi = reduce_mod(q321, kTauModulus);
    CHECK(chi.rep() == from_ints({-24, 3}));
    CHECK_FALSE(chi.is_rational_integer());

    CHECK(reduce_mod(kTauModulus, kTauModulus).rep().is_zero());
    CHECK(reduce_mod(Poly(Rational(5)), kTauModulus).as_rational() == 5);
    CHECK(AlgebraicNumber::from_rational(Rational(-5)).is_rational_integer());
    CHECK_FALSE(AlgebraicNumber::from_rational(Rational(1, 2)).is_rational_integer());
    CHECK_THROWS_AS(reduce_mod(Poly::variable(), Poly(Rational(3))), std::invalid_argument);

    // evaluating the modulus at its own root class gives zero
    AlgebraicNumber tau(kTauModulus, Poly::variable());
    CHECK(eval_poly_at(kTauModulus, tau).rep().is_zero());
    CHECK(eval_poly_at(q321, tau) == chi);

    // reduction is a ring homomorphism
    std::mt19937 rng(13579);
    for (int i = 0; i < 100; ++i) {
        Poly a = random_poly(rng, 5), b = random_poly(rng, 5);
        CHECK(reduce_mod(a + b, kTauModulus) ==
              reduce_mod(a, kTauModulus) + reduce_mod(b, kTauModulus));
        CHECK(reduce_mod(a * b, kTauModulus) ==
              reduce_mod(a, kTauModulus) * reduce_mod(b, kTauModulus));
    }
}

TEST_CASE("rational root extraction") {
    // the section 7(a) factorization: Q_{(2,1)} + 5 = (1/3)(T+1)(T^2-7T+15)
    Poly shifted = q_polynomial({2, 1}) + Poly(Rational(5));
    RootFactorization f = factor_rational_roots(shifted);
    REQUIRE(f.roots.size() == 1);
    CHECK(f.roots[0].first == -1);
    CHECK(f.roots[0].second == 1);
    CHECK(f.cofactor == kTauModulus.scaled(Rational(1, 3)));
    CHECK(f.cofactor_certified_irreducible);

    RootFactorization g = factor_rational_roots(poly_from_root(Rational(1)) * poly_from_root(Rational(2)));
    REQUIRE(g.roots.size() == 2);
    CHECK(g.roots[0].first == 1);
    CHECK(g.roots[1].first == 2);
    CHECK(g.cofactor.degree() == 0);

    RootFactorization h = factor_rational_roots(from_ints({1, 0, 1}));
    CHECK(h.roots.empty());
    CHECK(h.cofactor == from_ints({1, 0, 1}));
    CHECK(h.cofactor_certified_irreducible);

    // multiplicity and fractional roots: (2T-1)^2 (T-3) T^2
    Poly p = from_ints({-1, 2}) * from_ints({-1, 2}) * poly_from_root(Rational(3)) *
             Poly::variable() * Poly::variable();
    RootFactorization k = factor_rational_roots(p);
    REQUIRE(k.roots.size() == 3);
    CHECK(k.roots[0] == std::pair<Rational, int>(Rational(0), 2));
    CHECK(k.roots[1] == std::pair<Rational, int>(Rational(1, 2), 2));
    CHECK(k.roots[2] == std::pair<Rational, int>(Rational(3), 1));
    CHECK(k.cofactor.degree() == 0);

    CHECK_THROWS_AS(factor_rational_roots(Poly()), std::invalid_argument);
}
