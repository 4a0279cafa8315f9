#pragma once

#include <string>
#include <utility>
#include <vector>

#include "repst/combinatorics.hpp"
#include "repst/numeric.hpp"

namespace repst {

// Univariate polynomial over Q in the indeterminate T, dense ascending
// coefficients with no trailing zeros.  deg(0) = -1.
class Poly {
  public:
    Poly() = default;
    explicit Poly(const Rational& c);
    explicit Poly(std::vector<Rational> coeffs);

    static Poly variable();                    // T
    static Poly monomial(const Rational& c, int k);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend bool operator==(const Poly& a, const Poly& b) = default;

    Poly scaled(const Rational& c) const;
    // Euclidean division: (quotient, remainder) with deg(rem) < deg(divisor).
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    // Division known to be exact; throws if a remainder appears.
    Poly exact_div(const Poly& divisor) const;
    Poly monic() const;

    Rational eval(const Rational& x) const;
    // p(q(T)), by Horner.
    Poly compose(const Poly& inner) const;

    // Human form, descending powers: "(1/3)*T^3 - 2*T^2 + (8/3)*T".
    std::string to_string() const;

  private:
    void normalize();
    std::vector<Rational> coeffs_;
};

Poly poly_from_root(const Rational& r);  // T - r

// "(1/3)*(T - 4)*(T - 2)*T" style rendering of lead * prod (T - r_i)^m_i.
std::string factored_string(const Rational& lead,
                            const std::vector<std::pair<Rational, int>>& roots,
                            const Poly& cofactor = Poly(Rational(1)));

// prod over cells (i,j) of p of (T + j - i); monic of degree |p|.
Poly content_polynomial(const Partition& p);

// (dim V_p / |p|!) prod_{a=1..|p|} (T - (|p| + p_a - a)); the dimension
// interpolation polynomial of the simple object labelled by p.
Poly q_polynomial(const Partition& p);

// The integer roots of q_polynomial in the order the product is written.
std::vector<Rational> q_polynomial_roots(const Partition& p);
std::vector<Rational> content_polynomial_roots(const Partition& p);

// True iff p(Z) is a subset of Z, decided by evaluating at 0..deg(p);
// integrality on deg+1 consecutive integers propagates to all of Z.
bool is_integer_valued(const Poly& p);

struct RootFactorization {
    std::vector<std::pair<Rational, int>> roots;  // (root, multiplicity)
    Poly cofactor;                                // no rational roots
    // deg <= 2 cofactors are decided (quadratics certified irreducible by a
    // non-square discriminant); higher degrees are left undecided.
    bool cofactor_certified_irreducible = false;
};

// Extracts all rational roots of p by the rational root theorem applied to
// the primitive integer form.
RootFactorization factor_rational_roots(const Poly& p);

}  // namespace repst
