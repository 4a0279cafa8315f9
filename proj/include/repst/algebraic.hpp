#pragma once

#include <string>

#include "repst/polynomial.hpp"

namespace repst {

// Element of Q[T]/(m) for a monic modulus m of degree >= 1.  Two values are
// comparable/combinable only when their moduli agree syntactically.
class AlgebraicNumber {
  public:
    // Normalizes: modulus is made monic, the representative reduced mod it.
    AlgebraicNumber(const Poly& modulus, const Poly& representative);

    // r as an element of Q[T]/(T - r).
    static AlgebraicNumber from_rational(const Rational& r);

    const Poly& modulus() const { return modulus_; }
    const Poly& rep() const { return rep_; }

    bool is_rational() const { return rep_.degree() <= 0; }
    Rational as_rational() const;
    // rep of degree <= 0 with an integer constant
    bool is_rational_integer() const;

    friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) = default;

    std::string to_string() const;  // "3*T - 24 (mod T^2 - 7*T + 15)"

  private:
    Poly modulus_;
    Poly rep_;
};

// p mod m as an AlgebraicNumber; m must have degree >= 1.
AlgebraicNumber reduce_mod(const Poly& p, const Poly& m);

// p(x) computed inside Q[T]/(modulus of x).
AlgebraicNumber eval_poly_at(const Poly& p, const AlgebraicNumber& x);

}  // namespace repst
