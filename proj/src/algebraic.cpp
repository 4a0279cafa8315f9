#include "repst/algebraic.hpp"

#include <stdexcept>

namespace repst {

AlgebraicNumber::AlgebraicNumber(const Poly& modulus, const Poly& representative) {
    if (modulus.degree() < 1) throw std::invalid_argument("modulus must have degree >= 1");
    modulus_ = modulus.monic();
    rep_ = representative.divmod(modulus_).second;
}

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& r) {
    return AlgebraicNumber(poly_from_root(r), Poly(r));
}

Rational AlgebraicNumber::as_rational() const {
    if (!is_rational()) throw std::domain_error("not rational: " + to_string());
    return rep_.coeff(0);
}

bool AlgebraicNumber::is_rational_integer() const {
    return is_rational() && is_integer(rep_.coeff(0));
}

namespace {

void require_same_modulus(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (!(a.modulus() == b.modulus()))
        throw std::invalid_argument("algebraic numbers with different moduli");
}

}  // namespace

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    require_same_modulus(a, b);
    return AlgebraicNumber(a.modulus(), a.rep() + b.rep());
}

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    require_same_modulus(a, b);
    return AlgebraicNumber(a.modulus(), a.rep() - b.rep());
}

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    require_same_modulus(a, b);
    return AlgebraicNumber(a.modulus(), a.rep() * b.rep());
}

std::string AlgebraicNumber::to_string() const {
    return rep_.to_string() + " (mod " + modulus_.to_string() + ")";
}

AlgebraicNumber reduce_mod(const Poly& p, const Poly& m) {
    if (m.degree() < 1) throw std::invalid_argument("reduce_mod: constant modulus");
    return AlgebraicNumber(m, p);
}

AlgebraicNumber eval_poly_at(const Poly& p, const AlgebraicNumber& x) {
    AlgebraicNumber acc(x.modulus(), Poly());
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * x + AlgebraicNumber(x.modulus(), Poly(p.coeff(k)));
    }
    return acc;
}

}  // namespace repst
