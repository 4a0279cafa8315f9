#include "repst/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace repst {

Poly::Poly(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly Poly::variable() { return monomial(Rational(1), 1); }

Poly Poly::monomial(const Rational& c, int k) {
    if (k < 0) throw std::invalid_argument("monomial: negative exponent");
    if (c == 0) return Poly();
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return Poly(std::move(v));
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[k];
}

const Rational& Poly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (Rational& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(out));
}

Poly Poly::scaled(const Rational& c) const {
    if (c == 0) return Poly();
    Poly r = *this;
    for (Rational& x : r.coeffs_) x *= c;
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly rem = *this;
    if (rem.degree() < divisor.degree()) return {Poly(), rem};
    std::vector<Rational> q(rem.degree() - divisor.degree() + 1, Rational(0));
    const Rational& lead = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        int shift = rem.degree() - divisor.degree();
        Rational f = rem.leading() / lead;
        q[shift] = f;
        rem -= divisor.scaled(f) * monomial(Rational(1), shift);
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::exact_div(const Poly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
    return q;
}

Poly Poly::monic() const {
    if (is_zero()) throw std::domain_error("monic: zero polynomial");
    return scaled(1 / leading());
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + Poly(*it);
    return acc;
}

namespace {

// "5", "1/3", parenthesized when used as a multiplier
std::string coeff_str(const Rational& c, bool as_factor) {
    std::string s = c.get_str();
    if (as_factor && !is_integer(c)) return "(" + s + ")";
    return s;
}

}  // namespace

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coeff(k);
        if (c == 0) continue;
        bool first = out.empty();
        Rational mag = abs(c);
        if (!first) out += (c < 0) ? " - " : " + ";
        else if (c < 0)
            out += "-";
        std::string term;
        if (k == 0) {
            term = coeff_str(mag, false);
        } else {
            std::string var = (k == 1) ? "T" : "T^" + std::to_string(k);
            term = (mag == 1) ? var : coeff_str(mag, true) + "*" + var;
        }
        out += term;
    }
    return out;
}

Poly poly_from_root(const Rational& r) {
    return Poly(std::vector<Rational>{-r, Rational(1)});
}

std::string factored_string(const Rational& lead,
                            const std::vector<std::pair<Rational, int>>& roots,
                            const Poly& cofactor) {
    std::string out;
    if (lead != 1) out += coeff_str(lead, true);
    for (const auto& [r, mult] : roots) {
        std::string factor;
        if (r == 0) factor = "T";
        else if (r < 0)
            factor = "(T + " + Rational(-r).get_str() + ")";
        else
            factor = "(T - " + r.get_str() + ")";
        if (mult > 1) factor += "^" + std::to_string(mult);
        if (!out.empty()) out += "*";
        out += factor;
    }
    if (!(cofactor.degree() <= 0 && !cofactor.is_zero() && cofactor.coeff(0) == 1)) {
        std::string cf = cofactor.to_string();
        if (!out.empty()) out += "*";
        out += "(" + cf + ")";
    }
    if (out.empty()) out = "1";
    return out;
}

namespace {

// divisors of |n|, ascending; n != 0.  Guarded: refuses when trial division
// would not terminate in reasonable time.
std::vector<BigInt> divisors(const BigInt& n) {
    BigInt a = abs(n);
    if (a > BigInt("1000000000000"))
        throw std::runtime_error("rational root extraction: coefficient too large to factor");
    std::vector<BigInt> small, large;
    for (BigInt d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            small.push_back(d);
            if (d * d != a) large.push_back(a / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

std::vector<Rational> content_polynomial_roots(const Partition& p) {
    check_partition(p);
    std::vector<Rational> roots;
    for (size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j) roots.emplace_back(static_cast<long>(i) - j);
    return roots;  // root of (T + j - i) is i - j
}

Poly content_polynomial(const Partition& p) {
    Poly out{Rational(1)};
    for (const Rational& r : content_polynomial_roots(p)) out *= poly_from_root(r);
    return out;
}

std::vector<Rational> q_polynomial_roots(const Partition& p) {
    check_partition(p);
    int n = partition_sum(p);
    std::vector<Rational> roots;
    for (int a = 1; a <= n; ++a) {
        int part = (a <= static_cast<int>(p.size())) ? p[a - 1] : 0;
        roots.emplace_back(n + part - a);
    }
    return roots;
}

Poly q_polynomial(const Partition& p) {
    int n = partition_sum(p);
    Rational lead = to_rat(hook_dimension(p));
    lead /= Rational(factorial(static_cast<unsigned>(n)));
    Poly out(lead);
    for (const Rational& r : q_polynomial_roots(p)) out *= poly_from_root(r);
    return out;
}

bool is_integer_valued(const Poly& p) {
    for (int x = 0; x <= std::max(0, p.degree()); ++x)
        if (!is_integer(p.eval(Rational(x)))) return false;
    return true;
}

RootFactorization factor_rational_roots(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("factor_rational_roots: zero polynomial");
    RootFactorization out;
    Poly rest = p;

    // T^v factor
    int v = 0;
    while (rest.coeff(0) == 0 && rest.degree() > 0) {
        rest = rest.exact_div(Poly::variable());
        ++v;
    }
    if (v > 0) out.roots.emplace_back(Rational(0), v);

    if (rest.degree() > 0) {
        // primitive integer form: candidates num/den with num | c0, den | lead
        BigInt denom_lcm = 1;
        for (const Rational& c : rest.coeffs()) {
            BigInt d;
            mpz_lcm(d.get_mpz_t(), denom_lcm.get_mpz_t(), c.get_den().get_mpz_t());
            denom_lcm = d;
        }
        std::vector<BigInt> ic;
        for (const Rational& c : rest.coeffs()) {
            Rational scaled = c * Rational(denom_lcm);
            ic.push_back(scaled.get_num());
        }
        BigInt content = 0;
        for (const BigInt& c : ic) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
        if (content > 1)
            for (BigInt& c : ic) c /= content;

        std::vector<BigInt> nums = divisors(ic.front());
        std::vector<BigInt> dens = divisors(ic.back());
        for (const BigInt& den : dens) {
            for (const BigInt& num : nums) {
                for (int sign : {1, -1}) {
                    if (rest.degree() <= 0) break;
                    Rational cand(sign * num, den);
                    cand.canonicalize();
                    int mult = 0;
                    while (rest.degree() > 0 && rest.eval(cand) == 0) {
                        rest = rest.exact_div(poly_from_root(cand));
                        ++mult;
                    }
                    if (mult > 0) out.roots.emplace_back(cand, mult);
                }
            }
        }
    }

    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.cofactor = rest;
    if (rest.degree() <= 0) {
        out.cofactor_certified_irreducible = true;  // unit, nothing to factor
    } else if (rest.degree() == 1) {
        out.cofactor_certified_irreducible = true;  // cannot occur: linear has a rational root
    } else if (rest.degree() == 2) {
        // disc = b^2 - 4ac; a rational square iff numerator and denominator
        // of the reduced form are both squares
        Rational a = rest.coeff(2), b = rest.coeff(1), c = rest.coeff(0);
        Rational disc = b * b - 4 * a * c;
        bool square = disc >= 0 && is_perfect_square(disc.get_num()) && is_perfect_square(disc.get_den());
        if (square) throw std::logic_error("quadratic with square discriminant survived root extraction");
        out.cofactor_certified_irreducible = true;
    }
    return out;
}

}  // namespace repst
