#include "repst/interp.hpp"

#include <cmath>
#include <stdexcept>

namespace repst {

InterpolationPoint InterpolationPoint::from(const AlgebraicNumber& value) {
    bool rational_integer = value.is_rational_integer();
    bool natural = rational_integer && value.as_rational() >= 0;
    return InterpolationPoint{value, natural, rational_integer};
}

InterpolationPoint InterpolationPoint::from_rational(const Rational& r) {
    return from(AlgebraicNumber::from_rational(r));
}

InterpolationPoint InterpolationPoint::from_integer(long long k) {
    return from_rational(Rational(static_cast<long>(k)));
}

AlgebraicNumber euler_char_simple(const Partition& lambda, const InterpolationPoint& t) {
    check_partition(lambda);
    if (t.is_natural)
        throw std::runtime_error(
            "euler_char_simple: t is a natural number; the interpolation category is "
            "semisimple only for t outside N");
    return eval_poly_at(q_polynomial(lambda), t.value);
}

namespace {

// (dim/n!) sum over cycle types of |C_rho| chi_lambda(rho) X^{len(rho)},
// as a polynomial in the formal Euler characteristic X.
Poly cycle_sum_polynomial(const Partition& lambda) {
    int n = partition_sum(lambda);
    Rational lead = to_rat(hook_dimension(lambda));
    lead /= Rational(factorial(static_cast<unsigned>(n)));
    std::vector<Rational> coeffs(n + 1, Rational(0));
    for (const CycleType& rho : enumerate_partitions(n)) {
        Rational term = Rational(class_size(rho)) * to_rat(character_value(lambda, rho));
        coeffs[rho.size()] += term * lead;
    }
    return Poly(std::move(coeffs));
}

Poly content_form_polynomial(const Partition& lambda) {
    int n = partition_sum(lambda);
    long long dim = hook_dimension(lambda);
    Rational lead = to_rat(dim) * to_rat(dim) / Rational(factorial(static_cast<unsigned>(n)));
    return content_polynomial(lambda).scaled(lead);
}

}  // namespace

std::pair<Poly, Poly> chi_schur_both_ways(const Partition& lambda, const Poly& chi) {
    return {cycle_sum_polynomial(lambda).compose(chi), content_form_polynomial(lambda).compose(chi)};
}

std::pair<AlgebraicNumber, AlgebraicNumber> chi_schur_both_ways(const Partition& lambda,
                                                                const AlgebraicNumber& chi) {
    return {eval_poly_at(cycle_sum_polynomial(lambda), chi),
            eval_poly_at(content_form_polynomial(lambda), chi)};
}

DiagramMorphism schur_idempotent(const Partition& lambda, int size_bound) {
    check_partition(lambda);
    int n = partition_sum(lambda);
    if (n > size_bound) throw std::invalid_argument("schur_idempotent: |lambda| exceeds the bound");
    Rational lead = to_rat(hook_dimension(lambda));
    lead /= Rational(factorial(static_cast<unsigned>(n)));
    DiagramMorphism out(n, n, Basis::kDiagram);
    for (const std::vector<int>& sigma : all_permutations(n)) {
        Rational coeff = lead * to_rat(character_value(lambda, cycle_type_of(sigma)));
        out.add_term(permutation_diagram(sigma), Poly(coeff));
    }
    return out;
}

bool is_zero_in_partition_algebra(const Partition& lambda, int size_bound) {
    return schur_idempotent(lambda, size_bound).is_zero();
}

bool idempotency_check(const Partition& lambda) {
    DiagramMorphism d = schur_idempotent(lambda, 4);
    return compose(d, d) == d;
}

bool orthogonality_check(const Partition& lambda, const Partition& mu) {
    if (lambda == mu) throw std::invalid_argument("orthogonality_check: labels must differ");
    DiagramMorphism prod = compose(schur_idempotent(lambda, 4), schur_idempotent(mu, 4));
    return prod.is_zero();
}

VirtualObject tensor_decompose(const VirtualObject& x, const VirtualObject& y) {
    VirtualObject out;
    for (const auto& [lambda, mult_x] : x)
        for (const auto& [mu, mult_y] : y) {
            int s = partition_sum(lambda) + partition_sum(mu);
            for (int k = 0; k <= s; ++k)
                for (const Partition& nu : enumerate_partitions(k)) {
                    long long g = stable_tensor_multiplicity(lambda, mu, nu);
                    if (g > 0) out[nu] += mult_x * mult_y * g;
                }
        }
    return out;
}

IntegralityResult is_integral_type(const VirtualObject& x, const InterpolationPoint& t) {
    if (t.is_natural)
        throw std::runtime_error("is_integral_type: t is a natural number; refused");
    IntegralityResult out;
    for (const auto& [lambda, mult] : x) {
        (void)mult;
        AlgebraicNumber chi = euler_char_simple(lambda, t);
        if (!chi.is_rational_integer()) {
            out.integral = false;
            out.witness = lambda;
            out.witness_chi = chi;
            return out;
        }
    }
    return out;
}

namespace {

void expect(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error("section 7 reproduction failed at: " + what);
}

std::string partition_str(const Partition& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

}  // namespace

Section7Report reproduce_section7() {
    Section7Report report;
    auto step = [&](const std::string& name, const std::string& value, const std::string& anchor) {
        report.steps.push_back({name, value, anchor});
    };

    const Partition lambda = {2, 1};
    const Partition mu = {3, 2, 1};

    // chi of the simple labelled (2,1) as a polynomial in the parameter
    Poly q21 = q_polynomial(lambda);
    Poly expected_q21 =
        poly_from_root(Rational(4)) * poly_from_root(Rational(2)) * poly_from_root(Rational(0));
    expect(q21 == expected_q21.scaled(Rational(1, 3)), "Q_(2,1) = (1/3)(T-4)(T-2)T");
    step("q_polynomial(2,1)", q21.to_string(), "dimension polynomial of the simple (2,1)");
    step("q_polynomial(2,1) factored",
         factored_string(Rational(1, 3), {{Rational(4), 1}, {Rational(2), 1}, {Rational(0), 1}}),
         "product form");

    // integer value at t = -1
    Rational at_minus_one = q21.eval(Rational(-1));
    expect(at_minus_one == -5, "Q_(2,1)(-1) = -5");
    step("q_polynomial(2,1) at -1", at_minus_one.get_str(), "integral Euler characteristic");

    // the other parameters with the same Euler characteristic
    Poly shifted = q21 + Poly(Rational(5));
    RootFactorization fact = factor_rational_roots(shifted);
    expect(fact.roots.size() == 1 && fact.roots[0].first == -1 && fact.roots[0].second == 1,
           "rational root -1 of Q + 5");
    Poly modulus = fact.cofactor.monic();
    Poly expected_modulus(std::vector<Rational>{Rational(15), Rational(-7), Rational(1)});
    expect(modulus == expected_modulus, "modulus T^2 - 7T + 15");
    expect(fact.cofactor_certified_irreducible, "irreducible quadratic cofactor");
    step("Q + 5 factored",
         factored_string(Rational(1, 3), {{Rational(-1), 1}}, modulus),
         "roots of Q_(2,1) + 5");
    step("modulus", modulus.to_string(), "minimal polynomial of tau");

    InterpolationPoint tau = InterpolationPoint::from(AlgebraicNumber(modulus, Poly::variable()));
    AlgebraicNumber chi_lambda_tau = euler_char_simple(lambda, tau);
    expect(chi_lambda_tau.is_rational_integer() && chi_lambda_tau.as_rational() == -5,
           "chi of (2,1) at tau equals -5");
    step("chi([2,1]) at tau", chi_lambda_tau.to_string(), "integral at the irrational parameter");

    IntegralityResult base = is_integral_type(VirtualObject{{lambda, 1}}, tau);
    expect(base.integral, "the simple (2,1) is of integral type at tau");
    step("integral type of [2,1]", "true", "single simple with integer chi");

    // multiplicity of (3,2,1) in the tensor square, three ways
    long long by_induction = induction_multiplicity(lambda, lambda, mu);
    long long by_lr = lr_coefficient(lambda, lambda, mu);
    long long by_stable = stable_tensor_multiplicity(lambda, lambda, mu);
    expect(by_induction == 2 && by_lr == 2 && by_stable == 2,
           "multiplicity 2 of (3,2,1) in the square");
    step("multiplicity of (3,2,1)", "2", "induction, LR and stable oracles agree");

    VirtualObject square = tensor_decompose(VirtualObject{{lambda, 1}}, VirtualObject{{lambda, 1}});
    auto found = square.find(mu);
    expect(found != square.end() && found->second == 2, "(3,2,1) occurs in the decomposition");

    // chi of (3,2,1) at tau via the remainder mod the minimal polynomial
    Poly q321 = q_polynomial(mu);
    Poly primitive = q321.scaled(Rational(45));
    Poly pre_simplified = primitive.divmod(modulus).second;
    expect(pre_simplified == Poly(std::vector<Rational>{Rational(-1080), Rational(135)}),
           "remainder 135T - 1080 of the integer form");
    step("remainder, integer form", "(1/45)*(" + pre_simplified.to_string() + ")",
         "before simplification");

    AlgebraicNumber chi_mu_tau = reduce_mod(q321, modulus);
    expect(chi_mu_tau.rep() == Poly(std::vector<Rational>{Rational(-24), Rational(3)}),
           "chi of (3,2,1) at tau equals 3*tau - 24");
    expect(euler_char_simple(mu, tau) == chi_mu_tau, "remainder route matches evaluation route");
    step("chi([3,2,1]) at tau", chi_mu_tau.to_string(), "not a rational integer");
    expect(!chi_mu_tau.is_rational_integer(), "3*tau - 24 is not a rational integer");

    IntegralityResult squared = is_integral_type(square, tau);
    expect(!squared.integral, "the tensor square is not of integral type");
    expect(squared.witness.has_value(), "a failing label is reported");
    step("integral type of [2,1] x [2,1]", "false", "witness " + partition_str(*squared.witness));

    report.verdict = "counterexample confirmed";
    return report;
}

CounterexampleSearch search_counterexample(const Partition& lambda, const Rational& target) {
    check_partition(lambda);
    if (partition_sum(lambda) > 4)
        throw std::invalid_argument("search_counterexample: |lambda| exceeds the bound");
    CounterexampleSearch out;

    Poly shifted = q_polynomial(lambda) - Poly(target);
    RootFactorization fact = factor_rational_roots(shifted);
    if (fact.cofactor.degree() <= 0) {
        out.status = CounterexampleSearch::Status::kNoneFound;
        out.note = "no irrational parameter with this Euler characteristic";
        return out;
    }
    if (fact.cofactor.degree() > 2 || !fact.cofactor_certified_irreducible) {
        out.status = CounterexampleSearch::Status::kUndecided;
        out.note = "cofactor of degree >= 3; rational-root factorization cannot certify it";
        return out;
    }
    Poly modulus = fact.cofactor.monic();
    out.modulus = modulus;
    InterpolationPoint t = InterpolationPoint::from(AlgebraicNumber(modulus, Poly::variable()));

    IntegralityResult base = is_integral_type(VirtualObject{{lambda, 1}}, t);
    if (!base.integral)
        throw std::logic_error("search_counterexample: chi at a root of Q - target is not target");

    // top-degree layer of the square: multiplicities are LR coefficients
    int s = 2 * partition_sum(lambda);
    for (const Partition& nu : enumerate_partitions(s)) {
        if (lr_coefficient(lambda, lambda, nu) == 0) continue;
        AlgebraicNumber chi = euler_char_simple(nu, t);
        if (!chi.is_rational_integer()) out.failures.emplace_back(nu, chi);
    }
    if (out.failures.empty()) {
        out.status = CounterexampleSearch::Status::kNoneFound;
        out.note = "every top-degree summand of the square has integral chi";
        return out;
    }
    VirtualObject square = tensor_decompose(VirtualObject{{lambda, 1}}, VirtualObject{{lambda, 1}});
    IntegralityResult squared = is_integral_type(square, t);
    if (squared.integral)
        throw std::logic_error("search_counterexample: square integral despite a failing summand");
    out.status = CounterexampleSearch::Status::kFound;
    out.note = "tensor square not integral";
    return out;
}

GeneratorPowerReport generator_power_report(int n) {
    if (n < 0 || n > 5) throw std::invalid_argument("generator_power_report: n out of range");
    GeneratorPowerReport report;
    report.n = n;
    report.multiplicities = generator_power_multiplicities(n);
    long long length = 0, dim = 0;
    for (const auto& [lambda, mult] : report.multiplicities) {
        (void)lambda;
        length += mult;
        dim += mult * mult;
    }
    report.length = length;
    report.dim_end = dim;
    report.bell_2n = to_long_checked(bell_number(2 * n));
    if (report.dim_end != report.bell_2n)
        throw std::logic_error("generator_power_report: dim End does not match Bell(2n)");
    // length >= sqrt(n!), checked in integers
    BigInt fac = factorial(static_cast<unsigned>(n));
    report.length_exceeds_sqrt_factorial = to_big(length) * to_big(length) >= fac;
    return report;
}

}  // namespace repst
