#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "repst/algebraic.hpp"
#include "repst/characters.hpp"
#include "repst/diagram.hpp"

namespace repst {

// Interpolation parameter t as an element of a number field Q[T]/(m);
// rationals are carried with the degree-1 modulus T - t.
struct InterpolationPoint {
    AlgebraicNumber value;
    bool is_natural;           // value in {0, 1, 2, ...}
    bool is_rational_integer;  // value in Z

    static InterpolationPoint from(const AlgebraicNumber& value);
    static InterpolationPoint from_rational(const Rational& r);
    static InterpolationPoint from_integer(long long k);
};

// Finite multiset of simple-object labels with positive multiplicities.
using VirtualObject = std::map<Partition, long long, PartitionLess>;

// chi of the simple labelled lambda at t, i.e. Q_lambda(t).  Natural t is
// refused: the interpolation category is only semisimple away from N.
AlgebraicNumber euler_char_simple(const Partition& lambda, const InterpolationPoint& t);

// chi of the isotypic Schur image of an object with Euler characteristic chi,
// computed two independent ways: the character cycle sum
// (dim/n!) sum_rho |C_rho| chi_lambda(rho) chi^{len(rho)}, and the content
// polynomial form (dim^2/n!) cp_lambda(chi).  The caller asserts equality.
std::pair<Poly, Poly> chi_schur_both_ways(const Partition& lambda, const Poly& chi);
std::pair<AlgebraicNumber, AlgebraicNumber> chi_schur_both_ways(const Partition& lambda,
                                                                const AlgebraicNumber& chi);

// The central isotypic idempotent (dim/n!) sum_sigma chi_lambda(sigma) sigma
// realized on permutation diagrams in the endomorphism space of n strands.
DiagramMorphism schur_idempotent(const Partition& lambda, int size_bound = 5);
bool is_zero_in_partition_algebra(const Partition& lambda, int size_bound = 5);

// d . d == d, as an identity with Q[T] coefficients.
bool idempotency_check(const Partition& lambda);
// d_lambda . d_mu == 0 for lambda != mu.
bool orthogonality_check(const Partition& lambda, const Partition& mu);

// Generic-parameter tensor decomposition, extended bilinearly over the
// stable multiplicity oracle.
VirtualObject tensor_decompose(const VirtualObject& x, const VirtualObject& y);

struct IntegralityResult {
    bool integral = true;
    std::optional<Partition> witness;             // first failing label
    std::optional<AlgebraicNumber> witness_chi;
};

// True iff chi of every simple in the support is a rational integer.
IntegralityResult is_integral_type(const VirtualObject& x, const InterpolationPoint& t);

struct ReportStep {
    std::string name;
    std::string value;
    std::string anchor;
};

struct Section7Report {
    std::vector<ReportStep> steps;
    std::string verdict;
};

// The full counterexample chain: a simple object of integral type whose
// tensor square is not.  Every step is checked against its expected exact
// value; any deviation throws.
Section7Report reproduce_section7();

struct CounterexampleSearch {
    enum class Status { kFound, kNoneFound, kUndecided };
    Status status = Status::kNoneFound;
    std::string note;
    std::optional<Poly> modulus;
    // top-degree labels in the tensor square with non-integral chi, in
    // canonical order; the first one is the reported witness
    std::vector<std::pair<Partition, AlgebraicNumber>> failures;
};

// Factors Q_lambda(T) - target; when the cofactor is a certified-irreducible
// quadratic m, checks that the simple labelled lambda is integral at a root
// of m while its tensor square is not.
CounterexampleSearch search_counterexample(const Partition& lambda, const Rational& target);

struct GeneratorPowerReport {
    int n = 0;
    std::map<Partition, long long, PartitionLess> multiplicities;
    long long length = 0;    // sum of multiplicities
    long long dim_end = 0;   // sum of squares
    long long bell_2n = 0;
    bool length_exceeds_sqrt_factorial = false;
};

// Length and endomorphism dimension of the n-th tensor power of the
// generator, cross-checked against Bell(2n); throws on a checksum failure.
GeneratorPowerReport generator_power_report(int n);

}  // namespace repst
