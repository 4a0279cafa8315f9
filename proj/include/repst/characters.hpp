#pragma once

#include <map>

#include "repst/combinatorics.hpp"
#include "repst/numeric.hpp"

namespace repst {

// Class function on the symmetric group on n letters: a value per cycle type.
struct ClassFunction {
    int n = 0;
    std::map<CycleType, Rational, PartitionLess> values;
};

// Irreducible character value chi_lambda(rho) by the Murnaghan-Nakayama
// recursion over border strips (beta-set formulation, memoized).
long long character_value(const Partition& lambda, const CycleType& rho);

// Size of the conjugacy class of cycle type rho: n! / prod k^{m_k} m_k!.
BigInt class_size(const CycleType& rho);

// Number of fixed points of the class, i.e. the number of parts equal to 1.
int fixed_points(const CycleType& rho);

ClassFunction irreducible_character(const Partition& lambda);

// (1/n!) sum_rho |C_rho| phi(rho) psi(rho).
Rational inner_product(const ClassFunction& phi, const ClassFunction& psi);

// Multiplicity of V_nu in the induction of V_lambda x V_mu from the Young
// subgroup, computed by Frobenius reciprocity.  Requires |nu| = |lambda| + |mu|.
long long induction_multiplicity(const Partition& lambda, const Partition& mu, const Partition& nu);

// Littlewood-Richardson coefficient c^nu_{lambda,mu} by enumerating LR skew
// tableaux of shape nu/lambda and content mu.  Returns 0 when the sizes do
// not match or lambda is not contained in nu.
long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// Multiplicity of the simple labelled nu in the tensor product of the
// simples labelled lambda and mu at generic parameter: the stable Kronecker
// coefficient, computed as a character inner product over the symmetric
// group on m letters with padded labels.  Evaluated at m = 2(|lambda|+|mu|)+2
// and m+1; a disagreement throws (stabilization bound violated).
long long stable_tensor_multiplicity(const Partition& lambda, const Partition& mu,
                                     const Partition& nu);

// Multiplicity of each simple in the n-th tensor power of the generator:
// (1/m!) sum_rho |C_rho| fix(rho)^n chi_{pad(lambda,m)}(rho) with m = 2n+2.
std::map<Partition, long long, PartitionLess> generator_power_multiplicities(int n);

}  // namespace repst
