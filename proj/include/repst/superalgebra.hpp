#pragma once

#include <random>
#include <vector>

#include "repst/combinatorics.hpp"
#include "repst/numeric.hpp"

namespace repst {

struct SuperDim {
    int even = 0;  // dim of the even part
    int odd = 0;   // dim of the odd part
    int euler() const { return even - odd; }
};

// Finite dimensional supercommutative unital algebra presented by structure
// constants on a homogeneous basis: e_0..e_{p-1} even, e_p..e_{p+q-1} odd.
// Construction validates parity, unitality, supercommutativity and
// associativity and throws on any violation.
class SuperAlgebra {
  public:
    SuperAlgebra(int p, int q, std::vector<Rational> unit,
                 std::vector<std::vector<std::vector<Rational>>> mult);

    int even_dim() const { return p_; }
    int odd_dim() const { return q_; }
    int dim() const { return p_ + q_; }
    bool is_odd(int i) const { return i >= p_; }
    const std::vector<Rational>& unit() const { return unit_; }
    // coefficient of e_k in e_i * e_j
    const Rational& structure(int i, int j, int k) const { return mult_[i][j][k]; }

    std::vector<Rational> multiply(const std::vector<Rational>& a,
                                   const std::vector<Rational>& b) const;

    // the three desk examples
    static SuperAlgebra split_pair();      // Q x Q, purely even
    static SuperAlgebra dual_numbers();    // Q[x]/(x^2), x even
    static SuperAlgebra grassmann_line();  // Q[theta], theta odd, theta^2 = 0

  private:
    int p_, q_;
    std::vector<Rational> unit_;
    std::vector<std::vector<std::vector<Rational>>> mult_;
};

// Number of (p|q)-semistandard tableaux of shape lambda: rows and columns
// weakly increase, even letters strict down columns, odd letters strict
// along rows.  Throws beyond the size bound (default 8).
long long super_schur_dim(const Partition& lambda, SuperDim d, int size_bound = 8);

// Rectangle criterion: lambda has at least p+1 rows of length at least q+1.
bool schur_vanishes_super(const Partition& lambda, SuperDim d);

// Gram matrix of the bilinear form B(a, b) = str(L_{ab}) where str is the
// supertrace of left multiplication (trace on the even part minus trace on
// the odd part).  Mixed-parity entries vanish.
std::vector<std::vector<Rational>> supertrace_form(const SuperAlgebra& a);

Rational matrix_det(std::vector<std::vector<Rational>> m);

// Nondegeneracy of the supertrace form.
bool is_etale(const SuperAlgebra& a);

// True iff every etale member of the sample is purely even.
bool etale_implies_even_check(const std::vector<SuperAlgebra>& sample);

// str(L_{theta^2}) = 0 for every odd basis element theta.
bool odd_squares_traceless(const SuperAlgebra& a);

// Random supercommutative algebra with a nilpotent augmentation ideal:
// a quotient of a free supercommutative algebra on a few even and odd
// generators by a random monomial ideal, trimmed to even dim <= max_even and
// odd dim in [1, max_odd].
SuperAlgebra random_supercommutative_algebra(std::mt19937& rng, int max_even, int max_odd);

}  // namespace repst
