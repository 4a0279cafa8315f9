#pragma once

#include <vector>

#include "repst/diagram.hpp"
#include "repst/polynomial.hpp"

namespace repst {

struct GramOptions {
    // n = 3 runs an evaluation/interpolation determinant; it is aborted with
    // a refusal once elapsed wall time exceeds this budget.
    double budget_minutes = 10.0;
    int threads = 0;  // 0: hardware_concurrency, overridable via THREADS env
};

// Gram matrix of the trace form on the endomorphism space of n strands over
// the diagram basis: G[a][b] = Tr(a . b).  Every entry is a monomial T^c.
std::vector<std::vector<Poly>> gram_matrix(int n);

// Exponent-only view of the Gram matrix (entry c with G[a][b] = T^c).
std::vector<std::vector<int>> gram_exponents(int n);

// det of the Gram matrix: exact fraction-free elimination for n <= 2,
// modular evaluation/interpolation for n = 3, refused beyond.
Poly gram_det(int n, const GramOptions& options = {});

// Integer roots of p found by scanning [-window, deg(p) + window], with
// multiplicities; used for determinants whose coefficients are too large for
// the rational root theorem.  Returns pairs (root, multiplicity).
std::vector<std::pair<long long, int>> integer_roots_in_window(const Poly& p, long long window);

// Rank of the Gram matrix specialized at T = t, by Gaussian elimination.
int gram_rank_at(int n, const Rational& t);

}  // namespace repst
