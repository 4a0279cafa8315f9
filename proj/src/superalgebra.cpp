#include "repst/superalgebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace repst {

namespace {

std::vector<Rational> basis_vector(int dim, int i) {
    std::vector<Rational> v(dim, Rational(0));
    v[i] = 1;
    return v;
}

}  // namespace

SuperAlgebra::SuperAlgebra(int p, int q, std::vector<Rational> unit,
                           std::vector<std::vector<std::vector<Rational>>> mult)
    : p_(p), q_(q), unit_(std::move(unit)), mult_(std::move(mult)) {
    if (p < 0 || q < 0) throw std::invalid_argument("superalgebra: negative dimensions");
    int d = p + q;
    if (static_cast<int>(unit_.size()) != d) throw std::invalid_argument("superalgebra: unit size");
    if (static_cast<int>(mult_.size()) != d) throw std::invalid_argument("superalgebra: mult size");
    for (const auto& row : mult_) {
        if (static_cast<int>(row.size()) != d) throw std::invalid_argument("superalgebra: mult size");
        for (const auto& cell : row)
            if (static_cast<int>(cell.size()) != d)
                throw std::invalid_argument("superalgebra: mult size");
    }
    // parity: even*even -> even, even*odd -> odd, odd*odd -> even
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                if (mult_[i][j][k] != 0 &&
                    ((is_odd(i) ^ is_odd(j)) != is_odd(k)))
                    throw std::invalid_argument("superalgebra: parity violated");
    // the unit is even and a two-sided identity
    for (int i = p_; i < d; ++i)
        if (unit_[i] != 0) throw std::invalid_argument("superalgebra: unit has odd component");
    for (int j = 0; j < d; ++j) {
        std::vector<Rational> ej = basis_vector(d, j);
        if (multiply(unit_, ej) != ej || multiply(ej, unit_) != ej)
            throw std::invalid_argument("superalgebra: unit is not an identity");
    }
    // supercommutativity: e_i e_j = (-1)^{|i||j|} e_j e_i
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            int sign = (is_odd(i) && is_odd(j)) ? -1 : 1;
            for (int k = 0; k < d; ++k)
                if (mult_[i][j][k] != sign * mult_[j][i][k])
                    throw std::invalid_argument("superalgebra: not supercommutative");
        }
    // associativity on basis triples
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                std::vector<Rational> left =
                    multiply(multiply(basis_vector(d, i), basis_vector(d, j)), basis_vector(d, k));
                std::vector<Rational> right =
                    multiply(basis_vector(d, i), multiply(basis_vector(d, j), basis_vector(d, k)));
                if (left != right) throw std::invalid_argument("superalgebra: not associative");
            }
}

std::vector<Rational> SuperAlgebra::multiply(const std::vector<Rational>& a,
                                             const std::vector<Rational>& b) const {
    int d = dim();
    std::vector<Rational> out(d, Rational(0));
    for (int i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (b[j] == 0) continue;
            Rational f = a[i] * b[j];
            for (int k = 0; k < d; ++k)
                if (mult_[i][j][k] != 0) out[k] += f * mult_[i][j][k];
        }
    }
    return out;
}

namespace {

std::vector<std::vector<std::vector<Rational>>> zero_mult(int d) {
    return std::vector<std::vector<std::vector<Rational>>>(
        d, std::vector<std::vector<Rational>>(d, std::vector<Rational>(d, Rational(0))));
}

}  // namespace

SuperAlgebra SuperAlgebra::split_pair() {
    auto mult = zero_mult(2);
    mult[0][0][0] = 1;
    mult[1][1][1] = 1;
    return SuperAlgebra(2, 0, {Rational(1), Rational(1)}, std::move(mult));
}

SuperAlgebra SuperAlgebra::dual_numbers() {
    auto mult = zero_mult(2);
    mult[0][0][0] = 1;  // 1*1
    mult[0][1][1] = 1;  // 1*x
    mult[1][0][1] = 1;  // x*1
    return SuperAlgebra(2, 0, {Rational(1), Rational(0)}, std::move(mult));
}

SuperAlgebra SuperAlgebra::grassmann_line() {
    auto mult = zero_mult(2);
    mult[0][0][0] = 1;
    mult[0][1][1] = 1;
    mult[1][0][1] = 1;  // theta * theta = 0
    return SuperAlgebra(1, 1, {Rational(1), Rational(0)}, std::move(mult));
}

namespace {

// supertrace of left multiplication by the element a
Rational supertrace_of_mult(const SuperAlgebra& alg, const std::vector<Rational>& a) {
    int d = alg.dim();
    Rational out(0);
    for (int j = 0; j < d; ++j) {
        // (L_a e_j)_j
        Rational diag(0);
        for (int i = 0; i < d; ++i)
            if (a[i] != 0 && alg.structure(i, j, j) != 0) diag += a[i] * alg.structure(i, j, j);
        out += alg.is_odd(j) ? -diag : diag;
    }
    return out;
}

}  // namespace

std::vector<std::vector<Rational>> supertrace_form(const SuperAlgebra& a) {
    int d = a.dim();
    std::vector<std::vector<Rational>> b(d, std::vector<Rational>(d, Rational(0)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::vector<Rational> prod = a.multiply(basis_vector(d, i), basis_vector(d, j));
            b[i][j] = supertrace_of_mult(a, prod);
        }
    return b;
}

Rational matrix_det(std::vector<std::vector<Rational>> m) {
    size_t dim = m.size();
    Rational det(1);
    for (size_t k = 0; k < dim; ++k) {
        size_t pivot = k;
        while (pivot < dim && m[pivot][k] == 0) ++pivot;
        if (pivot == dim) return Rational(0);
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (size_t i = k + 1; i < dim; ++i) {
            if (m[i][k] == 0) continue;
            Rational f = m[i][k] / m[k][k];
            for (size_t j = k; j < dim; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

bool is_etale(const SuperAlgebra& a) { return matrix_det(supertrace_form(a)) != 0; }

bool etale_implies_even_check(const std::vector<SuperAlgebra>& sample) {
    for (const SuperAlgebra& a : sample)
        if (is_etale(a) && a.odd_dim() != 0) return false;
    return true;
}

bool odd_squares_traceless(const SuperAlgebra& a) {
    int d = a.dim();
    for (int i = a.even_dim(); i < d; ++i) {
        std::vector<Rational> sq = a.multiply(basis_vector(d, i), basis_vector(d, i));
        if (supertrace_of_mult(a, sq) != 0) return false;
    }
    return true;
}

bool schur_vanishes_super(const Partition& lambda, SuperDim d) {
    check_partition(lambda);
    if (static_cast<int>(lambda.size()) < d.even + 1) return false;
    return lambda[d.even] >= d.odd + 1;
}

namespace {

struct SuperTableauCounter {
    const Partition& shape;
    int p, q;
    std::vector<std::vector<int>> grid;  // letter + 1; 0 = empty
    long long count = 0;

    bool is_odd_letter(int v) const { return v > p; }  // letters 1..p even, p+1..p+q odd

    void fill(int r, int c) {
        if (r == static_cast<int>(shape.size())) {
            ++count;
            return;
        }
        int nr = r, nc = c + 1;
        if (nc >= shape[r]) {
            nr = r + 1;
            nc = 0;
        }
        for (int v = 1; v <= p + q; ++v) {
            if (c > 0) {
                int left = grid[r][c - 1];
                if (v < left) continue;
                if (v == left && is_odd_letter(v)) continue;  // odd strict along rows
            }
            if (r > 0 && c < shape[r - 1]) {
                int up = grid[r - 1][c];
                if (v < up) continue;
                if (v == up && !is_odd_letter(v)) continue;  // even strict down columns
            }
            grid[r][c] = v;
            fill(nr, nc);
            grid[r][c] = 0;
        }
    }
};

}  // namespace

long long super_schur_dim(const Partition& lambda, SuperDim d, int size_bound) {
    check_partition(lambda);
    if (d.even < 0 || d.odd < 0) throw std::invalid_argument("super_schur_dim: negative dimension");
    if (partition_sum(lambda) > size_bound)
        throw std::invalid_argument("super_schur_dim: |lambda| exceeds the size bound");
    if (lambda.empty()) return 1;
    if (d.even + d.odd == 0) return 0;
    SuperTableauCounter counter{lambda, d.even, d.odd, {}, 0};
    counter.grid.resize(lambda.size());
    for (size_t r = 0; r < lambda.size(); ++r) counter.grid[r].assign(lambda[r], 0);
    counter.fill(0, 0);
    return counter.count;
}

namespace {

// monomial x^a theta_S in the free supercommutative algebra
struct Monomial {
    std::vector<int> even_exp;
    unsigned odd_set = 0;

    int degree() const {
        int d = 0;
        for (int e : even_exp) d += e;
        return d + __builtin_popcount(odd_set);
    }
    bool odd_parity() const { return __builtin_popcount(odd_set) % 2 == 1; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

bool divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.even_exp.size(); ++i)
        if (a.even_exp[i] > b.even_exp[i]) return false;
    return (a.odd_set & ~b.odd_set) == 0;
}

// Koszul sign of theta_S * theta_T: -1 per inversion between S and T.
int koszul_sign(unsigned s, unsigned t) {
    int inversions = 0;
    for (int i = 0; i < 8; ++i) {
        if (!(s & (1u << i))) continue;
        for (int j = 0; j < i; ++j)
            if (t & (1u << j)) ++inversions;
    }
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

SuperAlgebra random_supercommutative_algebra(std::mt19937& rng, int max_even, int max_odd) {
    while (true) {
        int n_even = std::uniform_int_distribution<int>(1, 2)(rng);
        int n_odd = std::uniform_int_distribution<int>(1, 2)(rng);
        std::vector<int> caps(n_even);
        for (int& c : caps) c = std::uniform_int_distribution<int>(2, 3)(rng);

        // all monomials below the caps
        std::vector<Monomial> all;
        std::vector<int> exp(n_even, 0);
        for (unsigned s = 0; s < (1u << n_odd); ++s) {
            std::fill(exp.begin(), exp.end(), 0);
            while (true) {
                all.push_back({exp, s});
                int i = 0;
                while (i < n_even && exp[i] + 1 >= caps[i]) exp[i++] = 0;
                if (i == n_even) break;
                ++exp[i];
            }
        }
        std::stable_sort(all.begin(), all.end(), [](const Monomial& a, const Monomial& b) {
            return a.degree() < b.degree();
        });

        // random monomial ideal: once a monomial is killed every multiple is
        std::vector<char> killed(all.size(), 0);
        std::bernoulli_distribution kill_roll(0.35);
        for (size_t i = 1; i < all.size(); ++i) {
            bool forced = false;
            for (size_t j = 1; j < i && !forced; ++j)
                if (killed[j] && divides(all[j], all[i])) forced = true;
            killed[i] = forced || kill_roll(rng);
        }
        // trim to the dimension caps, from the top degree down
        auto count_alive = [&](bool odd) {
            int c = 0;
            for (size_t i = 0; i < all.size(); ++i)
                if (!killed[i] && all[i].odd_parity() == odd) ++c;
            return c;
        };
        for (size_t ri = all.size(); ri-- > 1;) {
            bool over_even = count_alive(false) > max_even;
            bool over_odd = count_alive(true) > max_odd;
            if (!over_even && !over_odd) break;
            if (!killed[ri] && ((all[ri].odd_parity() && over_odd) ||
                                (!all[ri].odd_parity() && over_even))) {
                killed[ri] = 1;
                for (size_t j = 1; j < all.size(); ++j)
                    if (!killed[j] && divides(all[ri], all[j])) killed[j] = 1;
            }
        }
        // keep at least one odd monomial; a minimal-degree odd generator has
        // no killed proper divisor, so reviving it preserves the ideal
        if (count_alive(true) == 0) {
            for (size_t i = 1; i < all.size(); ++i)
                if (all[i].odd_parity() && all[i].degree() == 1) {
                    killed[i] = 0;
                    break;
                }
        }
        if (count_alive(true) == 0 || count_alive(true) > max_odd) continue;

        std::vector<Monomial> basis;
        for (size_t i = 0; i < all.size(); ++i)
            if (!killed[i] && !all[i].odd_parity()) basis.push_back(all[i]);
        int p = static_cast<int>(basis.size());
        for (size_t i = 0; i < all.size(); ++i)
            if (!killed[i] && all[i].odd_parity()) basis.push_back(all[i]);
        int q = static_cast<int>(basis.size()) - p;
        int d = p + q;

        // random diagonal rescale keeps all the axioms; the unit stays at 1
        std::vector<Rational> scale(d, Rational(1));
        for (int i = 1; i < d; ++i) {
            int num = std::uniform_int_distribution<int>(1, 4)(rng);
            int den = std::uniform_int_distribution<int>(1, 3)(rng);
            scale[i] = Rational(num, den);
            scale[i].canonicalize();
        }

        auto find_basis = [&](const Monomial& m) -> int {
            for (int k = 0; k < d; ++k)
                if (basis[k] == m) return k;
            return -1;
        };

        auto mult = zero_mult(d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                if (basis[i].odd_set & basis[j].odd_set) continue;  // repeated odd factor
                Monomial prod;
                prod.even_exp.resize(n_even);
                bool alive = true;
                for (int g = 0; g < n_even; ++g) {
                    prod.even_exp[g] = basis[i].even_exp[g] + basis[j].even_exp[g];
                    if (prod.even_exp[g] >= caps[g]) alive = false;
                }
                if (!alive) continue;
                prod.odd_set = basis[i].odd_set | basis[j].odd_set;
                int k = find_basis(prod);
                if (k < 0) continue;  // killed by the ideal
                int sign = koszul_sign(basis[i].odd_set, basis[j].odd_set);
                mult[i][j][k] = Rational(sign) * scale[i] * scale[j] / scale[k];
            }
        std::vector<Rational> unit(d, Rational(0));
        unit[0] = 1;  // the monomial 1 is first in the even block
        return SuperAlgebra(p, q, std::move(unit), std::move(mult));
    }
}

}  // namespace repst
