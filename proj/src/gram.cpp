#include "repst/gram.hpp"

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <thread>

namespace repst {

namespace {

int trace_exponent(const PartitionDiagram& a, const PartitionDiagram& b) {
    DiagramMorphism prod = compose(DiagramMorphism::basis_element(a), DiagramMorphism::basis_element(b));
    Poly t = trace(prod);
    // product of basis diagrams is a single monomial times a diagram
    if (t.is_zero()) throw std::logic_error("trace of diagram product vanished");
    for (int k = 0; k <= t.degree(); ++k)
        if (t.coeff(k) != 0 && k != t.degree())
            throw std::logic_error("trace of diagram product is not a monomial");
    return t.degree();
}

}  // namespace

std::vector<std::vector<int>> gram_exponents(int n) {
    std::vector<PartitionDiagram> basis = end_basis(n);
    size_t dim = basis.size();
    std::vector<std::vector<int>> c(dim, std::vector<int>(dim, 0));
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = i; j < dim; ++j) {
            int e = trace_exponent(basis[i], basis[j]);
            c[i][j] = e;
            c[j][i] = e;  // Tr(ab) = Tr(ba)
        }
    return c;
}

std::vector<std::vector<Poly>> gram_matrix(int n) {
    std::vector<std::vector<int>> c = gram_exponents(n);
    std::vector<std::vector<Poly>> g(c.size(), std::vector<Poly>(c.size()));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < c.size(); ++j) g[i][j] = Poly::monomial(Rational(1), c[i][j]);
    return g;
}

namespace {

// Fraction-free Bareiss over Q[T]; all divisions are exact.
Poly bareiss_det(std::vector<std::vector<Poly>> m) {
    size_t dim = m.size();
    if (dim == 0) return Poly(Rational(1));
    Poly prev(Rational(1));
    int sign = 1;
    for (size_t k = 0; k + 1 < dim; ++k) {
        size_t pivot = k;
        while (pivot < dim && m[pivot][k].is_zero()) ++pivot;
        if (pivot == dim) return Poly();  // singular column
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < dim; ++i)
            for (size_t j = k + 1; j < dim; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev);
        prev = m[k][k];
    }
    Poly det = m[dim - 1][dim - 1];
    return sign < 0 ? -det : det;
}

// --- modular evaluation / interpolation for n = 3 ---

using u64 = std::uint64_t;

u64 pow_mod(u64 base, u64 exp, u64 p) {
    u64 acc = 1;
    base %= p;
    while (exp) {
        if (exp & 1) acc = acc * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return acc;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
        u64 d = n - 1;
        int r = 0;
        while (d % 2 == 0) d /= 2, ++r;
        u64 x = pow_mod(q, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r && witness; ++i) {
            x = x * x % n;
            if (x == n - 1) witness = false;
        }
        if (witness) return false;
    }
    return true;
}

// determinant mod p of the matrix x^{c[i][j]}, p < 2^31
u64 det_mod_p(const std::vector<std::vector<int>>& c, u64 x, u64 p, int max_exp) {
    size_t dim = c.size();
    std::vector<u64> xpow(max_exp + 1);
    xpow[0] = 1 % p;
    for (int e = 1; e <= max_exp; ++e) xpow[e] = xpow[e - 1] * (x % p) % p;

    std::vector<std::vector<u64>> m(dim, std::vector<u64>(dim));
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) m[i][j] = xpow[c[i][j]];

    u64 det = 1;
    for (size_t k = 0; k < dim; ++k) {
        size_t pivot = k;
        while (pivot < dim && m[pivot][k] == 0) ++pivot;
        if (pivot == dim) return 0;
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            det = (p - det) % p;
        }
        det = det * m[k][k] % p;
        u64 inv = pow_mod(m[k][k], p - 2, p);
        for (size_t i = k + 1; i < dim; ++i) {
            if (m[i][k] == 0) continue;
            u64 f = m[i][k] * inv % p;
            u64 neg = p - f;
            const std::vector<u64>& row = m[k];
            std::vector<u64>& target = m[i];
            for (size_t j = k; j < dim; ++j) target[j] = (target[j] + neg * row[j]) % p;
        }
    }
    return det;
}

// Newton interpolation at points 1..npts, returned as monomial coefficients.
std::vector<u64> interpolate_mod_p(const std::vector<u64>& values, u64 p) {
    size_t npts = values.size();
    std::vector<u64> dd = values;  // divided differences, built in place
    for (size_t level = 1; level < npts; ++level) {
        u64 inv = pow_mod(level % p, p - 2, p);  // x_i - x_{i-level} = level
        for (size_t i = npts - 1; i >= level; --i) {
            dd[i] = (dd[i] + p - dd[i - 1]) % p * inv % p;
            if (i == level) break;
        }
    }
    // expand sum dd[k] * prod_{j<k} (X - x_j), x_j = j + 1
    std::vector<u64> coeffs(npts, 0);
    std::vector<u64> basis(npts, 0);
    basis[0] = 1;  // running product polynomial
    size_t basis_deg = 0;
    for (size_t k = 0; k < npts; ++k) {
        for (size_t j = 0; j <= basis_deg; ++j) coeffs[j] = (coeffs[j] + dd[k] * basis[j]) % p;
        if (k + 1 < npts) {
            u64 root = (k + 1) % p;
            // basis *= (X - root)
            for (size_t j = basis_deg + 1; j > 0; --j)
                basis[j] = (basis[j - 1] + (p - root) * basis[j]) % p;
            basis[0] = basis[0] * (p - root) % p;
            ++basis_deg;
        }
    }
    return coeffs;
}

// maximum-weight assignment (Hungarian with potentials) -> degree bound
long long max_assignment(const std::vector<std::vector<int>>& c) {
    int n = static_cast<int>(c.size());
    const long long kInf = 1LL << 60;
    std::vector<long long> u(n + 1, 0), v(n + 1, 0);
    std::vector<int> way(n + 1, 0), matched(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        matched[0] = i;
        int j0 = 0;
        std::vector<long long> minv(n + 1, kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            int i0 = matched[j0], j1 = -1;
            long long delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                long long cost = -c[i0 - 1][j - 1] - u[i0] - v[j];
                if (cost < minv[j]) {
                    minv[j] = cost;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[matched[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (matched[j0] != 0);
        do {
            int j1 = way[j0];
            matched[j0] = matched[j1];
            j0 = j1;
        } while (j0);
    }
    long long total = 0;
    for (int j = 1; j <= n; ++j) total += c[matched[j] - 1][j - 1];
    return total;
}

int read_thread_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("THREADS")) {
        int k = std::atoi(env);
        if (k > 0) return k;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

Poly gram_det_interpolated(const std::vector<std::vector<int>>& c, const GramOptions& options) {
    using clock = std::chrono::steady_clock;
    auto start = clock::now();
    auto elapsed_minutes = [&] {
        return std::chrono::duration<double>(clock::now() - start).count() / 60.0;
    };

    int max_exp = 0;
    for (const auto& row : c)
        for (int e : row) max_exp = std::max(max_exp, e);
    long long degree_bound = max_assignment(c);
    size_t npts = static_cast<size_t>(degree_bound) + 1;

    int threads = read_thread_count(options.threads);

    // CRT state over an increasing modulus; stop after a full guard round
    // leaves every coefficient unchanged.
    std::vector<BigInt> coeffs(npts, BigInt(0));
    BigInt modulus = 1;
    bool stable = false;
    u64 p = (1ULL << 31) - 1;
    int primes_used = 0;
    while (!stable) {
        while (!is_prime_u64(p)) --p;
        std::vector<u64> values(npts);
        auto worker = [&](size_t begin, size_t end) {
            for (size_t j = begin; j < end; ++j) values[j] = det_mod_p(c, j + 1, p, max_exp);
        };
        if (threads <= 1) {
            worker(0, npts);
        } else {
            std::vector<std::thread> pool;
            size_t chunk = (npts + threads - 1) / threads;
            for (int t = 0; t < threads; ++t) {
                size_t begin = t * chunk, end = std::min(npts, begin + chunk);
                if (begin < end) pool.emplace_back(worker, begin, end);
            }
            for (auto& th : pool) th.join();
        }
        std::vector<u64> modp = interpolate_mod_p(values, p);

        bool changed = false;
        BigInt bp(static_cast<unsigned long>(p));
        BigInt new_modulus = modulus * bp;
        for (size_t k = 0; k < npts; ++k) {
            // lift coeffs[k] (mod modulus) and modp[k] (mod p) to mod modulus*p
            BigInt r = coeffs[k] % modulus;
            if (r < 0) r += modulus;
            BigInt rp(static_cast<unsigned long>(modp[k]));
            BigInt minv;
            if (mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), bp.get_mpz_t()) == 0)
                throw std::logic_error("CRT: moduli not coprime");
            BigInt diff = ((rp - r % bp) % bp + bp) % bp;
            BigInt lifted = r + modulus * (diff * minv % bp);
            // symmetric representative
            if (lifted * 2 > new_modulus) lifted -= new_modulus;
            if (lifted != coeffs[k]) {
                coeffs[k] = lifted;
                changed = true;
            }
        }
        modulus = new_modulus;
        ++primes_used;
        if (primes_used >= 2 && !changed) stable = true;
        if (primes_used > 400) throw std::runtime_error("gram_det: CRT failed to stabilize");
        --p;

        if (!stable && elapsed_minutes() > options.budget_minutes)
            throw std::runtime_error("gram_det: budget of " + std::to_string(options.budget_minutes) +
                                     " minutes exceeded");
    }

    std::vector<Rational> rat;
    rat.reserve(npts);
    for (const BigInt& z : coeffs) rat.emplace_back(z);
    return Poly(std::move(rat));
}

}  // namespace

Poly gram_det(int n, const GramOptions& options) {
    if (n < 0) throw std::invalid_argument("gram_det: n < 0");
    if (n > 3) throw std::runtime_error("gram_det: n > 3 exceeds the configured budget");
    if (n <= 2) return bareiss_det(gram_matrix(n));
    return gram_det_interpolated(gram_exponents(n), options);
}

std::vector<std::pair<long long, int>> integer_roots_in_window(const Poly& p, long long window) {
    if (p.is_zero()) throw std::invalid_argument("integer_roots_in_window: zero polynomial");
    std::vector<std::pair<long long, int>> out;
    Poly rest = p;
    for (long long r = -window; r <= p.degree() + window; ++r) {
        Rational rr(static_cast<long>(r));
        int mult = 0;
        while (rest.degree() > 0 && rest.eval(rr) == 0) {
            rest = rest.exact_div(poly_from_root(rr));
            ++mult;
        }
        if (mult > 0) out.emplace_back(r, mult);
    }
    return out;
}

int gram_rank_at(int n, const Rational& t) {
    std::vector<std::vector<int>> c = gram_exponents(n);
    size_t dim = c.size();
    std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(dim));
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) {
            Rational v(1);
            for (int e = 0; e < c[i][j]; ++e) v *= t;
            m[i][j] = v;
        }
    int rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < dim && row < dim; ++col) {
        size_t pivot = row;
        while (pivot < dim && m[pivot][col] == 0) ++pivot;
        if (pivot == dim) continue;
        std::swap(m[pivot], m[row]);
        for (size_t i = row + 1; i < dim; ++i) {
            if (m[i][col] == 0) continue;
            Rational f = m[i][col] / m[row][col];
            for (size_t j = col; j < dim; ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace repst
