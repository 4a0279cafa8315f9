#include "repst/characters.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace repst {

namespace {

std::vector<int> beta_set(const Partition& lambda) {
    int len = static_cast<int>(lambda.size());
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
    return beta;  // strictly decreasing
}

Partition partition_from_beta(std::vector<int> beta) {
    std::sort(beta.rbegin(), beta.rend());
    int len = static_cast<int>(beta.size());
    Partition out;
    for (int i = 0; i < len; ++i) {
        int part = beta[i] - (len - 1 - i);
        if (part > 0) out.push_back(part);
    }
    return out;
}

using MemoKey = std::pair<Partition, CycleType>;
std::map<MemoKey, long long> g_mn_memo;
std::mutex g_mn_mutex;

long long mn_recurse(const Partition& lambda, const CycleType& rho) {
    if (rho.empty()) return lambda.empty() ? 1 : 0;
    MemoKey key(lambda, rho);
    {
        std::lock_guard<std::mutex> lock(g_mn_mutex);
        auto it = g_mn_memo.find(key);
        if (it != g_mn_memo.end()) return it->second;
    }
    int r = rho[0];
    CycleType rest(rho.begin() + 1, rho.end());
    std::vector<int> beta = beta_set(lambda);
    long long total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - r;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        // strip height parity = number of beta entries passed over
        int crossings = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++crossings;
        std::vector<int> beta2 = beta;
        beta2[i] = target;
        long long sub = mn_recurse(partition_from_beta(std::move(beta2)), rest);
        total += (crossings % 2 == 0) ? sub : -sub;
    }
    std::lock_guard<std::mutex> lock(g_mn_mutex);
    g_mn_memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

long long character_value(const Partition& lambda, const CycleType& rho) {
    check_partition(lambda);
    check_partition(rho);
    if (partition_sum(lambda) != partition_sum(rho))
        throw std::invalid_argument("character_value: |lambda| != |rho|");
    return mn_recurse(lambda, rho);
}

BigInt class_size(const CycleType& rho) {
    check_partition(rho);
    int n = partition_sum(rho);
    BigInt denom = 1;
    int run = 0;
    for (size_t i = 0; i < rho.size(); ++i) {
        denom *= rho[i];
        ++run;
        if (i + 1 == rho.size() || rho[i + 1] != rho[i]) {
            denom *= factorial(static_cast<unsigned>(run));
            run = 0;
        }
    }
    return factorial(static_cast<unsigned>(n)) / denom;
}

int fixed_points(const CycleType& rho) {
    int k = 0;
    for (int part : rho)
        if (part == 1) ++k;
    return k;
}

ClassFunction irreducible_character(const Partition& lambda) {
    ClassFunction chi;
    chi.n = partition_sum(lambda);
    for (const Partition& rho : enumerate_partitions(chi.n))
        chi.values[rho] = to_rat(character_value(lambda, rho));
    return chi;
}

Rational inner_product(const ClassFunction& phi, const ClassFunction& psi) {
    if (phi.n != psi.n) throw std::invalid_argument("inner_product: mismatched group sizes");
    Rational acc(0);
    for (const Partition& rho : enumerate_partitions(phi.n)) {
        auto pit = phi.values.find(rho);
        auto qit = psi.values.find(rho);
        if (pit == phi.values.end() || qit == psi.values.end())
            throw std::invalid_argument("inner_product: class function missing a cycle type");
        acc += Rational(class_size(rho)) * pit->second * qit->second;
    }
    return acc / Rational(factorial(static_cast<unsigned>(phi.n)));
}

namespace {

CycleType merge_cycle_types(const CycleType& a, const CycleType& b) {
    CycleType out = a;
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.rbegin(), out.rend());
    return out;
}

}  // namespace

long long induction_multiplicity(const Partition& lambda, const Partition& mu,
                                 const Partition& nu) {
    check_partition(lambda);
    check_partition(mu);
    check_partition(nu);
    int a = partition_sum(lambda), b = partition_sum(mu), n = partition_sum(nu);
    if (a + b != n) throw std::invalid_argument("induction_multiplicity: |nu| != |lambda| + |mu|");
    // Frobenius reciprocity: <Res chi_nu, chi_lambda x chi_mu> over S_a x S_b.
    BigInt acc = 0;
    for (const CycleType& rho : enumerate_partitions(a)) {
        BigInt left = class_size(rho) * to_big(character_value(lambda, rho));
        for (const CycleType& pi : enumerate_partitions(b)) {
            BigInt term = left * class_size(pi) * to_big(character_value(mu, pi)) *
                          to_big(character_value(nu, merge_cycle_types(rho, pi)));
            acc += term;
        }
    }
    BigInt order = factorial(static_cast<unsigned>(a)) * factorial(static_cast<unsigned>(b));
    if (acc % order != 0) throw std::logic_error("induction_multiplicity: non-integral inner product");
    return to_long_checked(BigInt(acc / order));
}

namespace {

// Cells of nu/lambda in reverse reading order (rows top to bottom, each row
// right to left), so the lattice-word condition can be checked prefix by
// prefix while backtracking.
struct SkewCell {
    int row, col;
};

struct LrCounter {
    std::vector<SkewCell> cells;
    std::vector<std::vector<int>> grid;  // value per cell, 0 = empty
    std::vector<int> remaining;          // content left to place, per letter
    std::vector<int> placed;             // letters placed so far, per letter
    long long count = 0;

    void run(size_t idx) {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[idx];
        int nletters = static_cast<int>(remaining.size());
        for (int v = 1; v <= nletters; ++v) {
            if (remaining[v - 1] == 0) continue;
            // lattice: after placing v, #v must still be >= #(v+1)
            if (v > 1 && placed[v - 2] < placed[v - 1] + 1) continue;
            // weakly increasing along the row (right neighbour already set)
            if (static_cast<size_t>(c + 1) < grid[r].size() && grid[r][c + 1] != 0 &&
                v > grid[r][c + 1])
                continue;
            // strictly increasing down the column
            if (r > 0 && static_cast<size_t>(c) < grid[r - 1].size() && grid[r - 1][c] != 0 &&
                v <= grid[r - 1][c])
                continue;
            grid[r][c] = v;
            --remaining[v - 1];
            ++placed[v - 1];
            run(idx + 1);
            --placed[v - 1];
            ++remaining[v - 1];
            grid[r][c] = 0;
        }
    }
};

}  // namespace

long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    check_partition(lambda);
    check_partition(mu);
    check_partition(nu);
    if (partition_sum(lambda) + partition_sum(mu) != partition_sum(nu)) return 0;
    if (!partition_contains(nu, lambda)) return 0;
    if (mu.empty()) return 1;  // nu == lambda at this point

    LrCounter counter;
    counter.grid.resize(nu.size());
    for (size_t r = 0; r < nu.size(); ++r) {
        counter.grid[r].assign(nu[r], 0);
        int from = (r < lambda.size()) ? lambda[r] : 0;
        for (int c = nu[r] - 1; c >= from; --c) counter.cells.push_back({static_cast<int>(r), c});
    }
    counter.remaining.assign(mu.begin(), mu.end());
    counter.placed.assign(mu.size(), 0);
    counter.run(0);
    return counter.count;
}

namespace {

long long padded_kron_inner(const Partition& lambda, const Partition& mu, const Partition& nu,
                            int m) {
    Partition pl = pad_partition(lambda, m);
    Partition pm = pad_partition(mu, m);
    Partition pn = pad_partition(nu, m);
    BigInt acc = 0;
    for (const CycleType& rho : enumerate_partitions(m)) {
        BigInt term = class_size(rho) * to_big(character_value(pl, rho));
        term *= to_big(character_value(pm, rho));
        term *= to_big(character_value(pn, rho));
        acc += term;
    }
    BigInt order = factorial(static_cast<unsigned>(m));
    if (acc % order != 0) throw std::logic_error("stable multiplicity: non-integral inner product");
    return to_long_checked(BigInt(acc / order));
}

}  // namespace

long long stable_tensor_multiplicity(const Partition& lambda, const Partition& mu,
                                     const Partition& nu) {
    check_partition(lambda);
    check_partition(mu);
    check_partition(nu);
    int s = partition_sum(lambda) + partition_sum(mu);
    if (partition_sum(nu) > s) return 0;
    int m = 2 * s + 2;
    long long at_m = padded_kron_inner(lambda, mu, nu, m);
    long long at_m1 = padded_kron_inner(lambda, mu, nu, m + 1);
    if (at_m != at_m1)
        throw std::runtime_error("stable_tensor_multiplicity: value not stable at m = " +
                                 std::to_string(m));
    return at_m;
}

std::map<Partition, long long, PartitionLess> generator_power_multiplicities(int n) {
    if (n < 0) throw std::invalid_argument("generator_power_multiplicities: n < 0");
    int m = 2 * n + 2;
    BigInt order = factorial(static_cast<unsigned>(m));
    std::map<Partition, long long, PartitionLess> out;
    for (const Partition& lambda : enumerate_partitions_up_to(n)) {
        Partition padded = pad_partition(lambda, m);
        BigInt acc = 0;
        for (const CycleType& rho : enumerate_partitions(m)) {
            BigInt fix_pow;
            mpz_ui_pow_ui(fix_pow.get_mpz_t(), static_cast<unsigned>(fixed_points(rho)),
                          static_cast<unsigned>(n));
            acc += class_size(rho) * fix_pow * to_big(character_value(padded, rho));
        }
        if (acc % order != 0)
            throw std::logic_error("generator_power_multiplicities: non-integral inner product");
        long long mult = to_long_checked(BigInt(acc / order));
        if (mult > 0) out[lambda] = mult;
    }
    return out;
}

}  // namespace repst
