#include "repst/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace repst {

bool is_valid_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

void check_partition(const Partition& p) {
    if (!is_valid_partition(p)) throw std::invalid_argument("not a valid partition");
}

bool PartitionLess::operator()(const Partition& a, const Partition& b) const {
    int sa = partition_sum(a), sb = partition_sum(b);
    if (sa != sb) return sa < sb;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

void emit_partitions(int n, int max_part, Partition& prefix, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(prefix);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        prefix.push_back(k);
        emit_partitions(n - k, k, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n < 0");
    std::vector<Partition> out;
    Partition prefix;
    emit_partitions(n, n, prefix, out);
    return out;
}

std::vector<Partition> enumerate_partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        std::vector<Partition> part = enumerate_partitions(k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

Partition conjugate_partition(const Partition& p) {
    check_partition(p);
    Partition q;
    if (p.empty()) return q;
    q.resize(p[0], 0);
    for (int part : p)
        for (int j = 0; j < part; ++j) ++q[j];
    return q;
}

bool partition_contains(const Partition& outer, const Partition& inner) {
    if (inner.size() > outer.size()) return false;
    for (size_t i = 0; i < inner.size(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

long long hook_dimension(const Partition& p) {
    check_partition(p);
    int n = partition_sum(p);
    Partition conj = conjugate_partition(p);
    BigInt denom = 1;
    for (size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j) {
            int hook = (p[i] - j - 1) + (conj[j] - static_cast<int>(i) - 1) + 1;
            denom *= hook;
        }
    BigInt dim = factorial(static_cast<unsigned>(n)) / denom;
    return to_long_checked(dim);
}

Partition pad_partition(const Partition& p, int m) {
    check_partition(p);
    int size = partition_sum(p);
    int first = p.empty() ? 0 : p[0];
    if (m < size + first)
        throw std::invalid_argument("pad_partition: m below |p| + p_1");
    Partition out;
    if (m > size) out.push_back(m - size);
    out.insert(out.end(), p.begin(), p.end());
    return out;
}

SetPartition canonicalize_set_partition(SetPartition blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
    return blocks;
}

void check_set_partition(const SetPartition& sp, int ground_size) {
    std::vector<char> seen(ground_size, 0);
    int covered = 0;
    for (const auto& block : sp) {
        if (block.empty()) throw std::invalid_argument("set partition: empty block");
        for (int v : block) {
            if (v < 0 || v >= ground_size) throw std::invalid_argument("set partition: label out of range");
            if (seen[v]) throw std::invalid_argument("set partition: repeated label");
            seen[v] = 1;
            ++covered;
        }
    }
    if (covered != ground_size) throw std::invalid_argument("set partition: ground set not covered");
}

std::vector<SetPartition> enumerate_set_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_set_partitions: n < 0");
    std::vector<SetPartition> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
    std::vector<int> a(n, 0);
    while (true) {
        int nblocks = *std::max_element(a.begin(), a.end()) + 1;
        SetPartition sp(nblocks);
        for (int i = 0; i < n; ++i) sp[a[i]].push_back(i);
        out.push_back(sp);

        int i = n - 1;
        for (; i > 0; --i) {
            int mx = *std::max_element(a.begin(), a.begin() + i);
            if (a[i] <= mx) break;
        }
        if (i == 0) break;
        ++a[i];
        std::fill(a.begin() + i + 1, a.end(), 0);
    }
    return out;
}

namespace {

// block index of each ground element, or -1
std::vector<int> block_of(const SetPartition& sp, int ground_size) {
    std::vector<int> owner(ground_size, -1);
    for (size_t b = 0; b < sp.size(); ++b)
        for (int v : sp[b]) owner[v] = static_cast<int>(b);
    return owner;
}

int ground_size_of(const SetPartition& sp) {
    int mx = -1;
    for (const auto& b : sp)
        for (int v : b) mx = std::max(mx, v);
    return mx + 1;
}

}  // namespace

bool refines(const SetPartition& fine, const SetPartition& coarse) {
    int n = std::max(ground_size_of(fine), ground_size_of(coarse));
    std::vector<int> owner = block_of(coarse, n);
    for (const auto& block : fine) {
        int target = owner[block[0]];
        if (target < 0) return false;
        for (int v : block)
            if (owner[v] != target) return false;
    }
    return true;
}

BigInt moebius_partition_lattice(const SetPartition& pi, const SetPartition& rho) {
    if (!refines(pi, rho)) throw std::invalid_argument("moebius: pi does not refine rho");
    int n = ground_size_of(rho);
    std::vector<int> owner = block_of(rho, n);
    std::vector<int> fine_blocks_inside(rho.size(), 0);
    for (const auto& block : pi) ++fine_blocks_inside[owner[block[0]]];
    BigInt mu = 1;
    for (int k : fine_blocks_inside) {
        BigInt f = factorial(static_cast<unsigned>(k - 1));
        mu *= (k % 2 == 0) ? -f : f;
    }
    return mu;
}

BigInt bell_number(int n) {
    if (n < 0) throw std::invalid_argument("bell_number: n < 0");
    static std::vector<BigInt> cache = {BigInt(1)};
    static std::vector<BigInt> last_row = {BigInt(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= n) {
        std::vector<BigInt> row;
        row.reserve(last_row.size() + 1);
        row.push_back(last_row.back());
        for (const BigInt& x : last_row) row.push_back(row.back() + x);
        cache.push_back(row.front());
        last_row = std::move(row);
    }
    return cache[n];
}

}  // namespace repst
