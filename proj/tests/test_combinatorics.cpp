#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "repst/combinatorics.hpp"

using namespace repst;

namespace {

// independent oracle: count weakly decreasing sequences summing to n
long long count_partitions_brute(int n, int max_part) {
    if (n == 0) return 1;
    long long total = 0;
    for (int k = std::min(n, max_part); k >= 1; --k) total += count_partitions_brute(n - k, k);
    return total;
}

// independent oracle: standard Young tableaux by direct backtracking
long long count_syt(const Partition& shape) {
    int n = partition_sum(shape);
    std::vector<int> filled(shape.size(), 0);  // cells filled per row
    long long count = 0;
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            ++count;
            return;
        }
        for (size_t r = 0; r < shape.size(); ++r) {
            if (filled[r] >= shape[r]) continue;
            if (r > 0 && filled[r - 1] <= filled[r]) continue;
            ++filled[r];
            self(self, next + 1);
            --filled[r];
        }
    };
    rec(rec, 1);
    return count;
}

// independent oracle: Bell numbers by the triangle recurrence
std::vector<long long> bell_triangle(int up_to) {
    std::vector<long long> bells = {1};
    std::vector<long long> row = {1};
    for (int n = 1; n <= up_to; ++n) {
        std::vector<long long> next = {row.back()};
        for (long long x : row) next.push_back(next.back() + x);
        bells.push_back(next.front());
        row = next;
    }
    return bells;
}

}  // namespace

TEST_CASE("partition enumeration") {
    CHECK(enumerate_partitions(0) == std::vector<Partition>{{}});
    CHECK(enumerate_partitions(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
    CHECK(enumerate_partitions(6).size() == count_partitions_brute(6, 6));
    CHECK(enumerate_partitions(6).size() == 11);

    for (int n = 0; n <= 9; ++n) {
        std::vector<Partition> all = enumerate_partitions(n);
        CHECK(all.size() == count_partitions_brute(n, n));
        std::set<Partition> distinct(all.begin(), all.end());
        CHECK(distinct.size() == all.size());
        for (const Partition& p : all) {
            CHECK(is_valid_partition(p));
            CHECK(partition_sum(p) == n);
        }
        // reverse lexicographic: each is lexicographically larger than the next
        for (size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i] > all[i + 1]);
    }
}

TEST_CASE("hook dimension") {
    CHECK(hook_dimension({2, 1}) == 2);
    CHECK(hook_dimension({3, 2, 1}) == 16);
    CHECK(hook_dimension({1, 1, 1}) == 1);
    CHECK(hook_dimension({}) == 1);

    for (const Partition& p : enumerate_partitions_up_to(6))
        CHECK(hook_dimension(p) == count_syt(p));

    // Burnside: sum of squares of dimensions is n!
    for (int n = 0; n <= 8; ++n) {
        BigInt total = 0;
        for (const Partition& p : enumerate_partitions(n)) {
            BigInt d = to_big(hook_dimension(p));
            total += d * d;
        }
        CHECK(total == factorial(n));
    }
}

TEST_CASE("set partitions") {
    CHECK(enumerate_set_partitions(0).size() == 1);
    CHECK(enumerate_set_partitions(2).size() == 2);
    CHECK(enumerate_set_partitions(4).size() == 15);

    std::vector<long long> bells = bell_triangle(8);
    for (int n = 0; n <= 8; ++n) {
        CHECK(bell_number(n) == to_big(bells[n]));
        if (n <= 7) {
            std::vector<SetPartition> all = enumerate_set_partitions(n);
            CHECK(static_cast<long long>(all.size()) == bells[n]);
            std::set<SetPartition> distinct(all.begin(), all.end());
            CHECK(distinct.size() == all.size());
            for (const SetPartition& sp : all) check_set_partition(sp, n);
        }
    }
}

TEST_CASE("pad partition") {
    CHECK(pad_partition({2, 1}, 7) == Partition{4, 2, 1});
    CHECK(pad_partition({1}, 5) == Partition{4, 1});
    CHECK(pad_partition({}, 3) == Partition{3});
    CHECK(pad_partition({}, 0) == Partition{});
    CHECK_THROWS_AS(pad_partition({2, 1}, 4), std::invalid_argument);
    CHECK_THROWS_AS(pad_partition({3}, 5), std::invalid_argument);

    for (const Partition& p : enumerate_partitions_up_to(5)) {
        int bound = partition_sum(p) + (p.empty() ? 0 : p[0]);
        for (int m = bound; m <= bound + 4; ++m) {
            Partition padded = pad_partition(p, m);
            CHECK(is_valid_partition(padded));
            CHECK(partition_sum(padded) == m);
            if (m > partition_sum(p)) CHECK(padded[0] == m - partition_sum(p));
        }
    }
}

TEST_CASE("moebius function of the partition lattice") {
    SetPartition discrete3 = {{0}, {1}, {2}};
    SetPartition one3 = {{0, 1, 2}};
    SetPartition discrete2 = {{0}, {1}};
    SetPartition one2 = {{0, 1}};

    CHECK(moebius_partition_lattice(discrete3, discrete3) == 1);
    CHECK(moebius_partition_lattice(one3, one3) == 1);
    CHECK(moebius_partition_lattice(discrete3, one3) == 2);
    CHECK(moebius_partition_lattice(discrete2, one2) == -1);
    CHECK_THROWS_AS(moebius_partition_lattice(one2, discrete2), std::invalid_argument);

    // defining property: sum over coarsenings vanishes below the top element
    for (int n = 2; n <= 5; ++n) {
        std::vector<SetPartition> all = enumerate_set_partitions(n);
        SetPartition top = {{}};
        top[0].resize(n);
        for (int i = 0; i < n; ++i) top[0][i] = i;
        for (const SetPartition& pi : all) {
            if (pi == top) continue;
            BigInt total = 0;
            for (const SetPartition& rho : all)
                if (refines(pi, rho)) total += moebius_partition_lattice(pi, rho);
            CHECK(total == 0);
        }
    }
}

TEST_CASE("conjugate and containment") {
    CHECK(conjugate_partition({3, 2, 1}) == Partition{3, 2, 1});
    CHECK(conjugate_partition({4, 1}) == Partition{2, 1, 1, 1});
    CHECK(conjugate_partition({}) == Partition{});
    CHECK(partition_contains({3, 2, 1}, {2, 1}));
    CHECK_FALSE(partition_contains({2, 2}, {3}));
    CHECK(partition_contains({2, 2}, {}));
}
