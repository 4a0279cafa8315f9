#pragma once

#include <string>
#include <vector>

#include "repst/numeric.hpp"

namespace repst {

// Weakly decreasing sequence of positive integers; {} is the empty partition.
using Partition = std::vector<int>;
// A cycle type is a partition of n recording the cycle lengths of a class of
// the symmetric group on n letters.
using CycleType = Partition;

bool is_valid_partition(const Partition& p);
void check_partition(const Partition& p);

inline int partition_sum(const Partition& p) {
    int s = 0;
    for (int part : p) s += part;
    return s;
}

// Canonical order used everywhere partitions are enumerated or used as map
// keys: ascending size, reverse-lexicographic within a size.  For n = 3 this
// gives (3), (2,1), (1,1,1).
struct PartitionLess {
    bool operator()(const Partition& a, const Partition& b) const;
};

// All partitions of n in reverse-lexicographic order.
std::vector<Partition> enumerate_partitions(int n);

// All partitions of every size 0..n, in canonical order.
std::vector<Partition> enumerate_partitions_up_to(int n);

Partition conjugate_partition(const Partition& p);

// inner_ij <= outer_ij cellwise.
bool partition_contains(const Partition& outer, const Partition& inner);

// Number of standard Young tableaux of shape p, i.e. dim V_p, by the hook
// length formula.
long long hook_dimension(const Partition& p);

// (m - |p|, p_1, p_2, ...).  Requires m >= |p| + p_1 so the result is a
// genuine partition of m.
Partition pad_partition(const Partition& p, int m);

// Set partition of {0..n-1}: disjoint nonempty blocks covering the ground
// set.  Canonical form: each block sorted ascending, blocks ordered by least
// element.
using SetPartition = std::vector<std::vector<int>>;

SetPartition canonicalize_set_partition(SetPartition blocks);
void check_set_partition(const SetPartition& sp, int ground_size);

// All set partitions of {0..n-1}, enumerated via restricted growth strings
// in lexicographic order; count is Bell(n).
std::vector<SetPartition> enumerate_set_partitions(int n);

// True if every block of fine is contained in a block of coarse.
bool refines(const SetPartition& fine, const SetPartition& coarse);

// Moebius function of the partition lattice: for pi refining rho, the
// product over blocks B of rho of (-1)^(k_B - 1) (k_B - 1)! where k_B is the
// number of pi-blocks inside B.  Throws if pi does not refine rho.
BigInt moebius_partition_lattice(const SetPartition& pi, const SetPartition& rho);

BigInt bell_number(int n);

}  // namespace repst
