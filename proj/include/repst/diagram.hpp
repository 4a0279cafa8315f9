#pragma once

#include <map>
#include <string>
#include <vector>

#include "repst/combinatorics.hpp"
#include "repst/polynomial.hpp"

namespace repst {

// Set partition of the m top and n bottom strand endpoints of a hom-space
// basis diagram.  Vertices are numbered 0..m-1 (top row) then m..m+n-1
// (bottom row); the JSON layer maps these to labels "t1..tm", "b1..bn".
struct PartitionDiagram {
    int top = 0;
    int bottom = 0;
    SetPartition blocks;  // canonical: blocks sorted by least element

    friend bool operator==(const PartitionDiagram&, const PartitionDiagram&) = default;
    friend bool operator<(const PartitionDiagram& a, const PartitionDiagram& b) {
        if (a.top != b.top) return a.top < b.top;
        if (a.bottom != b.bottom) return a.bottom < b.bottom;
        return a.blocks < b.blocks;
    }
};

PartitionDiagram make_diagram(int top, int bottom, SetPartition blocks);
PartitionDiagram identity_diagram(int n);
// blocks {t_i, b_sigma(i)}; sigma is 0-based with sigma[i] the image of i.
PartitionDiagram permutation_diagram(const std::vector<int>& sigma);

enum class Basis { kDiagram, kOrbit };

// Z[T]-linear combination of basis diagrams sharing (top, bottom), tagged by
// the basis the coefficients refer to.
class DiagramMorphism {
  public:
    DiagramMorphism(int top, int bottom, Basis basis) : top_(top), bottom_(bottom), basis_(basis) {}
    static DiagramMorphism basis_element(const PartitionDiagram& d, Basis basis = Basis::kDiagram);
    static DiagramMorphism identity(int n, Basis basis = Basis::kDiagram);

    int top() const { return top_; }
    int bottom() const { return bottom_; }
    Basis basis() const { return basis_; }
    const std::map<PartitionDiagram, Poly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // adds c * d; drops the term if the accumulated coefficient vanishes
    void add_term(const PartitionDiagram& d, const Poly& c);
    DiagramMorphism scaled(const Poly& c) const;
    friend DiagramMorphism operator+(const DiagramMorphism& a, const DiagramMorphism& b);
    friend DiagramMorphism operator-(const DiagramMorphism& a, const DiagramMorphism& b);
    friend bool operator==(const DiagramMorphism&, const DiagramMorphism&) = default;

  private:
    int top_;
    int bottom_;
    Basis basis_;
    std::map<PartitionDiagram, Poly> terms_;
};

// Diagram-basis composition g . f (f applied first; f's bottom row is glued
// to g's top row).  Blocks merge across the middle row; every connected
// component lying entirely in the middle row contributes a factor T.
DiagramMorphism compose(const DiagramMorphism& g, const DiagramMorphism& f);

// Horizontal juxtaposition with strand relabelling.
DiagramMorphism tensor(const DiagramMorphism& a, const DiagramMorphism& b);

// Categorical trace of an endomorphism: close each strand i with an arc
// t_i - b_i and count connected components; a basis diagram contributes
// T^{components}.  Orbit-basis input is converted first.
Poly trace(const DiagramMorphism& f);

// Moebius basis change on the lattice of set partitions of the strand
// endpoints: x_pi = sum_{rho coarsening pi} mu(pi, rho) d_rho, inverse
// d_pi = sum_{rho coarsening pi} x_rho.
DiagramMorphism to_orbit_basis(const DiagramMorphism& f);
DiagramMorphism from_orbit_basis(const DiagramMorphism& f);

// Composition of orbit-basis morphisms via conjugation by the basis change.
DiagramMorphism compose_orbit(const DiagramMorphism& g, const DiagramMorphism& f);

// All Bell(2n) basis diagrams of the endomorphism space of n strands, in
// restricted-growth-string order.
std::vector<PartitionDiagram> end_basis(int n);
long long end_dimension(int n);

std::vector<int> cycle_type_of(const std::vector<int>& sigma);
std::vector<std::vector<int>> all_permutations(int n);

}  // namespace repst
