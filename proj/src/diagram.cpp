#include "repst/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace repst {

namespace {

// Plain union-find; component counting is the inner loop of composition and
// trace, so keep it allocation-light.
class UnionFind {
  public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(int a, int b) { parent_[find(a)] = find(b); }

  private:
    std::vector<int> parent_;
};

void unite_blocks(UnionFind& uf, const SetPartition& blocks, int offset_top, int offset_bottom,
                  int top) {
    for (const auto& block : blocks)
        for (size_t i = 1; i < block.size(); ++i) {
            auto shift = [&](int v) { return v < top ? v + offset_top : v - top + offset_bottom; };
            uf.unite(shift(block[0]), shift(block[i]));
        }
}

}  // namespace

PartitionDiagram make_diagram(int top, int bottom, SetPartition blocks) {
    if (top < 0 || bottom < 0) throw std::invalid_argument("diagram: negative strand count");
    blocks = canonicalize_set_partition(std::move(blocks));
    check_set_partition(blocks, top + bottom);
    return PartitionDiagram{top, bottom, std::move(blocks)};
}

PartitionDiagram identity_diagram(int n) {
    SetPartition blocks;
    for (int i = 0; i < n; ++i) blocks.push_back({i, n + i});
    return make_diagram(n, n, std::move(blocks));
}

PartitionDiagram permutation_diagram(const std::vector<int>& sigma) {
    int n = static_cast<int>(sigma.size());
    std::vector<char> seen(n, 0);
    for (int v : sigma) {
        if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("not a permutation");
        seen[v] = 1;
    }
    SetPartition blocks;
    for (int i = 0; i < n; ++i) blocks.push_back({i, n + sigma[i]});
    return make_diagram(n, n, std::move(blocks));
}

DiagramMorphism DiagramMorphism::basis_element(const PartitionDiagram& d, Basis basis) {
    DiagramMorphism m(d.top, d.bottom, basis);
    m.add_term(d, Poly(Rational(1)));
    return m;
}

DiagramMorphism DiagramMorphism::identity(int n, Basis basis) {
    return basis_element(identity_diagram(n), basis);
}

void DiagramMorphism::add_term(const PartitionDiagram& d, const Poly& c) {
    if (d.top != top_ || d.bottom != bottom_)
        throw std::invalid_argument("term shape does not match morphism shape");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(d, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiagramMorphism DiagramMorphism::scaled(const Poly& c) const {
    DiagramMorphism out(top_, bottom_, basis_);
    if (c.is_zero()) return out;
    for (const auto& [d, coeff] : terms_) out.add_term(d, coeff * c);
    return out;
}

DiagramMorphism operator+(const DiagramMorphism& a, const DiagramMorphism& b) {
    if (a.top_ != b.top_ || a.bottom_ != b.bottom_ || a.basis_ != b.basis_)
        throw std::invalid_argument("morphism sum: shape or basis mismatch");
    DiagramMorphism out = a;
    for (const auto& [d, c] : b.terms_) out.add_term(d, c);
    return out;
}

DiagramMorphism operator-(const DiagramMorphism& a, const DiagramMorphism& b) {
    return a + b.scaled(Poly(Rational(-1)));
}

namespace {

// Core composition of basis diagrams: returns the resulting diagram and the
// number of components contained entirely in the glued middle row.
std::pair<PartitionDiagram, int> compose_basis(const PartitionDiagram& g,
                                               const PartitionDiagram& f) {
    int a = f.top, b = f.bottom, c = g.bottom;
    // vertex layout: [0,a) outer top, [a,a+b) middle, [a+b,a+b+c) outer bottom
    UnionFind uf(a + b + c);
    unite_blocks(uf, f.blocks, 0, a, f.top);
    unite_blocks(uf, g.blocks, a, a + b, g.top);

    std::vector<int> root_to_block(a + b + c, -1);
    SetPartition blocks;
    int middle_only = 0;
    auto outer_index = [&](int v) { return v < a ? v : v - b; };
    for (int v = 0; v < a + b + c; ++v) {
        bool outer = v < a || v >= a + b;
        if (!outer) continue;
        int r = uf.find(v);
        if (root_to_block[r] < 0) {
            root_to_block[r] = static_cast<int>(blocks.size());
            blocks.emplace_back();
        }
        blocks[root_to_block[r]].push_back(outer_index(v));
    }
    for (int v = a; v < a + b; ++v) {
        int r = uf.find(v);
        if (root_to_block[r] == -1) {
            root_to_block[r] = -2;  // counted once per middle-only component
            ++middle_only;
        }
    }
    return {make_diagram(a, c, std::move(blocks)), middle_only};
}

Poly t_power(int k) { return Poly::monomial(Rational(1), k); }

}  // namespace

DiagramMorphism compose(const DiagramMorphism& g, const DiagramMorphism& f) {
    if (f.bottom() != g.top())
        throw std::invalid_argument("compose: f's bottom row does not match g's top row");
    if (f.basis() != Basis::kDiagram || g.basis() != Basis::kDiagram)
        throw std::invalid_argument("compose: diagram-basis morphisms required");
    DiagramMorphism out(f.top(), g.bottom(), Basis::kDiagram);
    for (const auto& [df, cf] : f.terms())
        for (const auto& [dg, cg] : g.terms()) {
            auto [d, middle] = compose_basis(dg, df);
            out.add_term(d, cf * cg * t_power(middle));
        }
    return out;
}

DiagramMorphism tensor(const DiagramMorphism& a, const DiagramMorphism& b) {
    if (a.basis() != b.basis()) throw std::invalid_argument("tensor: basis mismatch");
    int top = a.top() + b.top(), bottom = a.bottom() + b.bottom();
    DiagramMorphism out(top, bottom, a.basis());
    for (const auto& [da, ca] : a.terms())
        for (const auto& [db, cb] : b.terms()) {
            SetPartition blocks = da.blocks;
            for (auto& block : blocks)
                for (int& v : block)
                    if (v >= da.top) v += b.top();  // bottom strands shift past the second top row
            for (const auto& block : db.blocks) {
                std::vector<int> shifted;
                for (int v : block)
                    shifted.push_back(v < db.top ? v + da.top : v + da.top + a.bottom());
                blocks.push_back(std::move(shifted));
            }
            out.add_term(make_diagram(top, bottom, std::move(blocks)), ca * cb);
        }
    return out;
}

namespace {

int closure_components(const PartitionDiagram& d) {
    int n = d.top;
    UnionFind uf(2 * n);
    for (const auto& block : d.blocks)
        for (size_t i = 1; i < block.size(); ++i) uf.unite(block[0], block[i]);
    for (int i = 0; i < n; ++i) uf.unite(i, n + i);
    int components = 0;
    for (int v = 0; v < 2 * n; ++v)
        if (uf.find(v) == v) ++components;
    return components;
}

}  // namespace

Poly trace(const DiagramMorphism& f) {
    if (f.top() != f.bottom()) throw std::invalid_argument("trace: not an endomorphism");
    const DiagramMorphism* m = &f;
    DiagramMorphism converted(0, 0, Basis::kDiagram);
    if (f.basis() == Basis::kOrbit) {
        converted = from_orbit_basis(f);
        m = &converted;
    }
    Poly out;
    for (const auto& [d, c] : m->terms()) out += c * t_power(closure_components(d));
    return out;
}

namespace {

// Shared scaffolding of the two Moebius transforms: out += f(pi, rho) for
// every pair pi <= rho in the coarsening order.
template <typename F>
DiagramMorphism lattice_transform(const DiagramMorphism& in, Basis out_basis, F coefficient) {
    DiagramMorphism out(in.top(), in.bottom(), out_basis);
    int ground = in.top() + in.bottom();
    std::vector<SetPartition> all = enumerate_set_partitions(ground);
    for (const auto& [d, c] : in.terms()) {
        for (const SetPartition& rho : all) {
            if (!refines(d.blocks, rho)) continue;
            Poly factor = coefficient(d.blocks, rho);
            if (factor.is_zero()) continue;
            out.add_term(make_diagram(in.top(), in.bottom(), rho), c * factor);
        }
    }
    return out;
}

}  // namespace

DiagramMorphism to_orbit_basis(const DiagramMorphism& f) {
    if (f.basis() == Basis::kOrbit) return f;
    // d_pi = sum_{rho >= pi} x_rho
    return lattice_transform(f, Basis::kOrbit,
                             [](const SetPartition&, const SetPartition&) { return Poly(Rational(1)); });
}

DiagramMorphism from_orbit_basis(const DiagramMorphism& f) {
    if (f.basis() == Basis::kDiagram) return f;
    // x_pi = sum_{rho >= pi} mu(pi, rho) d_rho
    return lattice_transform(f, Basis::kDiagram, [](const SetPartition& pi, const SetPartition& rho) {
        return Poly(Rational(moebius_partition_lattice(pi, rho)));
    });
}

DiagramMorphism compose_orbit(const DiagramMorphism& g, const DiagramMorphism& f) {
    if (f.basis() != Basis::kOrbit || g.basis() != Basis::kOrbit)
        throw std::invalid_argument("compose_orbit: orbit-basis morphisms required");
    return to_orbit_basis(compose(from_orbit_basis(g), from_orbit_basis(f)));
}

std::vector<PartitionDiagram> end_basis(int n) {
    if (n < 0) throw std::invalid_argument("end_basis: n < 0");
    std::vector<PartitionDiagram> out;
    for (SetPartition& sp : enumerate_set_partitions(2 * n))
        out.push_back(make_diagram(n, n, std::move(sp)));
    return out;
}

long long end_dimension(int n) {
    long long by_enumeration = static_cast<long long>(end_basis(n).size());
    long long by_recurrence = to_long_checked(bell_number(2 * n));
    if (by_enumeration != by_recurrence)
        throw std::logic_error("end_dimension: diagram count disagrees with Bell number");
    return by_enumeration;
}

std::vector<int> cycle_type_of(const std::vector<int>& sigma) {
    int n = static_cast<int>(sigma.size());
    std::vector<char> seen(n, 0);
    std::vector<int> lengths;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = sigma[j];
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(sigma);
    while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

}  // namespace repst
