#include "repst/json_io.hpp"

#include <stdexcept>

namespace repst {

Json partition_to_json(const Partition& p) {
    Json j = Json::array();
    for (int part : p) j.push_back(part);
    return j;
}

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition: expected an array");
    Partition p;
    for (const Json& v : j) p.push_back(v.get<int>());
    check_partition(p);
    return p;
}

std::string strand_label(int vertex, int top) {
    if (vertex < top) return "t" + std::to_string(vertex + 1);
    return "b" + std::to_string(vertex - top + 1);
}

int strand_vertex(const std::string& label, int top, int bottom) {
    if (label.size() < 2 || (label[0] != 't' && label[0] != 'b'))
        throw std::invalid_argument("bad strand label: " + label);
    int idx = std::stoi(label.substr(1)) - 1;
    if (label[0] == 't') {
        if (idx < 0 || idx >= top) throw std::invalid_argument("top label out of range: " + label);
        return idx;
    }
    if (idx < 0 || idx >= bottom) throw std::invalid_argument("bottom label out of range: " + label);
    return top + idx;
}

Json poly_to_json(const Poly& p) {
    Json coeffs = Json::array();
    for (const Rational& c : p.coeffs()) coeffs.push_back(c.get_str());
    return Json{{"coeffs", coeffs}};
}

Poly poly_from_json(const Json& j) {
    if (!j.contains("coeffs")) throw std::invalid_argument("polynomial: missing \"coeffs\"");
    std::vector<Rational> coeffs;
    for (const Json& c : j.at("coeffs")) coeffs.push_back(rational_from_string(c.get<std::string>()));
    return Poly(std::move(coeffs));
}

Json algebraic_to_json(const AlgebraicNumber& x) {
    return Json{{"modulus", poly_to_json(x.modulus())}, {"rep", poly_to_json(x.rep())}};
}

AlgebraicNumber algebraic_from_json(const Json& j) {
    return AlgebraicNumber(poly_from_json(j.at("modulus")), poly_from_json(j.at("rep")));
}

Json diagram_to_json(const PartitionDiagram& d) {
    Json blocks = Json::array();
    for (const auto& block : d.blocks) {
        Json b = Json::array();
        for (int v : block) b.push_back(strand_label(v, d.top));
        blocks.push_back(b);
    }
    return Json{{"top", d.top}, {"bottom", d.bottom}, {"blocks", blocks}};
}

PartitionDiagram diagram_from_json(const Json& j) {
    int top = j.at("top").get<int>();
    int bottom = j.at("bottom").get<int>();
    SetPartition blocks;
    for (const Json& b : j.at("blocks")) {
        std::vector<int> block;
        for (const Json& label : b) block.push_back(strand_vertex(label.get<std::string>(), top, bottom));
        blocks.push_back(std::move(block));
    }
    return make_diagram(top, bottom, std::move(blocks));
}

Json morphism_to_json(const DiagramMorphism& m) {
    Json terms = Json::array();
    for (const auto& [d, c] : m.terms())
        terms.push_back(Json{{"diagram", diagram_to_json(d)}, {"coeff", poly_to_json(c)}});
    return Json{{"top", m.top()},
                {"bottom", m.bottom()},
                {"basis", m.basis() == Basis::kDiagram ? "diagram" : "orbit"},
                {"terms", terms}};
}

DiagramMorphism morphism_from_json(const Json& j) {
    std::string basis_name = j.at("basis").get<std::string>();
    Basis basis;
    if (basis_name == "diagram") basis = Basis::kDiagram;
    else if (basis_name == "orbit")
        basis = Basis::kOrbit;
    else
        throw std::invalid_argument("morphism: basis must be \"diagram\" or \"orbit\"");
    DiagramMorphism m(j.at("top").get<int>(), j.at("bottom").get<int>(), basis);
    for (const Json& term : j.at("terms"))
        m.add_term(diagram_from_json(term.at("diagram")), poly_from_json(term.at("coeff")));
    return m;
}

Json virtual_object_to_json(const VirtualObject& x) {
    Json terms = Json::array();
    for (const auto& [p, mult] : x)
        terms.push_back(Json{{"partition", partition_to_json(p)}, {"mult", mult}});
    return Json{{"terms", terms}};
}

VirtualObject virtual_object_from_json(const Json& j) {
    VirtualObject x;
    for (const Json& term : j.at("terms")) {
        long long mult = term.at("mult").get<long long>();
        if (mult < 1) throw std::invalid_argument("virtual object: multiplicities must be >= 1");
        x[partition_from_json(term.at("partition"))] += mult;
    }
    return x;
}

Json superalgebra_to_json(const SuperAlgebra& a) {
    Json unit = Json::array();
    for (const Rational& c : a.unit()) unit.push_back(c.get_str());
    Json mult = Json::array();
    for (int i = 0; i < a.dim(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < a.dim(); ++j) {
            Json cell = Json::array();
            for (int k = 0; k < a.dim(); ++k) cell.push_back(a.structure(i, j, k).get_str());
            row.push_back(cell);
        }
        mult.push_back(row);
    }
    return Json{{"p", a.even_dim()}, {"q", a.odd_dim()}, {"unit", unit}, {"mult", mult}};
}

SuperAlgebra superalgebra_from_json(const Json& j) {
    int p = j.at("p").get<int>();
    int q = j.at("q").get<int>();
    std::vector<Rational> unit;
    for (const Json& c : j.at("unit")) unit.push_back(rational_from_string(c.get<std::string>()));
    std::vector<std::vector<std::vector<Rational>>> mult;
    for (const Json& row : j.at("mult")) {
        std::vector<std::vector<Rational>> r;
        for (const Json& cell : row) {
            std::vector<Rational> c;
            for (const Json& v : cell) c.push_back(rational_from_string(v.get<std::string>()));
            r.push_back(std::move(c));
        }
        mult.push_back(std::move(r));
    }
    return SuperAlgebra(p, q, std::move(unit), std::move(mult));
}

Json multiplicity_map_to_json(const std::map<Partition, long long, PartitionLess>& m) {
    Json out = Json::array();
    for (const auto& [p, mult] : m)
        out.push_back(Json{{"partition", partition_to_json(p)}, {"mult", mult}});
    return out;
}

Json section7_report_to_json(const Section7Report& r) {
    Json steps = Json::array();
    for (const ReportStep& s : r.steps)
        steps.push_back(Json{{"name", s.name}, {"value", s.value}, {"anchor", s.anchor}});
    return Json{{"steps", steps}, {"verdict", r.verdict}};
}

Json generator_power_report_to_json(const GeneratorPowerReport& r) {
    return Json{{"n", r.n},
                {"multiplicities", multiplicity_map_to_json(r.multiplicities)},
                {"length", r.length},
                {"dim_end", r.dim_end},
                {"bell_2n", r.bell_2n},
                {"length_exceeds_sqrt_factorial", r.length_exceeds_sqrt_factorial}};
}

}  // namespace repst
