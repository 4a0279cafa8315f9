#pragma once

#include <json.hpp>

#include "repst/interp.hpp"
#include "repst/superalgebra.hpp"

namespace repst {

// Insertion-ordered JSON keeps every emitted document byte-stable.
using Json = nlohmann::ordered_json;

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

// Strand label of a diagram vertex: "t1".."tm" then "b1".."bn".
std::string strand_label(int vertex, int top);
int strand_vertex(const std::string& label, int top, int bottom);

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json algebraic_to_json(const AlgebraicNumber& x);
AlgebraicNumber algebraic_from_json(const Json& j);

Json diagram_to_json(const PartitionDiagram& d);
PartitionDiagram diagram_from_json(const Json& j);

Json morphism_to_json(const DiagramMorphism& m);
DiagramMorphism morphism_from_json(const Json& j);

Json virtual_object_to_json(const VirtualObject& x);
VirtualObject virtual_object_from_json(const Json& j);

Json superalgebra_to_json(const SuperAlgebra& a);
SuperAlgebra superalgebra_from_json(const Json& j);

Json multiplicity_map_to_json(const std::map<Partition, long long, PartitionLess>& m);

Json section7_report_to_json(const Section7Report& r);
Json generator_power_report_to_json(const GeneratorPowerReport& r);

}  // namespace repst
