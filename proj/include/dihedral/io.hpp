#pragma once

#include <string>

#include "dihedral/bk.hpp"
#include "dihedral/building.hpp"
#include "dihedral/cones.hpp"
#include "json.hpp"

namespace dihedral {

using Json = nlohmann::ordered_json;

// Field elements are coefficient lists (rational strings) in the power basis of theta.
Json to_json(const FieldElement& e);
FieldElement field_element_from_json(const Field& f, const Json& j);
Json to_json(const Field& f);
Json to_json(const WeylElement& w);
Json to_json(const InequalityTag& t);
Json to_json(const InequalitySystem& sys);
Json to_json(const RedundancyReport& rep);
Json to_json(const ConeEqualReport& rep);
Json to_json(const ChamberGraph& g);
Json to_json(const GraphMetrics& m);
Json to_json(const CensusReport& rep);
Json to_json(const WeightedConfiguration& c);

std::string system_to_latex(const InequalitySystem& sys);
std::string census_to_csv(const CensusReport& rep);

// {"point": [["a1", "b1"], ...]} with rational strings.
ConePoint cone_point_from_json(const Json& j);
ChamberGraph graph_from_json(const Json& j);
WeightedConfiguration config_from_json(const Json& j);

// Multiplication tables: at (A_t), gr (associated graded for the full weighting or side i),
// limit (tau -> infinity pre-ring table), bi (the subalgebra B^(i)).
Json mult_table(int n, const std::string& algebra, int side);

// Canonical text of a JSON document: two-space indent and a trailing newline.
std::string canonical_dump(const Json& j);
std::string sha256_hex(const std::string& data);

struct RunManifest {
    std::string command;
    Json parameters = Json::object();
    std::uint64_t seed = 0;
    std::string field;
    std::string toolchain;
    Json digests = Json::object();  // artifact name -> sha256 of its canonical text
};

RunManifest make_manifest(const std::string& command, Json parameters, std::uint64_t seed, const std::string& field);
Json to_json(const RunManifest& m);
// Wraps a payload with its manifest; the digest covers the canonical payload text.
Json with_manifest(RunManifest m, const std::string& name, const Json& payload);

}  // namespace dihedral
