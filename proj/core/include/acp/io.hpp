#pragma once

#include <optional>

#include "acp/certifier.hpp"
#include "acp/encoder.hpp"
#include "acp/mobius.hpp"

// vendored single-header nlohmann/json
#include "json.hpp"

namespace acp {

using Json = nlohmann::json;

// decimal payloads are strings tagged with their digit count: "0.15470...e0@64"
std::string encode_decimal(const BigReal& x);
BigReal decode_decimal(const std::string& s);

Json to_json(const Triangulation& t);
Triangulation triangulation_from_json(const Json& j);

struct TriangulationFile {
    Triangulation triangulation;
    std::optional<std::array<int, 3>> marked_face;
    std::optional<int> marked_vertex;
    std::optional<int> marked_neighbor;
};
TriangulationFile triangulation_file_from_json(const Json& j);

struct GraphFile {
    SimpleGraph graph;
    RotationSystem rotation;
};
GraphFile graph_file_from_json(const Json& j);

Json to_json(const EuclideanPacking& p);
Json to_json(const TorusPacking& p);
Json to_json(const HyperbolicPacking& p);
EuclideanPacking euclidean_packing_from_json(const Json& j);
TorusPacking torus_packing_from_json(const Json& j);
HyperbolicPacking hyperbolic_packing_from_json(const Json& j);

// geometry tag of a packing file: "euclidean", "euclidean-torus", "hyperbolic-disk"
std::string packing_geometry(const Json& j);

Json dual_to_json(const EuclideanPacking& p, const std::map<int, Circle>& dual);

Json to_json(const std::vector<AlgebraicCertificate>& certs);

Json to_json(const PolySystem& sys);
PolySystem polysystem_from_json(const Json& j);

std::string read_text_file(const std::string& path);
// write via a temp file and an atomic rename so failures leave no partial artifact
void write_text_file_atomic(const std::string& path, const std::string& content);

}  // namespace acp
