#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "lgc/encode.hpp"
#include "lgc/graph.hpp"
#include "lgc/hyperfinite.hpp"
#include "lgc/rational.hpp"
#include "lgc/stats.hpp"

namespace lgc {

// Graph text: first data line "n m [d]", then m lines "u v" (0-based).
// '#' starts a comment. Without d the bound is the largest degree present.
BoundedGraph ReadGraph(std::istream& in);
BoundedGraph ReadGraphFile(const std::string& path);
void WriteGraph(std::ostream& out, const BoundedGraph& graph);

// Coloring text: "n k" then n colors.
VertexColoring ReadColoring(std::istream& in);
VertexColoring ReadColoringFile(const std::string& path);
void WriteColoring(std::ostream& out, const VertexColoring& coloring);

// Edge coloring text: lines "u v color". palette 0 means the largest color.
EdgeColoring ReadEdgeColoring(std::istream& in, int palette = 0);
void WriteEdgeColoring(std::ostream& out, const EdgeColoring& coloring);

// "3/8", "0.125", "1e-3" or "2".
Rational ParseRational(const std::string& text);

nlohmann::json ToJson(const BallDistribution& dist);
BallDistribution DistributionFromJson(const nlohmann::json& j);
nlohmann::json ToJson(const DistributionSet& set);
nlohmann::json ToJson(const VertexColoring& coloring);
nlohmann::json ToJson(const VertexSetColoring& sets);
VertexSetColoring SetColoringFromJson(const nlohmann::json& j);
nlohmann::json ToJson(const PartitionCertificate& cert);
PartitionCertificate CertificateFromJson(const nlohmann::json& j);

}  // namespace lgc
