#include "lgc/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "lgc/error.hpp"

namespace lgc {
namespace {

// Whitespace-separated integer tokens with '#' comments removed.
class TokenReader {
 public:
  explicit TokenReader(std::istream& in) : in_(in) {}

  bool NextLine(std::vector<long long>& values) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream fields(line);
      values.clear();
      std::string token;
      while (fields >> token) {
        std::size_t used = 0;
        long long v = 0;
        try {
          v = std::stoll(token, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != token.size()) Fail("not an integer: '" + token + "'");
        values.push_back(v);
      }
      if (!values.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line_no_) + ": " + what);
  }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

std::ifstream Open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  return in;
}

}  // namespace

BoundedGraph ReadGraph(std::istream& in) {
  TokenReader reader(in);
  std::vector<long long> row;
  if (!reader.NextLine(row)) reader.Fail("missing header 'n m'");
  if (row.size() < 2 || row.size() > 3) reader.Fail("header must be 'n m' or 'n m d'");
  const long long n = row[0];
  const long long m = row[1];
  if (n < 0 || m < 0 || n > (1LL << 30)) reader.Fail("bad vertex or edge count");
  long long bound = row.size() == 3 ? row[2] : -1;
  std::vector<Edge> edges;
  edges.reserve(m);
  std::vector<int> degree(n, 0);
  for (long long i = 0; i < m; ++i) {
    if (!reader.NextLine(row)) reader.Fail("expected " + std::to_string(m) + " edges");
    if (row.size() != 2) reader.Fail("edge line must be 'u v'");
    if (row[0] < 0 || row[0] >= n || row[1] < 0 || row[1] >= n) reader.Fail("vertex out of range");
    edges.emplace_back(static_cast<Vertex>(row[0]), static_cast<Vertex>(row[1]));
    ++degree[row[0]];
    ++degree[row[1]];
  }
  if (reader.NextLine(row)) reader.Fail("trailing data after edges");
  if (bound < 0) {
    bound = 0;
    for (int d : degree) bound = std::max<long long>(bound, d);
  }
  return BoundedGraph::Build(static_cast<Vertex>(n), edges, static_cast<int>(bound));
}

BoundedGraph ReadGraphFile(const std::string& path) {
  auto in = Open(path);
  return ReadGraph(in);
}

void WriteGraph(std::ostream& out, const BoundedGraph& graph) {
  const auto edges = graph.Edges();
  out << graph.num_vertices() << ' ' << edges.size() << ' ' << graph.max_degree() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
}

VertexColoring ReadColoring(std::istream& in) {
  TokenReader reader(in);
  std::vector<long long> row;
  if (!reader.NextLine(row) || row.size() != 2) reader.Fail("header must be 'n k'");
  const long long n = row[0];
  if (n < 0 || row[1] < 1) reader.Fail("bad coloring header");
  VertexColoring c{static_cast<int>(row[1]), {}};
  c.colors.reserve(n);
  while (static_cast<long long>(c.colors.size()) < n && reader.NextLine(row)) {
    for (long long x : row) c.colors.push_back(static_cast<int>(x));
  }
  if (static_cast<long long>(c.colors.size()) != n) reader.Fail("expected " + std::to_string(n) + " colors");
  c.Validate();
  return c;
}

VertexColoring ReadColoringFile(const std::string& path) {
  auto in = Open(path);
  return ReadColoring(in);
}

void WriteColoring(std::ostream& out, const VertexColoring& coloring) {
  out << coloring.colors.size() << ' ' << coloring.palette << '\n';
  for (int c : coloring.colors) out << c << '\n';
}

EdgeColoring ReadEdgeColoring(std::istream& in, int palette) {
  TokenReader reader(in);
  std::vector<long long> row;
  EdgeColoring c{1, {}};
  int largest = 1;
  while (reader.NextLine(row)) {
    if (row.size() != 3) reader.Fail("edge color line must be 'u v color'");
    if (row[0] == row[1] || row[0] < 0 || row[1] < 0) reader.Fail("bad edge");
    Edge e{static_cast<Vertex>(std::min(row[0], row[1])), static_cast<Vertex>(std::max(row[0], row[1]))};
    if (!c.colors.emplace(e, static_cast<int>(row[2])).second) reader.Fail("edge listed twice");
    largest = std::max(largest, static_cast<int>(row[2]));
  }
  c.palette = palette > 0 ? palette : largest;
  return c;
}

void WriteEdgeColoring(std::ostream& out, const EdgeColoring& coloring) {
  for (const auto& [e, c] : coloring.colors) out << e.first << ' ' << e.second << ' ' << c << '\n';
}

Rational ParseRational(const std::string& text) {
  auto fail = [&]() -> Rational {
    throw Error(ErrorCode::kInvalidArgument, "not a number: '" + text + "'");
  };
  if (text.empty()) return fail();
  if (auto slash = text.find('/'); slash != std::string::npos) {
    try {
      std::size_t a = 0;
      std::size_t b = 0;
      const long long num = std::stoll(text.substr(0, slash), &a);
      const long long den = std::stoll(text.substr(slash + 1), &b);
      if (a != slash || b != text.size() - slash - 1 || den == 0) return fail();
      return Rational(num, den);
    } catch (const std::exception&) {
      return fail();
    }
  }
  // Decimal with optional exponent, converted exactly.
  std::string mantissa = text;
  long long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string::npos) {
    try {
      std::size_t used = 0;
      exponent = std::stoll(text.substr(e + 1), &used);
      if (used != text.size() - e - 1) return fail();
    } catch (const std::exception&) {
      return fail();
    }
    mantissa = text.substr(0, e);
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
    negative = mantissa[0] == '-';
    mantissa.erase(0, 1);
  }
  long long num = 0;
  int digits = 0;
  bool seen_point = false;
  int fraction_digits = 0;
  for (char ch : mantissa) {
    if (ch == '.' && !seen_point) {
      seen_point = true;
      continue;
    }
    if (ch < '0' || ch > '9' || digits >= 17) return fail();
    num = num * 10 + (ch - '0');
    ++digits;
    if (seen_point) ++fraction_digits;
  }
  if (digits == 0) return fail();
  exponent -= fraction_digits;
  if (exponent > 17 || exponent < -18) return fail();
  long long scale = 1;
  for (long long i = 0; i < std::abs(exponent); ++i) scale *= 10;
  Rational value = exponent >= 0 ? Rational(num * scale) : Rational(num, scale);
  return negative ? -value : value;
}

nlohmann::json ToJson(const BallDistribution& dist) {
  nlohmann::json balls = nlohmann::json::array();
  for (const auto& [code, count] : dist.counts) {
    const Rational p(count, dist.total);
    balls.push_back({{"code", ToHex(code)}, {"count", count}, {"prob", ToString(p)}, {"p", ToDouble(p)}});
  }
  nlohmann::json j = {{"r", dist.radius},
                      {"k", dist.palette},
                      {"mode", dist.mode == DistributionMode::kExact ? "exact" : "sampled"},
                      {"total", dist.total},
                      {"balls", std::move(balls)}};
  if (dist.mode == DistributionMode::kSampled) {
    j["samples"] = dist.samples;
    j["seed"] = dist.seed;
  }
  return j;
}

BallDistribution DistributionFromJson(const nlohmann::json& j) {
  try {
    BallDistribution d;
    d.radius = j.at("r").get<int>();
    d.palette = j.at("k").get<int>();
    d.mode = j.at("mode").get<std::string>() == "sampled" ? DistributionMode::kSampled
                                                          : DistributionMode::kExact;
    d.total = j.at("total").get<std::int64_t>();
    if (j.contains("samples")) d.samples = j["samples"].get<std::int64_t>();
    if (j.contains("seed")) d.seed = j["seed"].get<std::uint64_t>();
    std::int64_t sum = 0;
    for (const auto& b : j.at("balls")) {
      const auto count = b.at("count").get<std::int64_t>();
      d.counts[FromHex(b.at("code").get<std::string>())] += count;
      sum += count;
    }
    if (sum != d.total) throw Error(ErrorCode::kParse, "ball counts do not add up to total");
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

nlohmann::json ToJson(const DistributionSet& set) {
  nlohmann::json members = nlohmann::json::array();
  for (std::size_t i = 0; i < set.members.size(); ++i) {
    nlohmann::json m = ToJson(set.members[i]);
    if (i < set.witnesses.size()) m["witness"] = set.witnesses[i].colors;
    members.push_back(std::move(m));
  }
  return {{"r", set.radius}, {"k", set.palette}, {"exact", set.exact}, {"size", set.size()},
          {"members", std::move(members)}};
}

nlohmann::json ToJson(const VertexColoring& coloring) {
  return {{"k", coloring.palette}, {"colors", coloring.colors}};
}

nlohmann::json ToJson(const VertexSetColoring& sets) {
  nlohmann::json map = nlohmann::json::object();
  for (std::size_t v = 0; v < sets.sets.size(); ++v) map[std::to_string(v)] = sets.sets[v];
  return {{"palette", sets.palette}, {"sets", std::move(map)}};
}

VertexSetColoring SetColoringFromJson(const nlohmann::json& j) {
  try {
    VertexSetColoring out;
    out.palette = j.at("palette").get<int>();
    const auto& map = j.at("sets");
    out.sets.resize(map.size());
    for (const auto& [key, value] : map.items()) {
      const std::size_t v = std::stoul(key);
      if (v >= out.sets.size()) throw Error(ErrorCode::kParse, "set coloring skips vertices");
      out.sets[v] = value.get<std::vector<int>>();
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  } catch (const std::logic_error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

nlohmann::json ToJson(const PartitionCertificate& cert) {
  return {{"q", cert.q},
          {"n", cert.num_vertices},
          {"deleted", cert.deleted},
          {"eps", ToString(cert.eps())},
          {"eps_value", ToDouble(cert.eps())},
          {"mode", cert.mode == CertificateMode::kExact ? "exact" : "heuristic"},
          {"component_sizes", cert.component_sizes}};
}

PartitionCertificate CertificateFromJson(const nlohmann::json& j) {
  try {
    PartitionCertificate cert;
    cert.q = j.at("q").get<int>();
    cert.num_vertices = j.at("n").get<Vertex>();
    cert.deleted = j.at("deleted").get<std::vector<Vertex>>();
    cert.component_sizes = j.at("component_sizes").get<std::vector<int>>();
    cert.mode = j.at("mode").get<std::string>() == "exact" ? CertificateMode::kExact
                                                           : CertificateMode::kHeuristic;
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

}  // namespace lgc
