#include "gsemi/io.hpp"

#include <bit>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gsemi {

nlohmann::json graph_to_json(const SimpleGraph& g) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j;
}

SimpleGraph graph_from_json(const nlohmann::json& j) {
  if (!j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs \"n\" and \"edges\"");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("edge entries must be [u, v] pairs");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return build_graph(j.at("n").get<int>(), edges);
}

std::string graph_to_text(const SimpleGraph& g) {
  std::ostringstream os;
  os << "n " << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

SimpleGraph graph_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank line
    if (first == "n") {
      if (!(ls >> n)) throw std::invalid_argument("malformed header line");
      continue;
    }
    int u = std::stoi(first), v;
    if (!(ls >> v)) throw std::invalid_argument("malformed edge line: " + line);
    edges.emplace_back(u, v);
  }
  if (n < 0) {
    n = 0;
    for (auto [u, v] : edges) n = std::max({n, u + 1, v + 1});
  }
  return build_graph(n, edges);
}

SimpleGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
    return graph_from_json(nlohmann::json::parse(ss.str()));
  return graph_from_text(ss.str());
}

void save_graph_file(const SimpleGraph& g, const std::string& path) {
  std::string content;
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
    content = graph_to_json(g).dump(2) + "\n";
  else
    content = graph_to_text(g);
  write_atomic(path, content);
}

SimpleGraph graph_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("graph spec needs the form kind:args, got " +
                                spec);
  std::string kind = spec.substr(0, colon);
  std::string args = spec.substr(colon + 1);
  if (kind == "file") return load_graph_file(args);
  auto parse_two = [&]() -> std::pair<int, int> {
    auto comma = args.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("spec " + kind + " needs L,omega");
    return {std::stoi(args.substr(0, comma)), std::stoi(args.substr(comma + 1))};
  };
  if (kind == "turan") {
    auto [L, omega] = parse_two();
    return turan_graph(L, omega);
  }
  if (kind == "minimizer") {
    auto [L, omega] = parse_two();
    return minimizer_graph(L, omega);
  }
  if (kind == "complete") return complete_graph(std::stoi(args));
  if (kind == "edgeless") return edgeless_graph(std::stoi(args));
  if (kind == "cycle") return cycle_graph(std::stoi(args));
  throw std::invalid_argument("unknown graph spec kind: " + kind);
}

nlohmann::json word_to_json(const TraceWord& w) {
  nlohmann::json j = nlohmann::json::array();
  for (auto mask : w.cliques) {
    nlohmann::json clique = nlohmann::json::array();
    for (std::uint64_t m = mask; m; m &= m - 1)
      clique.push_back(std::countr_zero(m));
    j.push_back(std::move(clique));
  }
  return j;
}

TraceWord word_from_json(const nlohmann::json& j, const SimpleGraph& g) {
  std::vector<int> letters;
  for (const auto& clique : j)
    for (const auto& v : clique) letters.push_back(v.get<int>());
  return normalize(letters, g);
}

nlohmann::json path_to_json(const CayleyPath& path) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& w : path.words) j.push_back(word_to_json(w));
  return j;
}

nlohmann::json partition_to_json(const PairPartition& pi) {
  nlohmann::json j = nlohmann::json::array();
  for (auto [s, r] : pi.blocks) j.push_back({s, r});
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write to " + tmp);
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("atomic rename to " + path + " failed");
}

}  // namespace gsemi
