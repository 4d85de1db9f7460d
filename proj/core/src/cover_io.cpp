#include "twh/cover_io.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "twh/error.hpp"

namespace twh {

void to_json(nlohmann::json& j, const TwistedCover& cover) {
  auto ends = [](const std::vector<int>& parts) {
    std::vector<int> out;
    for (int part : parts) {
      out.push_back(part);
      out.push_back(part);
    }
    return out;
  };
  nlohmann::json vertices = nlohmann::json::array();
  nlohmann::json involution_vertices = nlohmann::json::array();
  for (std::size_t v = 0; v < cover.vertices.size(); ++v) {
    const auto& vertex = cover.vertices[v];
    vertices.push_back({{"level", vertex.level}, {"valence", vertex.valence}});
    if (static_cast<int>(v) <= vertex.partner) involution_vertices.push_back({v, vertex.partner});
  }
  nlohmann::json edges = nlohmann::json::array();
  nlohmann::json involution_edges = nlohmann::json::array();
  for (std::size_t e = 0; e < cover.edges.size(); ++e) {
    const auto& edge = cover.edges[e];
    int src = edge.src.kind == Endpoint::Kind::In ? -1 - edge.src.index : edge.src.index;
    int dst = edge.dst.kind == Endpoint::Kind::Out ? -1 - edge.dst.index : edge.dst.index;
    edges.push_back({{"src", src}, {"dst", dst}, {"weight", edge.weight}});
    if (static_cast<int>(e) < edge.partner) involution_edges.push_back({e, edge.partner});
  }
  j = {{"genus", cover.genus},
       {"b", cover.b},
       {"labeled", cover.labeled},
       {"ends_in", ends(cover.mu)},
       {"ends_out", ends(cover.nu)},
       {"vertices", std::move(vertices)},
       {"edges", std::move(edges)},
       {"involution_edges", std::move(involution_edges)},
       {"involution_vertices", std::move(involution_vertices)}};
}

void from_json(const nlohmann::json& j, TwistedCover& cover) {
  cover = TwistedCover{};
  cover.genus = j.value("genus", 0);
  cover.b = j.at("b").get<int>();
  cover.labeled = j.value("labeled", false);
  auto parts = [](const std::vector<int>& ends) {
    if (ends.size() % 2 != 0) throw Error(ErrorKind::InvalidInput, "ends come in pairs");
    std::vector<int> out;
    for (std::size_t k = 0; k < ends.size(); k += 2) {
      if (ends[k] != ends[k + 1]) throw Error(ErrorKind::InvalidInput, "paired ends have different weights");
      out.push_back(ends[k]);
    }
    return out;
  };
  cover.mu = parts(j.at("ends_in").get<std::vector<int>>());
  cover.nu = parts(j.at("ends_out").get<std::vector<int>>());
  for (const auto& v : j.at("vertices")) {
    cover.vertices.push_back({v.at("level").get<int>(), v.at("valence").get<int>(), -1});
  }
  for (const auto& e : j.at("edges")) {
    int src = e.at("src").get<int>();
    int dst = e.at("dst").get<int>();
    cover.edges.push_back({src < 0 ? Endpoint::in_end(-1 - src) : Endpoint::inner(src),
                           dst < 0 ? Endpoint::out_end(-1 - dst) : Endpoint::inner(dst), e.at("weight").get<int>(),
                           -1});
  }
  auto in_range = [](int x, std::size_t size) { return x >= 0 && static_cast<std::size_t>(x) < size; };
  for (const auto& pair : j.at("involution_vertices")) {
    int a = pair.at(0).get<int>();
    int b = pair.at(1).get<int>();
    if (!in_range(a, cover.vertices.size()) || !in_range(b, cover.vertices.size())) {
      throw Error(ErrorKind::InvalidInput, "vertex involution index out of range");
    }
    cover.vertices[static_cast<std::size_t>(a)].partner = b;
    cover.vertices[static_cast<std::size_t>(b)].partner = a;
  }
  for (const auto& pair : j.at("involution_edges")) {
    int a = pair.at(0).get<int>();
    int b = pair.at(1).get<int>();
    if (!in_range(a, cover.edges.size()) || !in_range(b, cover.edges.size())) {
      throw Error(ErrorKind::InvalidInput, "edge involution index out of range");
    }
    cover.edges[static_cast<std::size_t>(a)].partner = b;
    cover.edges[static_cast<std::size_t>(b)].partner = a;
  }
}

std::string to_dot(const TwistedCover& cover, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n  rankdir=LR;\n  node [shape=circle, label=\"\", width=0.15];\n";
  for (std::size_t k = 0; k < 2 * cover.mu.size(); ++k) out << "  in" << k << " [shape=point];\n";
  for (std::size_t k = 0; k < 2 * cover.nu.size(); ++k) out << "  out" << k << " [shape=point];\n";
  for (int level = 1; level <= cover.b; ++level) {
    out << "  { rank=same;";
    for (std::size_t v = 0; v < cover.vertices.size(); ++v) {
      if (cover.vertices[v].level == level) out << " v" << v << ";";
    }
    out << " }\n";
  }
  for (std::size_t v = 0; v < cover.vertices.size(); ++v) {
    if (cover.vertices[v].valence == 4) {
      out << "  v" << v << " [shape=box, style=filled, fillcolor=black, xlabel=\"4\"];\n";
    }
  }
  auto name_of = [](const Endpoint& p) {
    switch (p.kind) {
      case Endpoint::Kind::In: return "in" + std::to_string(p.index);
      case Endpoint::Kind::Out: return "out" + std::to_string(p.index);
      case Endpoint::Kind::Inner: break;
    }
    return "v" + std::to_string(p.index);
  };
  for (const auto& e : cover.edges) {
    out << "  " << name_of(e.src) << " -> " << name_of(e.dst) << " [label=\"" << e.weight << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace twh
