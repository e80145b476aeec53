#include "fmdraw/rotation_graph.hpp"

#include <algorithm>
#include <set>

namespace fmdraw {

bool RotationGraph::has_edge(const std::string& u,
                             const std::string& v) const {
  auto it = rot_.find(u);
  if (it == rot_.end()) return false;
  return std::find(it->second.begin(), it->second.end(), v) !=
         it->second.end();
}

std::size_t RotationGraph::degree(const std::string& v) const {
  auto it = rot_.find(v);
  return it == rot_.end() ? 0 : it->second.size();
}

const std::vector<std::string>& RotationGraph::rotation(
    const std::string& v) const {
  auto it = rot_.find(v);
  if (it == rot_.end())
    throw Error(ErrorCode::disconnected_stream, "unknown vertex: " + v);
  return it->second;
}

std::vector<std::string> RotationGraph::vertices() const {
  return insertion_order_;
}

void RotationGraph::insert_edge(const std::string& u, const std::string& v,
                                std::size_t pos_u, std::size_t pos_v) {
  if (u == v)
    throw Error(ErrorCode::unsupported, "self-loop: " + u);
  if (has_edge(u, v))
    throw Error(ErrorCode::unsupported, "edge already present: " + u + "-" + v);
  for (const auto& [name, pos] : {std::pair{u, pos_u}, std::pair{v, pos_v}}) {
    if (!has_vertex(name)) {
      if (pos != 0)
        throw Error(ErrorCode::invalid_rotation_index,
                    "fresh vertex " + name + " needs rotation index 0");
    } else if (pos > rot_.at(name).size()) {
      throw Error(ErrorCode::invalid_rotation_index,
                  "rotation index out of range for " + name);
    }
  }
  for (const auto& [name, pos, other] :
       {std::tuple{u, pos_u, v}, std::tuple{v, pos_v, u}}) {
    auto [it, fresh] = rot_.try_emplace(name);
    if (fresh) insertion_order_.push_back(name);
    it->second.insert(it->second.begin() + static_cast<long>(pos), other);
  }
  ++edges_;
}

std::vector<FaceWalk> RotationGraph::faces() const {
  std::vector<FaceWalk> out;
  std::set<std::pair<std::string, std::string>> visited;

  auto trace = [&](const std::string& su, const std::string& sv) {
    FaceWalk walk;
    std::string u = su, v = sv;
    while (visited.insert({u, v}).second) {
      const auto& r = rot_.at(v);
      auto it = std::find(r.begin(), r.end(), u);
      std::size_t i = static_cast<std::size_t>(it - r.begin());
      const std::string& w = r[(i + 1) % r.size()];
      walk.push_back(Corner{v, u, w});
      u = v;
      v = w;
    }
    return walk;
  };

  for (const auto& start : insertion_order_) {
    for (const auto& nb : rot_.at(start)) {
      if (visited.count({start, nb})) continue;
      out.push_back(trace(start, nb));
    }
  }
  return out;
}

FaceWalk outer_face_order(const RotationGraph& g) {
  auto all = g.vertices();
  for (auto& f : g.faces()) {
    std::set<std::string> seen;
    for (const auto& c : f) seen.insert(c.v);
    if (seen.size() == all.size()) return f;
  }
  throw Error(ErrorCode::invariant_breach,
              "no face touches every vertex; embedding is not outerplanar");
}

}  // namespace fmdraw
