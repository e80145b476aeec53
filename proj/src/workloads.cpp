#include "fmdraw/workloads.hpp"

#include <algorithm>
#include <unordered_map>

#include "fmdraw/rotation_graph.hpp"

namespace fmdraw {

std::vector<StreamEvent> random_tree_events(std::size_t n,
                                            std::mt19937_64& rng,
                                            double root_grow_prob) {
  std::vector<StreamEvent> events;
  std::vector<std::string> verts = {"v0"};
  std::vector<std::size_t> child_count = {0};
  std::string root = "v0";
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  for (std::size_t i = 1; i < n; ++i) {
    std::string fresh = "v" + std::to_string(i);
    if (root_grow_prob > 0.0 && coin(rng) < root_grow_prob) {
      events.push_back(StreamEvent{fresh, root, 0, 0, std::nullopt});
      root = fresh;
      verts.push_back(fresh);
      child_count.push_back(1);
      continue;
    }
    std::size_t pi = rng() % verts.size();
    std::size_t pos =
        child_count[pi] == 0 ? 0 : rng() % (child_count[pi] + 1);
    events.push_back(StreamEvent{verts[pi], fresh, pos, 0, std::nullopt});
    ++child_count[pi];
    verts.push_back(fresh);
    child_count.push_back(0);
  }
  return events;
}

namespace {

/// Rotation position at `v` that splits the corner entered from `in`.
std::size_t split_pos(const RotationGraph& g, const std::string& v,
                      const std::string& in) {
  const auto& r = g.rotation(v);
  auto it = std::find(r.begin(), r.end(), in);
  return static_cast<std::size_t>(it - r.begin()) + 1;
}

}  // namespace

std::vector<StreamEvent> maximal_outerplanar_events(std::size_t n,
                                                    std::mt19937_64& rng) {
  std::vector<StreamEvent> ev;
  if (n < 2) return ev;
  auto name = [](std::size_t i) { return "v" + std::to_string(i); };

  RotationGraph g;
  ev.push_back(StreamEvent{name(0), name(1), 0, 0, std::nullopt});
  g.insert_edge(name(0), name(1), 0, 0);

  for (std::size_t i = 2; i < n; ++i) {
    auto W = outer_face_order(g);
    const Corner c = W[rng() % W.size()];
    std::string x = name(i);

    // Ear over the outer edge c.v -> c.out: a fresh vertex in the corner,
    // then the closing edge of its triangle.
    std::size_t pv = split_pos(g, c.v, c.in);
    ev.push_back(StreamEvent{c.v, x, pv, 0, std::nullopt});
    g.insert_edge(c.v, x, pv, 0);

    std::size_t pw = split_pos(g, c.out, c.v);
    std::optional<SideHint> hint;
    if (g.vertex_count() == 3) hint = SideHint{"", true};  // first cycle
    ev.push_back(StreamEvent{x, c.out, 1, pw, hint});
    g.insert_edge(x, c.out, 1, pw);
  }
  return ev;
}

std::vector<StreamEvent> outerplanar_move_events(std::size_t n,
                                                 std::mt19937_64& rng,
                                                 double close_prob) {
  std::vector<StreamEvent> ev;
  if (n < 2) return ev;
  auto name = [](std::size_t i) { return "v" + std::to_string(i); };

  RotationGraph g;
  ev.push_back(StreamEvent{name(0), name(1), 0, 0, std::nullopt});
  g.insert_edge(name(0), name(1), 0, 0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  std::size_t next = 2;
  while (next < n) {
    if (g.vertex_count() >= 3 && coin(rng) < close_prob) {
      // Fence off part of the outer walk with a cycle-closing edge. Valid
      // when every vertex strictly inside the fenced arc reoccurs outside.
      auto W = outer_face_order(g);
      std::unordered_map<std::string, std::size_t> occ;
      for (const auto& c : W) ++occ[c.v];
      bool closed = false;
      for (int attempt = 0; attempt < 8 && !closed; ++attempt) {
        std::size_t i = rng() % W.size();
        std::size_t j = (i + 2 + rng() % W.size()) % W.size();
        const std::string& p = W[i].v;
        const std::string& q = W[j].v;
        if (p == q || g.has_edge(p, q)) continue;
        std::unordered_map<std::string, std::size_t> inside;
        for (std::size_t k = (i + 1) % W.size(); k != j;
             k = (k + 1) % W.size())
          ++inside[W[k].v];
        bool ok = true;
        for (const auto& [v, cnt] : inside)
          if (v != p && v != q && occ.at(v) == cnt) {
            ok = false;
            break;
          }
        if (!ok) continue;
        std::size_t pp = split_pos(g, p, W[i].in);
        std::size_t pq = split_pos(g, q, W[j].in);
        // left = keep the face traversed p->q, which is the unfenced side.
        ev.push_back(StreamEvent{p, q, pp, pq, SideHint{"", true}});
        g.insert_edge(p, q, pp, pq);
        closed = true;
      }
      if (closed) continue;
    }
    auto W = outer_face_order(g);
    const Corner c = W[rng() % W.size()];
    std::string x = name(next++);
    std::size_t pv = split_pos(g, c.v, c.in);
    ev.push_back(StreamEvent{c.v, x, pv, 0, std::nullopt});
    g.insert_edge(c.v, x, pv, 0);
  }
  return ev;
}

Stream make_workload(StreamMode mode, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Stream s;
  s.mode = mode;
  switch (mode) {
    case StreamMode::tree:
      s.events = random_tree_events(n, rng, 0.05);
      break;
    case StreamMode::treemap:
      s.events = random_tree_events(n, rng);
      break;
    case StreamMode::outerplanar:
      s.events = outerplanar_move_events(n, rng);
      break;
  }
  return s;
}

}  // namespace fmdraw
