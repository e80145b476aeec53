#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "fmdraw/order_core.hpp"

namespace fmdraw {

/// One corner of a face walk: arriving at `v` from `in`, leaving to `out`.
struct Corner {
  std::string v;
  std::string in;
  std::string out;
  friend bool operator==(const Corner&, const Corner&) = default;
};

using FaceWalk = std::vector<Corner>;

/// Combinatorial embedding: per-vertex cyclic order of neighbors.
class RotationGraph {
 public:
  bool has_vertex(const std::string& v) const { return rot_.count(v) > 0; }
  bool has_edge(const std::string& u, const std::string& v) const;
  std::size_t degree(const std::string& v) const;
  std::size_t vertex_count() const { return rot_.size(); }
  std::size_t edge_count() const { return edges_; }
  const std::vector<std::string>& rotation(const std::string& v) const;
  std::vector<std::string> vertices() const;

  /// Insert edge (u,v) at rotation index pos_u of u and pos_v of v.
  /// Unknown endpoints are created (their index must then be 0).
  void insert_edge(const std::string& u, const std::string& v,
                   std::size_t pos_u, std::size_t pos_v);

  /// All face walks of the embedding. Deterministic order.
  std::vector<FaceWalk> faces() const;

 private:
  std::unordered_map<std::string, std::vector<std::string>> rot_;
  std::vector<std::string> insertion_order_;
  std::size_t edges_ = 0;
};

/// The face walk visiting every vertex, per the rotation system. Throws
/// invariant_breach when no face touches all vertices (the embedding is not
/// outerplanar). When several qualify the first in traversal order wins.
FaceWalk outer_face_order(const RotationGraph& g);

}  // namespace fmdraw
