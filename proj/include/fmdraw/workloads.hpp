#pragma once

#include <cstdint>
#include <random>

#include "fmdraw/stream.hpp"

namespace fmdraw {

/// Random rooted-tree stream: n-1 edges, each attaching a fresh leaf to a
/// uniformly chosen existing vertex at a random rotation slot. With
/// root_grow_prob > 0 some events instead grow a new root above the current
/// one.
std::vector<StreamEvent> random_tree_events(std::size_t n,
                                            std::mt19937_64& rng,
                                            double root_grow_prob = 0.0);

/// Random maximal outerplanar stream on n vertices: an initial edge followed
/// by ears (fresh vertex over an outer-face corner, then the closing edge of
/// its triangle). Every event is insertable by construction.
std::vector<StreamEvent> maximal_outerplanar_events(std::size_t n,
                                                    std::mt19937_64& rng);

/// Random outerplanar stream that exercises vertex moves: a growing tree
/// with occasional cycle-closing edges that fence off part of the outer
/// walk.
std::vector<StreamEvent> outerplanar_move_events(std::size_t n,
                                                 std::mt19937_64& rng,
                                                 double close_prob = 0.3);

/// Seeded workload for one engine mode; outerplanar streams mix ears and
/// cycle closures.
Stream make_workload(StreamMode mode, std::size_t n, std::uint64_t seed);

}  // namespace fmdraw
