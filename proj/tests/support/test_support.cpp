#include "test_support.hpp"

#include <algorithm>

#include "fmdraw/workloads.hpp"

namespace fmdraw::test {

ExerciseResult exercise(Labeler& lab, WorkloadKind kind, std::size_t n,
                        std::mt19937_64& rng, bool audit_each) {
  ExerciseResult out;
  ListOracle ref;
  LabelMap replica;
  std::vector<ElementHandle> handles;
  handles.reserve(n);

  for (std::size_t i = 0; i < n; ++i) {
    ElementHandle anchor = kNullAnchor;
    Side side = Side::after;
    if (i > 0) {
      switch (kind) {
        case WorkloadKind::random_positions: {
          anchor = handles[rng() % handles.size()];
          side = rng() % 2 ? Side::after : Side::before;
          break;
        }
        case WorkloadKind::sequential:
          anchor = handles.back();
          side = Side::after;
          break;
        case WorkloadKind::hot_spot:
          anchor = handles.front();
          side = Side::after;
          break;
      }
    }
    auto res = lab.insert(anchor, side);
    ref.insert(anchor, side, res.handle);
    handles.push_back(res.handle);

    if (audit_each) {
      auto counts = count_and_apply(res.relabels, replica);
      out.singles += counts.singles;
      out.bulks += counts.bulks;
      out.max_bulk_size = std::max(out.max_bulk_size, counts.max_bulk_size);
      if (lab.bulk_limit() > 0 &&
          counts.max_bulk_size > static_cast<std::uint64_t>(lab.bulk_limit()))
        throw Error(ErrorCode::invariant_breach,
                    "bulk op exceeds declared B");
      if (lab.bulk_limit() == 0 && counts.bulks > 0)
        throw Error(ErrorCode::invariant_breach,
                    "singles-only labeler emitted a bulk op");
      // count_and_apply already landed the ops (throwing on
      // collision/reorder); only the fresh element is left to place.
      replica.place(res.handle, res.assigned);
    } else {
      for (const auto& op : res.relabels) {
        if (op.is_bulk()) ++out.bulks;
        else ++out.singles;
      }
    }
    out.max_label = std::max(out.max_label, res.assigned);
    if (audit_each) {
      for (const auto& op : res.relabels)
        if (!op.is_bulk())
          out.max_label = std::max(out.max_label, op.single().new_label);
        else
          out.max_label =
              std::max(out.max_label, op.bulk().hi + op.bulk().delta);
    }
  }

  // Final order check: labeler order (by label) vs linked-list reference.
  auto expected = ref.order();
  std::vector<std::pair<Label, std::uint64_t>> got;
  got.reserve(handles.size());
  for (const auto& h : handles) got.emplace_back(lab.label_of(h), h.id);
  std::sort(got.begin(), got.end());
  if (!got.empty()) out.max_label = std::max(out.max_label, got.back().first);
  out.order_matches = got.size() == expected.size();
  for (std::size_t i = 0; out.order_matches && i < got.size(); ++i)
    out.order_matches = got[i].second == expected[i];

  if (audit_each) {
    // The replayed map must agree with the labeler's own final labels.
    for (const auto& h : handles)
      if (replica.label_of(h) != lab.label_of(h))
        throw Error(ErrorCode::invariant_breach,
                    "replayed labels diverge from labeler state");
  }
  return out;
}

std::vector<TreeEdgeEvent> random_tree_stream(std::size_t n,
                                              std::mt19937_64& rng,
                                              double root_grow_prob) {
  std::vector<TreeEdgeEvent> out;
  for (const auto& e : fmdraw::random_tree_events(n, rng, root_grow_prob))
    out.push_back(TreeEdgeEvent{e.u, e.v, e.pos_u});
  return out;
}

namespace {

std::vector<OuterEvent> convert(const std::vector<StreamEvent>& in) {
  std::vector<OuterEvent> out;
  for (const auto& e : in)
    out.push_back(OuterEvent{e.u, e.v, e.pos_u, e.pos_v, e.hint});
  return out;
}

}  // namespace

std::vector<OuterEvent> maximal_outerplanar_stream(std::size_t n,
                                                   std::mt19937_64& rng) {
  return convert(fmdraw::maximal_outerplanar_events(n, rng));
}

std::vector<OuterEvent> outerplanar_move_stream(std::size_t n,
                                                std::mt19937_64& rng,
                                                double close_prob) {
  return convert(fmdraw::outerplanar_move_events(n, rng, close_prob));
}

}  // namespace fmdraw::test
