#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace fmdraw {

/// Integer position of an element in the label space [0, N].
using Label = std::int64_t;

/// Identity of an ordered element. Ids are assigned by a monotone counter
/// per labeler instance and never reused. Id 0 is the null anchor used for
/// the first insertion into an empty structure.
struct ElementHandle {
  std::uint64_t id = 0;

  bool is_null() const { return id == 0; }
  bool operator==(const ElementHandle&) const = default;
};

inline constexpr ElementHandle kNullAnchor{};

enum class Side { before, after };

enum class ErrorCode {
  stale_handle,
  capacity,
  invalid_relabel_batch,
  disconnected_stream,
  invalid_rotation_index,
  ambiguous_insertion,
  not_outerplanar,
  invariant_breach,
  parse_error,
  unsupported,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// A single-element relabel or a bulk interval shift. The unit of "move"
/// accounting: one Bulk op counts as one bulk move regardless of how many
/// elements it covers.
struct RelabelOp {
  struct Single {
    ElementHandle handle;
    Label old_label = 0;
    Label new_label = 0;
  };
  /// Every live element with label in [lo, hi] is shifted by delta. The
  /// target interval minus the source interval must hold no live elements.
  struct Bulk {
    Label lo = 0;
    Label hi = 0;
    Label delta = 0;
  };

  std::variant<Single, Bulk> op;

  bool is_bulk() const { return std::holds_alternative<Bulk>(op); }
  const Single& single() const { return std::get<Single>(op); }
  const Bulk& bulk() const { return std::get<Bulk>(op); }

  static RelabelOp make_single(ElementHandle h, Label from, Label to) {
    return RelabelOp{Single{h, from, to}};
  }
  static RelabelOp make_bulk(Label lo, Label hi, Label delta) {
    return RelabelOp{Bulk{lo, hi, delta}};
  }
};

struct InsertResult {
  ElementHandle handle;  // the newly inserted element
  Label assigned = 0;
  std::vector<RelabelOp> relabels;  // applied in order, before `assigned`
};

/// Per-insertion move accounting shared by all labelers and engines.
struct MoveStats {
  std::uint64_t singles = 0;
  std::uint64_t bulks = 0;
  std::uint64_t max_bulk_size = 0;
  Label max_label = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> per_insertion;

  void record(std::uint64_t s, std::uint64_t b, std::uint64_t biggest_bulk,
              Label label_high) {
    singles += s;
    bulks += b;
    if (biggest_bulk > max_bulk_size) max_bulk_size = biggest_bulk;
    if (label_high > max_label) max_label = label_high;
    per_insertion.emplace_back(s, b);
  }
};

/// Ordered label assignment with per-op validation. Drawing engines replay
/// emitted RelabelOps onto coordinate state through this map; tests use it
/// to check that labelers report every move they make.
class LabelMap {
 public:
  bool contains(ElementHandle h) const { return by_handle_.count(h.id) > 0; }
  std::size_t size() const { return by_handle_.size(); }

  Label label_of(ElementHandle h) const {
    auto it = by_handle_.find(h.id);
    if (it == by_handle_.end())
      throw Error(ErrorCode::stale_handle, "stale handle");
    return it->second;
  }

  void place(ElementHandle h, Label l);
  void remove(ElementHandle h);
  void apply(const RelabelOp& op);
  void apply_all(const std::vector<RelabelOp>& ops) {
    for (const auto& op : ops) apply(op);
  }

  /// Live elements in label order.
  std::vector<ElementHandle> ordered_handles() const;

  /// Number of live elements with label in [lo, hi].
  std::size_t count_in(Label lo, Label hi) const;

  const std::map<Label, std::uint64_t>& by_label() const { return by_label_; }

 private:
  std::map<Label, std::uint64_t> by_label_;
  std::unordered_map<std::uint64_t, Label> by_handle_;
};

/// The ordered-labeling abstraction. Labelers must report every label
/// change through InsertResult; silent mutation is a contract violation.
class Labeler {
 public:
  virtual ~Labeler() = default;

  virtual InsertResult insert(ElementHandle anchor, Side side) = 0;
  virtual Label label_of(ElementHandle h) const = 0;
  virtual std::size_t size() const = 0;

  /// Declared bulk-size parameter B; 0 means the labeler emits Singles only.
  virtual Label bulk_limit() const { return 0; }
  /// Current upper bound of the label space (N).
  virtual Label label_space() const = 0;

  virtual bool supports_erase() const { return false; }
  /// Remove a live element. Only some strategies support this; the
  /// outerplanar engine requires it for vertex relocation.
  virtual std::vector<RelabelOp> erase(ElementHandle) {
    throw Error(ErrorCode::unsupported, "labeler does not support erase");
  }

  InsertResult insert_after(ElementHandle anchor) {
    return insert(anchor, Side::after);
  }
  InsertResult insert_before(ElementHandle anchor) {
    return insert(anchor, Side::before);
  }
};

/// Validates ops against `map` and applies them; throws
/// ErrorCode::invalid_relabel_batch on collision or reorder.
LabelMap apply_relabels(LabelMap map, const std::vector<RelabelOp>& ops);

/// Count stats for one insertion's op list.
struct OpCounts {
  std::uint64_t singles = 0;
  std::uint64_t bulks = 0;
  std::uint64_t max_bulk_size = 0;
};
OpCounts count_ops(const std::vector<RelabelOp>& ops, const LabelMap& pre);

/// count_ops, but applies the ops to `map` in the same pass instead of
/// working on a copy. Bulk coverage is measured just before each op lands.
OpCounts count_and_apply(const std::vector<RelabelOp>& ops, LabelMap& map);

}  // namespace fmdraw
