#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fmdraw/outerplanar_draw.hpp"

namespace fmdraw {

enum class StreamMode { tree, treemap, outerplanar };

std::string mode_name(StreamMode m);
StreamMode mode_from_name(const std::string& name);

/// One streamed edge. pos_v and hint only matter in outerplanar mode.
struct StreamEvent {
  std::string u;
  std::string v;
  std::size_t pos_u = 0;
  std::size_t pos_v = 0;
  std::optional<SideHint> hint;
};

struct Stream {
  StreamMode mode = StreamMode::tree;
  std::vector<StreamEvent> events;
};

/// Line-oriented text format:
///
///   # comment
///   mode <tree|treemap|outerplanar>
///   edge <u> <v> <pos_u> <pos_v> [hint <ref> <left|right>]
///
/// A hint ref of "-" means "no reference vertex". Throws
/// ErrorCode::parse_error with "line N: reason" on malformed input.
Stream parse_stream(const std::string& text);

std::string format_stream(const Stream& s);

}  // namespace fmdraw
