#include "fmdraw/stream.hpp"

#include <sstream>

namespace fmdraw {

std::string mode_name(StreamMode m) {
  switch (m) {
    case StreamMode::tree: return "tree";
    case StreamMode::treemap: return "treemap";
    case StreamMode::outerplanar: return "outerplanar";
  }
  return "?";
}

StreamMode mode_from_name(const std::string& name) {
  if (name == "tree") return StreamMode::tree;
  if (name == "treemap") return StreamMode::treemap;
  if (name == "outerplanar") return StreamMode::outerplanar;
  throw Error(ErrorCode::parse_error, "unknown mode '" + name + "'");
}

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& why) {
  throw Error(ErrorCode::parse_error,
              "line " + std::to_string(line) + ": " + why);
}

std::size_t parse_index(const std::string& tok, std::size_t line,
                        const char* what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    fail(line, std::string(what) + " must be a non-negative integer, got '" +
                   tok + "'");
  return std::stoull(tok);
}

}  // namespace

Stream parse_stream(const std::string& text) {
  Stream out;
  bool have_mode = false;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;

  while (std::getline(in, raw)) {
    ++lineno;
    if (auto cut = raw.find('#'); cut != std::string::npos) raw.erase(cut);
    std::istringstream line(raw);
    std::vector<std::string> tok;
    for (std::string t; line >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (tok[0] == "mode") {
      if (have_mode) fail(lineno, "duplicate mode line");
      if (tok.size() != 2) fail(lineno, "mode needs exactly one argument");
      try {
        out.mode = mode_from_name(tok[1]);
      } catch (const Error& e) {
        fail(lineno, e.what());
      }
      have_mode = true;
      continue;
    }

    if (tok[0] == "edge") {
      if (tok.size() != 5 && tok.size() != 8)
        fail(lineno, "edge needs <u> <v> <pos_u> <pos_v> [hint <ref> <side>]"
                     " (missing fields)");
      if (!have_mode) fail(lineno, "edge before mode line");
      StreamEvent ev;
      ev.u = tok[1];
      ev.v = tok[2];
      ev.pos_u = parse_index(tok[3], lineno, "pos_u");
      ev.pos_v = parse_index(tok[4], lineno, "pos_v");
      if (tok.size() == 8) {
        if (tok[5] != "hint") fail(lineno, "expected 'hint', got '" + tok[5] +
                                               "'");
        if (out.mode != StreamMode::outerplanar)
          fail(lineno, "hint is only valid in outerplanar mode");
        SideHint h;
        h.ref = tok[6] == "-" ? "" : tok[6];
        if (tok[7] == "left") h.left = true;
        else if (tok[7] == "right") h.left = false;
        else fail(lineno, "hint side must be left or right, got '" + tok[7] +
                              "'");
        ev.hint = h;
      }
      out.events.push_back(std::move(ev));
      continue;
    }

    fail(lineno, "unknown directive '" + tok[0] + "'");
  }
  if (!have_mode) fail(lineno ? lineno : 1, "missing mode line");
  return out;
}

std::string format_stream(const Stream& s) {
  std::ostringstream out;
  out << "mode " << mode_name(s.mode) << "\n";
  for (const auto& ev : s.events) {
    out << "edge " << ev.u << " " << ev.v << " " << ev.pos_u << " "
        << ev.pos_v;
    if (ev.hint)
      out << " hint " << (ev.hint->ref.empty() ? "-" : ev.hint->ref) << " "
          << (ev.hint->left ? "left" : "right");
    out << "\n";
  }
  return out.str();
}

}  // namespace fmdraw
