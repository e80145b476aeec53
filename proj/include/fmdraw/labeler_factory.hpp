#pragma once

#include <memory>
#include <string>

#include "fmdraw/order_core.hpp"

namespace fmdraw {

enum class Strategy {
  oracle,
  tag,
  packed,
  sqrt_chunks,
  twolevel,
  bulk_packed,
};

constexpr const char* kAllStrategyNames[] = {"oracle",     "tag",
                                             "packed",     "sqrt",
                                             "twolevel",   "bulkpacked"};

Strategy strategy_from_name(const std::string& name);
std::string strategy_name(Strategy s);

struct LabelerConfig {
  int tag_exponent = 2;  // polynomial exponent for the tag range
};

std::unique_ptr<Labeler> make_labeler(Strategy s,
                                      const LabelerConfig& cfg = {});

}  // namespace fmdraw
