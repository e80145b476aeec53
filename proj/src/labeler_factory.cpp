#include "fmdraw/labeler_factory.hpp"

#include "fmdraw/oracle_labeler.hpp"
#include "fmdraw/packed_labeler.hpp"
#include "fmdraw/sqrt_labeler.hpp"
#include "fmdraw/tag_labeler.hpp"
#include "fmdraw/twolevel_labeler.hpp"

namespace fmdraw {

Strategy strategy_from_name(const std::string& name) {
  if (name == "oracle") return Strategy::oracle;
  if (name == "tag") return Strategy::tag;
  if (name == "packed") return Strategy::packed;
  if (name == "sqrt") return Strategy::sqrt_chunks;
  if (name == "twolevel") return Strategy::twolevel;
  if (name == "bulkpacked") return Strategy::bulk_packed;
  throw Error(ErrorCode::parse_error, "unknown strategy: " + name);
}

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::oracle: return "oracle";
    case Strategy::tag: return "tag";
    case Strategy::packed: return "packed";
    case Strategy::sqrt_chunks: return "sqrt";
    case Strategy::twolevel: return "twolevel";
    case Strategy::bulk_packed: return "bulkpacked";
  }
  return "?";
}

std::unique_ptr<Labeler> make_labeler(Strategy s, const LabelerConfig& cfg) {
  switch (s) {
    case Strategy::oracle: return std::make_unique<OracleLabeler>();
    case Strategy::tag:
      return std::make_unique<TagListLabeler>(cfg.tag_exponent);
    case Strategy::packed: return std::make_unique<PackedArrayLabeler>(false);
    case Strategy::sqrt_chunks: return std::make_unique<SqrtChunkLabeler>();
    case Strategy::twolevel: return std::make_unique<TwoLevelLabeler>();
    case Strategy::bulk_packed:
      return std::make_unique<PackedArrayLabeler>(true);
  }
  throw Error(ErrorCode::parse_error, "unknown strategy");
}

}  // namespace fmdraw
