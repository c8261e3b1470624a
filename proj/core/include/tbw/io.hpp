// JSON serialization for every report and datum the CLI surfaces, plus the
// plain-text chain renderer. Keys keep insertion order and all numbers are
// exact (wide values fall back to strings), so reports are byte-stable.
#pragma once

#include "tbw/realize.hpp"

#include <nlohmann/json.hpp>

namespace tbw {

using json = nlohmann::ordered_json;

json to_json(const Rat& q);
Rat rat_from_json(const json& j);
json to_json(const IVec& v);
json to_json(const QVec& v);
IVec ivec_from_json(const json& j);
QVec qvec_from_json(const json& j);

json to_json(const Polytope& p);
Polytope polytope_from_json(const json& j);

json to_json(const Fan& f);
json to_json(const GradedCountTable& t);
json to_json(const GordanCertificate& c);
json to_json(const ActionAnalysis& a);
json to_json(const QuotientChain& c);
json to_json(const SectionIsoReport& r);
json to_json(const ExtractedMdp& m);
json to_json(const ChamberReport& r);
json to_json(const PrunedPair& p);
PrunedPair pruned_from_json(const json& j);
json to_json(const PruningTheoremReport& r);
json to_json(const MdpInput& m);
MdpInput mdp_from_json(const json& j);
json to_json(const MdpValidation& v);
json to_json(const RealizationReport& r);
json to_json(const CompareReport& r);

std::string wall_tag_name(WallTag t);

// GX(0,1) ⇢ GX(1,2) ⇢ ... with wall tags.
std::string render_chain_text(const QuotientChain& c);

} // namespace tbw
