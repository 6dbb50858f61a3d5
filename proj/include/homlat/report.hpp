#pragma once

#include "homlat/instance.hpp"

namespace homlat {

// Deterministic report JSON: fixed key order, integers and rationals rendered
// as decimal strings, log intervals as directed decimal strings with an
// explicit precision tag. Identical input bytes give identical report bytes.
ordered_json build_analyze_report(const ParsedInstance& parsed, const std::string& input_hash,
                                  const IntervalContext& ctx);
ordered_json build_bound_report(const ParsedInstance& parsed, const std::string& input_hash,
                                const IntervalContext& ctx);
ordered_json build_oracle_report(const ParsedInstance& parsed, const std::string& input_hash,
                                 const std::optional<Int>& box_override);

ordered_json interval_to_json(const RealInterval& x, const IntervalContext& ctx);
ordered_json degree_to_json(const DegreeResult& degree);
ordered_json checks_to_json(const std::vector<CheckResult>& checks);

std::string render_report(const ordered_json& doc, bool pretty);

// True when every comparison row in an oracle report matched.
bool oracle_report_matches(const ordered_json& doc);

}  // namespace homlat
