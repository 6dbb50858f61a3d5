#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "homlat/bounds.hpp"

namespace homlat {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* instance_schema_version = "1";

// One parsed instance file: the Hom-module instance itself plus the optional
// curve-level bound inputs. `genus_y` only drives the Hurwitz/Riemann-Roch
// bound and is kept outside CurveBoundData.
struct ParsedInstance {
    HomInstance instance;
    std::optional<CurveBoundData> curve;
    std::optional<unsigned long> genus_y;
    bool genus_x_defaulted = false;  // no curve_data: genus_x falls back to rank_O
};

// Strict parsing: unknown keys, wrong JSON types, floats, and unknown schema
// versions are parse errors (exit 1); domain violations surface as
// invariant/compute errors from the constructors (exit 2/3).
ParsedInstance parse_instance_text(const std::string& text);
ParsedInstance parse_instance_json(const ordered_json& doc);

// Canonical serialization; parse(serialize(parse(text))) is the identity.
ordered_json instance_to_json(const ParsedInstance& parsed);

Rat parse_rational(const std::string& text);

// FNV-1a 64-bit over the raw bytes, 16 hex digits.
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace homlat
