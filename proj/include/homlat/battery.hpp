#pragma once

#include <cstdint>

#include "homlat/generator.hpp"
#include "homlat/instance.hpp"

namespace homlat {

struct CheckStat {
    std::string name;
    long run = 0;
    long pass = 0;
};

struct BatterySummary {
    std::vector<CheckStat> checks;

    CheckStat& stat(const std::string& name);
    bool all_pass() const;
    ordered_json to_json() const;
    std::string to_text() const;
};

// The reproducible property battery behind `verify --random SEED COUNT`:
// the realified determinant identity, the covolume formula against the Gram
// determinant, enumeration against the exhaustive oracle, the section-5
// inequality chain, even q-values, coset sandwich bounds, and full
// certification. Single-threaded and byte-deterministic in the seed.
BatterySummary run_random_battery(std::uint64_t seed, long count, const IntervalContext& ctx);

// The same checks restricted to one parsed instance file.
BatterySummary run_file_battery(const ParsedInstance& parsed, const IntervalContext& ctx);

}  // namespace homlat
