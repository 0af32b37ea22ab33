#pragma once

#include <json.hpp>

#include "covlat/algebra.hpp"
#include "covlat/pipeline.hpp"

namespace covlat {

inline nlohmann::json to_json(const DimensionReport& r) {
    return {
        {"n", r.n},
        {"d", r.d},
        {"rank_B", r.rank_B},
        {"rank_B_trunc", r.rank_B_trunc},
        {"lattice_rank", r.lattice_rank},
        {"dim", r.dim},
        {"theorem_holds", r.theorem_holds},
        {"cm", r.cm},
        {"column_identity", r.column_identity},
        {"rank_B_mod2", r.rank_B_mod2},
        {"rank_B_mod3", r.rank_B_mod3},
    };
}

inline nlohmann::json to_json(const InstanceOutcome& o) {
    nlohmann::json j = {
        {"n", o.n},
        {"lattice", o.lattice_text},
        {"passed", o.passed()},
        {"full", o.full},
        {"growth_checked", o.growth_checked},
        {"growth_inconclusive", o.growth_inconclusive},
        {"hall_checked", o.hall_checked},
        {"failures", o.failures},
    };
    if (o.report) j["report"] = to_json(*o.report);
    return j;
}

}  // namespace covlat
