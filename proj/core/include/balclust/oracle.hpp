#pragma once

#include <cstdint>

#include "balclust/binb.hpp"
#include "balclust/graph.hpp"

namespace balclust {

// Caps read from BALCLUST_ORACLE_MAX_N (default 12) and BALCLUST_ORACLE_MAX_MAPS (default 10^7).
struct OracleCaps {
    int max_n = 12;
    std::uint64_t max_maps = 10'000'000;
};

OracleCaps oracle_caps();

// Whether oracle_solve accepts an instance of this size under `caps`.
bool oracle_fits(const Instance& inst, const OracleCaps& caps = oracle_caps());

// Exhaustive search over edit sets by size, then lexicographically over the
// variant's pair universe. The witness is a minimum edit set.
// Throws std::invalid_argument above the cap (hard limit n <= 64).
Answer oracle_solve(const Instance& inst, const OracleCaps& caps = oracle_caps());

// Enumerates all t^s ball maps.
BinBResult oracle_binb(const BinBInstance& inst, const OracleCaps& caps = oracle_caps());

}  // namespace balclust
