#pragma once

#include <vector>

#include "ltseq/lts.hpp"

namespace ltseq {

struct BisimResult {
    bool equal = false;
    // Witness relation on reachable states when equal: pairs of state names.
    std::vector<std::pair<std::string, std::string>> relation;
};

// Strong bisimilarity: tau is treated as an ordinary label and the alphabets
// must coincide. Partition refinement on the disjoint union.
BisimResult bisimilar(const Lts& l1, const Lts& l2);

// Quotient of reachable_part(l) by the coarsest strong bisimulation.
// States are renamed q0, q1, ... in BFS order.
Lts bisim_quotient(const Lts& l);

}  // namespace ltseq
