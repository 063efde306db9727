#pragma once

#include <string>
#include <string_view>

#include "ltseq/lts.hpp"

namespace ltseq {

// Text format (extension .lts, utf-8, '#' starts a comment):
//
//   alphabet: a b c
//   init: s0
//   trans:
//   s0 a s1
//   s1 tau s0
//
// An optional "states:" line after "alphabet:" declares states that occur
// in no transition. Blank lines are ignored; the trans section may be empty.
Lts parse_lts(std::string_view text);

// Canonical form: states in first-visit BFS order under lexicographically
// sorted action order, transitions sorted, unreachable states appended by
// name. parse_lts(render_lts(l)) is isomorphic to l (names preserved) and
// rendering is a fixpoint after one round trip.
std::string render_lts(const Lts& l);

Lts load_lts_file(const std::string& path);

}  // namespace ltseq
