#pragma once

#include <set>

#include "ltseq/lts.hpp"

namespace ltseq {

struct TesterSpec {
    Trace trace;                 // b1 ... bn
    std::set<Action> refusal;    // a1 ... am
    std::set<Action> alphabet;   // ambient alphabet, superset of both
};

// Stable-failure tester: a chain of tau-looped states linked by the trace
// actions, a final tau-step into a plain state offering exactly the refusal
// actions into a tau-looped sink. For every L with Sigma(L) = spec.alphabet:
// (trace, refusal) in Sf(L) iff trace in Dl(L || tester_sf(spec)).
Lts tester_sf(const TesterSpec& spec);

// Trace tester: the trace chain with a tau-self-loop on every state and a
// loop per action of `loops` on the final state. Alphabet: `alphabet`
// together with the trace and loop actions.
Lts tester_tr(const Trace& trace, const std::set<Action>& loops,
              const std::set<Action>& alphabet);

// Trace-then-loop tester: the trace chain, a b-transition, then a
// tau-self-looped (divergent) final state. b must lie outside Sigma(L).
// Contracts: trace in Tr(L) iff trace.b in Div(L || T), and
// trace in anT(L) iff trace.b in minD(L || T).
Lts tester_trace_loop(const Trace& trace, const Action& b,
                      const std::set<Action>& alphabet);

}  // namespace ltseq
