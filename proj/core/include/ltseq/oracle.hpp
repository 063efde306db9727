#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "ltseq/lts.hpp"
#include "ltseq/refusal.hpp"
#include "ltseq/semantics.hpp"

namespace ltseq {

// Bounded semantics computed by explicit path enumeration straight from the
// definitions. Deliberately independent of the normal-form and view code:
// it shares only the LTS primitives, so it can serve as the oracle for them.
struct BoundedSemantics {
    int depth = 0;
    std::vector<Action> alphabet;

    std::set<Trace> tr, dl, div, mind, extt, ant;
    // Per trace, the antichain of maximal refusals (alphabet indices).
    std::map<Trace, RefusalAntichain> sf, nf, snf, anf, sanf;

    bool has(ComponentId c, const Trace& t) const;
    RefusalAntichain family(ComponentId c, const Trace& t) const;
};

// All components for traces of length <= k. Divergence information is
// internally enumerated one level deeper so the snF/sanF transforms are
// exact at the boundary.
BoundedSemantics enumerate_bounded(const Lts& l, int k);

struct CrosscheckMismatch {
    Trace trace;
    ComponentId component;
    std::string symbolic;  // value from the normal-form view
    std::string oracle;    // value from the enumeration
};

struct CrosscheckReport {
    bool pass = true;
    int traces_checked = 0;
    std::optional<CrosscheckMismatch> mismatch;
};

// Compares every component view over normalize(l) against the oracle on all
// traces of length <= k.
CrosscheckReport crosscheck(const Lts& l, int k);

// Exposed so tests can fault-inject a corrupted normal form.
CrosscheckReport crosscheck_against(const NormalForm& nf, const Lts& l, int k);

struct GenParams {
    uint32_t states = 4;
    uint32_t alphabet_size = 2;
    double density = 1.5;   // expected outgoing transitions per state
    double tau_prob = 0.3;  // probability that a transition is invisible
    uint64_t seed = 0;
};

// Deterministic in the seed; always valid. Unreachable states, deadlocks,
// tau-cycles and nondeterministic branches all occur with positive
// probability.
Lts random_lts(const GenParams& p);

}  // namespace ltseq
