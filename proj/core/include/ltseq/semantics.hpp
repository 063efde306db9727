#pragma once

#include <string>
#include <vector>

#include "ltseq/normal_form.hpp"

namespace ltseq {

// Trace-indexed semantic components, each a view over the annotated normal
// form. Components below `SF` are boolean per trace, the rest are refusal
// families per trace.
enum class ComponentId {
    TR,    // traces
    DL,    // deadlocking traces
    DIV,   // divergence traces
    MIND,  // minimal divergence traces
    EXTT,  // finite extensions of minimal divergence traces (on traces)
    ANT,   // always-nondivergent traces
    CDIV,  // CSP divergences = extT
    SF,    // stable failures
    NF,    // nondivergent failures
    SNF,   // strongly nondivergent failures
    ANF,   // always nondivergent failures
    SANF,  // strongly always nondivergent failures
    CFAIL, // CSP failures: Sf closed chaotically over CDiv
};

bool component_is_failure(ComponentId c);
bool component_needs_history(ComponentId c);
const char* component_name(ComponentId c);

// Per-state observation of one component over a normal form.
struct ComponentView {
    ComponentId id;
    std::vector<char> bits;                   // boolean components
    std::vector<RefusalAntichain> families;   // failure components
};

// Requires nf.annotated; history-needing components require nf.with_history.
ComponentView component_view(ComponentId c, const NormalForm& nf);

// The observation of one state under a set of components, in signature order.
struct Observation {
    std::vector<char> bits;
    std::vector<RefusalAntichain> families;

    bool operator==(const Observation&) const = default;
    bool is_bottom() const;
};

struct ObservationTable {
    std::vector<ComponentId> signature;
    std::vector<ComponentView> views;

    Observation at(uint32_t state) const;
    bool bottom_at(uint32_t state) const;
};

ObservationTable observation_table(const std::vector<ComponentId>& signature,
                                   const NormalForm& nf);

// Removes the states from which no state with a non-bottom observation is
// reachable. Signatures with CFAIL or CDIV first cut everything strictly
// after the minimal-divergence frontier (the chaotic closure makes the two
// sides constant there). May return an empty normal form.
NormalForm trim_relevant(const std::vector<ComponentId>& signature,
                         const NormalForm& nf);

// Lasso enumeration over Det(L) up to |stem| + |cycle| <= k, sanity-checking
// the finite-LTS derivations of the infinite-trace components: a lasso word
// is always-nondivergent iff every state on it is a nondivergent pre state,
// and eventually-always-nondivergent iff its cycle avoids divergent states.
// Each classification is replayed against divergence bits of the bounded
// unrolling.
struct LassoReport {
    bool pass = true;
    int lassos = 0;
    std::string counterexample;
};

LassoReport bounded_limit_check(const Lts& l, int k);

}  // namespace ltseq
