#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ltseq/lts.hpp"
#include "ltseq/semantics.hpp"

namespace ltseq {

// The 20 linear-time congruences that exist for finite LTSs, ordered as in
// the catalogue. Every congruence except `dullest` preserves the alphabet;
// the signature lists the preserved trace components on top of that.
struct Congruence {
    int id;            // 1..20
    std::string name;
    std::vector<ComponentId> signature;
    bool needs_history;
};

const std::array<Congruence, 20>& catalogue();
const Congruence& congruence_by_id(int id);
std::optional<int> congruence_id_by_name(const std::string& name);

enum class WitnessKind { alphabet, trace_membership, bit, refusal };

struct Witness {
    WitnessKind kind;
    std::optional<ComponentId> component;
    Trace trace;
    std::string detail;  // human-readable; deterministic
};

struct Verdict {
    int cong;
    bool equal;
    std::optional<Witness> witness;
};

// Exact equivalence check under one congruence: alphabet short-circuit,
// then a synchronized product traversal of the trimmed, annotated (and,
// when needed, history-refined) normal forms. The witness carries the
// lexicographically least shortest mismatching trace.
Verdict equivalent(int cong_id, const Lts& l1, const Lts& l2);

std::vector<Verdict> verdict_table(const Lts& l1, const Lts& l2);

// Signature-derivability order, precomputed from the component-derivation
// closure; validated by the fuzz and strictness suites.
bool implies(int c1, int c2);
// Transitive reduction of `implies`, as (weaker, stronger) pairs.
std::vector<std::pair<int, int>> hasse_edges();

// Weakest congruences distinguishing the pair / strongest equating it.
std::vector<int> minimal_distinguishing(const Lts& l1, const Lts& l2);
std::vector<int> maximal_equating(const Lts& l1, const Lts& l2);

// One stored strictness witness per Hasse edge: a pair equated by the
// weaker congruence and distinguished by the stronger one.
struct HasseWitness {
    int weaker;
    int stronger;
    std::string label;
    Lts a;
    Lts b;
};
const std::vector<HasseWitness>& hasse_witnesses();

// The CSP failures-divergences cross-check: equality of the
// (Sigma, CFail, CDiv) views, which must coincide with csp-fdi.
Verdict equivalent_csp_cfail(const Lts& l1, const Lts& l2);

// The observation of one normal-form state under a congruence's signature.
// The normal form must carry the annotations the signature needs.
Observation observation_vector(int cong_id, const NormalForm& nf, uint32_t state);

}  // namespace ltseq
