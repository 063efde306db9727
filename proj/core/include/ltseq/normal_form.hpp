#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ltseq/lts.hpp"
#include "ltseq/refusal.hpp"

namespace ltseq {

// History tag of a normal-form state. The two-valued pre/post discipline is
// recovered as pre vs {mind, post}; the middle value marks the states reached
// exactly by the minimal divergence traces, which keeps every per-trace
// observation a function of the state. A subset state can occur with at most
// two of the three tags (pre excludes divergence, mind requires it), so the
// refinement at most doubles the automaton.
enum class Hist : uint8_t { none, pre, mind, post };

struct NfState {
    std::vector<StateId> members;  // tau-closed subset of the source LTS, sorted
    bool divergent = false;
    RefusalAntichain refusals;     // maximal refusals of the stable members
    Hist hist = Hist::none;
    // Deterministic successor function, sorted by alphabet index.
    std::vector<std::pair<uint32_t, uint32_t>> succ;

    std::optional<uint32_t> next(uint32_t action_index) const;
};

// Deterministic tau-free automaton from the subset construction over
// =>-reachability, states numbered in BFS order under sorted actions.
// May be empty (no states) only as the result of trimming.
class NormalForm {
public:
    std::vector<Action> alphabet;  // sorted
    std::vector<NfState> states;
    uint32_t initial = 0;
    bool annotated = false;
    bool with_history = false;

    bool empty() const { return states.empty(); }
    std::optional<uint32_t> action_index(const Action& a) const;
    const std::string& action_token(uint32_t i) const { return alphabet[i].token(); }
};

// Det(L): structure only, no annotations.
NormalForm determinize(const Lts& l);

// Det(L) with per-state divergence and refusal annotations, optionally
// refined with the divergence-history tag.
NormalForm normalize(const Lts& l, bool with_history);

// The normal form viewed as an LTS (deterministic, tau-free); states named
// d0, d1, ...
Lts as_lts(const NormalForm& nf);

// Una(L) = L || Det(L); bisimilar to L, and every state is reached either
// only by divergence traces or only by nondivergent ones.
Lts una(const Lts& l);

// PD(L): Una(L) refined with the pre/post history component; bisimilar to L,
// no transition from a post state to a pre state.
Lts pd(const Lts& l);

// Quotient by the coarsest automaton congruence refining equality of the
// given per-state observation keys; canonical BFS numbering.
NormalForm minimize_normal_form(const NormalForm& nf,
                                const std::function<std::string(uint32_t)>& obs_key);

std::string nf_to_dot(const NormalForm& nf);
std::string nf_to_json(const NormalForm& nf, const Lts* source = nullptr);

}  // namespace ltseq
