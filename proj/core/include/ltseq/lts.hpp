#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ltseq/action.hpp"

namespace ltseq {

using StateId = uint32_t;

struct Transition {
    StateId src;
    Action label;  // may be tau
    StateId dst;

    auto operator<=>(const Transition&) const = default;
};

struct StateClass {
    bool stable = false;     // no outgoing tau
    bool deadlock = false;   // no outgoing transition at all
    bool divergent = false;  // reaches a tau-cycle via tau-steps
};

// A finite labelled transition system (S, Sigma, Delta, s^). Immutable after
// construction; all mutation happens through LtsBuilder. The alphabet may
// contain actions that label no transition.
class Lts {
public:
    size_t num_states() const { return names_.size(); }
    StateId init() const { return init_; }
    const std::string& state_name(StateId s) const { return names_[s]; }
    const std::vector<Action>& alphabet() const { return alphabet_; }  // sorted
    bool in_alphabet(const Action& a) const;
    std::optional<StateId> state_by_name(const std::string& name) const;

    // Outgoing transitions of s, sorted by (label, target name).
    const std::vector<std::pair<Action, StateId>>& succ(StateId s) const {
        return succ_[s];
    }
    size_t num_transitions() const;

    StateClass classify(StateId s) const;
    const std::vector<StateClass>& classes() const { return classes_; }

private:
    friend class LtsBuilder;
    std::vector<std::string> names_;
    std::vector<Action> alphabet_;
    std::vector<std::vector<std::pair<Action, StateId>>> succ_;
    StateId init_ = 0;
    std::vector<StateClass> classes_;  // computed once at build time
};

class LtsBuilder {
public:
    StateId add_state(const std::string& name);  // idempotent per name
    void add_action(const Action& a);
    void add_transition(StateId src, const Action& label, StateId dst);
    void set_init(StateId s) { init_ = s; }
    bool has_state(const std::string& name) const;
    size_t num_states() const { return names_.size(); }

    // Validates and freezes: tau not in alphabet, labels declared,
    // endpoints and initial state in range.
    Lts build() &&;

private:
    std::vector<std::string> names_;
    std::vector<Action> alphabet_;
    std::vector<Transition> transitions_;
    std::optional<StateId> init_;
};

// Sub-LTS induced by the states reachable from the initial state; the
// alphabet is kept as is.
Lts reachable_part(const Lts& l);

StateClass classify_state(const Lts& l, StateId s);
StateClass classify_state(const Lts& l, const std::string& name);

// A name of the form `base`, `base1`, `base2`, ... not used by l.
std::string fresh_state_name(const Lts& l, const std::string& base);

}  // namespace ltseq
