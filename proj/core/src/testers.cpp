#include "ltseq/testers.hpp"

namespace ltseq {

Lts tester_sf(const TesterSpec& spec) {
    for (const auto& a : spec.trace)
        if (!spec.alphabet.count(a)) throw LtsError("tester trace outside alphabet");
    for (const auto& a : spec.refusal)
        if (!spec.alphabet.count(a)) throw LtsError("tester refusal outside alphabet");

    LtsBuilder b;
    for (const auto& a : spec.alphabet) b.add_action(a);

    std::vector<StateId> chain;
    for (size_t i = 0; i <= spec.trace.size(); ++i)
        chain.push_back(b.add_state("t" + std::to_string(i)));
    for (StateId s : chain) b.add_transition(s, Action::tau(), s);
    for (size_t i = 0; i < spec.trace.size(); ++i)
        b.add_transition(chain[i], spec.trace[i], chain[i + 1]);

    // The only state of the tester that can be stable.
    StateId offer = b.add_state("u");
    b.add_transition(chain.back(), Action::tau(), offer);
    if (!spec.refusal.empty()) {
        StateId sink = b.add_state("w");
        b.add_transition(sink, Action::tau(), sink);
        for (const auto& a : spec.refusal) b.add_transition(offer, a, sink);
    }
    b.set_init(chain[0]);
    return std::move(b).build();
}

Lts tester_tr(const Trace& trace, const std::set<Action>& loops,
              const std::set<Action>& alphabet) {
    LtsBuilder b;
    for (const auto& a : alphabet) b.add_action(a);
    for (const auto& a : trace) b.add_action(a);
    for (const auto& a : loops) b.add_action(a);

    std::vector<StateId> chain;
    for (size_t i = 0; i <= trace.size(); ++i)
        chain.push_back(b.add_state("t" + std::to_string(i)));
    for (StateId s : chain) b.add_transition(s, Action::tau(), s);
    for (size_t i = 0; i < trace.size(); ++i)
        b.add_transition(chain[i], trace[i], chain[i + 1]);
    for (const auto& a : loops) b.add_transition(chain.back(), a, chain.back());
    b.set_init(chain[0]);
    return std::move(b).build();
}

Lts tester_trace_loop(const Trace& trace, const Action& b_act,
                      const std::set<Action>& alphabet) {
    if (b_act.is_tau()) throw LtsError("tester loop action must be visible");
    LtsBuilder b;
    for (const auto& a : alphabet) b.add_action(a);
    b.add_action(b_act);

    std::vector<StateId> chain;
    for (size_t i = 0; i <= trace.size(); ++i)
        chain.push_back(b.add_state("t" + std::to_string(i)));
    for (size_t i = 0; i < trace.size(); ++i)
        b.add_transition(chain[i], trace[i], chain[i + 1]);
    StateId loop = b.add_state("u");
    b.add_transition(chain.back(), b_act, loop);
    b.add_transition(loop, Action::tau(), loop);
    b.set_init(chain[0]);
    return std::move(b).build();
}

}  // namespace ltseq
