#include "ltseq/oracle.hpp"

#include <algorithm>
#include <random>

namespace ltseq {

namespace {

// tau-closure by plain search; kept local so the oracle does not share the
// subset-construction code path it is checking.
std::vector<StateId> closure(const Lts& l, std::vector<StateId> seed) {
    std::vector<bool> in(l.num_states(), false);
    for (StateId s : seed) in[s] = true;
    for (size_t i = 0; i < seed.size(); ++i)
        for (const auto& [a, t] : l.succ(seed[i]))
            if (a.is_tau() && !in[t]) { in[t] = true; seed.push_back(t); }
    std::sort(seed.begin(), seed.end());
    return seed;
}

}  // namespace

bool BoundedSemantics::has(ComponentId c, const Trace& t) const {
    switch (c) {
        case ComponentId::TR: return tr.count(t) > 0;
        case ComponentId::DL: return dl.count(t) > 0;
        case ComponentId::DIV: return div.count(t) > 0;
        case ComponentId::MIND: return mind.count(t) > 0;
        case ComponentId::EXTT:
        case ComponentId::CDIV: return extt.count(t) > 0;
        case ComponentId::ANT: return ant.count(t) > 0;
        default: throw LtsError("not a boolean component");
    }
}

RefusalAntichain BoundedSemantics::family(ComponentId c, const Trace& t) const {
    const std::map<Trace, RefusalAntichain>* m = nullptr;
    switch (c) {
        case ComponentId::SF: m = &sf; break;
        case ComponentId::NF: m = &nf; break;
        case ComponentId::SNF: m = &snf; break;
        case ComponentId::ANF: m = &anf; break;
        case ComponentId::SANF: m = &sanf; break;
        case ComponentId::CFAIL: {
            if (extt.count(t)) {
                RefusalAntichain full;
                RefusalAntichain::Set sigma;
                for (uint32_t i = 0; i < alphabet.size(); ++i) sigma.push_back(i);
                full.insert(std::move(sigma));
                return full;
            }
            m = &sf;
            break;
        }
        default: throw LtsError("not a failure component");
    }
    auto it = m->find(t);
    return it == m->end() ? RefusalAntichain::none() : it->second;
}

BoundedSemantics enumerate_bounded(const Lts& l, int k) {
    BoundedSemantics out;
    out.depth = k;
    out.alphabet = l.alphabet();

    // Walk all end-state sets for traces of length <= k+1; record the
    // components straight from their definitions. Divergence data one level
    // past k makes the boundary transforms below exact.
    std::map<Trace, std::vector<StateId>> level;
    level.emplace(Trace{}, closure(l, {l.init()}));
    std::set<Trace> div_deep;

    for (int len = 0; len <= k + 1; ++len) {
        std::map<Trace, std::vector<StateId>> next;
        for (const auto& [trace, ends] : level) {
            bool within = len <= k;
            if (within) out.tr.insert(trace);
            bool diverges = false;
            RefusalAntichain refusals;
            bool deadlocks = false;
            for (StateId s : ends) {
                StateClass c = l.classify(s);
                if (c.divergent) diverges = true;
                if (c.deadlock) deadlocks = true;
                if (c.stable && within) {
                    RefusalAntichain::Set refusal;
                    for (uint32_t ai = 0; ai < out.alphabet.size(); ++ai) {
                        bool offered = false;
                        for (const auto& [a, t] : l.succ(s))
                            if (a == out.alphabet[ai]) { offered = true; break; }
                        if (!offered) refusal.push_back(ai);
                    }
                    refusals.insert(std::move(refusal));
                }
            }
            if (diverges) div_deep.insert(trace);
            if (within) {
                if (diverges) out.div.insert(trace);
                if (deadlocks) out.dl.insert(trace);
                if (!refusals.empty()) out.sf.emplace(trace, std::move(refusals));
            }
            if (len == k + 1) continue;
            for (const auto& a : out.alphabet) {
                std::vector<StateId> moved;
                for (StateId s : ends)
                    for (const auto& [x, t] : l.succ(s))
                        if (x == a) moved.push_back(t);
                if (moved.empty()) continue;
                std::sort(moved.begin(), moved.end());
                moved.erase(std::unique(moved.begin(), moved.end()), moved.end());
                Trace ext = trace;
                ext.push_back(a);
                next.emplace(std::move(ext), closure(l, std::move(moved)));
            }
        }
        level = std::move(next);
    }

    // minD within k+1, then the derived trace sets within k.
    std::set<Trace> mind_deep;
    for (const auto& t : div_deep) {
        bool minimal = true;
        for (size_t i = 0; i < t.size() && minimal; ++i)
            if (div_deep.count(Trace(t.begin(), t.begin() + i))) minimal = false;
        if (minimal) mind_deep.insert(t);
    }
    for (const auto& t : mind_deep)
        if (static_cast<int>(t.size()) <= k) out.mind.insert(t);
    for (const auto& t : out.tr) {
        bool ext = false;
        for (size_t i = 0; i <= t.size() && !ext; ++i)
            if (out.mind.count(Trace(t.begin(), t.begin() + i))) ext = true;
        if (ext)
            out.extt.insert(t);
        else
            out.ant.insert(t);
    }

    // Failure transforms by their defining formulas.
    for (const auto& [trace, family] : out.sf) {
        if (!out.div.count(trace)) {
            out.nf.emplace(trace, family);
            RefusalAntichain::Set div_next;
            for (uint32_t ai = 0; ai < out.alphabet.size(); ++ai) {
                Trace ext = trace;
                ext.push_back(out.alphabet[ai]);
                if (div_deep.count(ext)) div_next.push_back(ai);
            }
            RefusalAntichain strong = family.subtract(div_next);
            if (!strong.empty()) out.snf.emplace(trace, std::move(strong));
        }
        if (!out.extt.count(trace)) {
            out.anf.emplace(trace, family);
            RefusalAntichain::Set mind_next;
            for (uint32_t ai = 0; ai < out.alphabet.size(); ++ai) {
                Trace ext = trace;
                ext.push_back(out.alphabet[ai]);
                if (mind_deep.count(ext)) mind_next.push_back(ai);
            }
            RefusalAntichain strong = family.subtract(mind_next);
            if (!strong.empty()) out.sanf.emplace(trace, std::move(strong));
        }
    }
    return out;
}

namespace {

const std::vector<ComponentId>& all_components() {
    static const std::vector<ComponentId> cs = {
        ComponentId::TR,  ComponentId::DL,  ComponentId::DIV, ComponentId::MIND,
        ComponentId::EXTT, ComponentId::ANT, ComponentId::SF,  ComponentId::NF,
        ComponentId::SNF, ComponentId::ANF, ComponentId::SANF,
    };
    return cs;
}

std::string show_family(const RefusalAntichain& f, const std::vector<Action>& alphabet) {
    std::vector<std::string> tokens;
    for (const auto& a : alphabet) tokens.push_back(a.token());
    return show_antichain(f, tokens);
}

}  // namespace

CrosscheckReport crosscheck_against(const NormalForm& nf, const Lts& l, int k) {
    CrosscheckReport report;
    BoundedSemantics bs = enumerate_bounded(l, k);
    auto table = observation_table(all_components(), nf);

    // Walk every oracle trace through the deterministic automaton.
    struct Item { Trace trace; std::optional<uint32_t> state; };
    std::vector<Item> queue{{Trace{}, nf.empty() ? std::optional<uint32_t>() : nf.initial}};
    for (size_t i = 0; i < queue.size(); ++i) {
        Trace trace = queue[i].trace;
        auto state = queue[i].state;
        ++report.traces_checked;

        bool in_tr = bs.tr.count(trace) > 0;
        if (in_tr != state.has_value()) {
            report.pass = false;
            report.mismatch = {trace, ComponentId::TR, state ? "present" : "absent",
                               in_tr ? "present" : "absent"};
            return report;
        }
        if (!state) continue;

        size_t view_i = 0;
        for (ComponentId c : all_components()) {
            const auto& view = table.views[view_i++];
            if (component_is_failure(c)) {
                RefusalAntichain expect = bs.family(c, trace);
                if (!(view.families[*state] == expect)) {
                    report.pass = false;
                    report.mismatch = {trace, c, show_family(view.families[*state], nf.alphabet),
                                       show_family(expect, nf.alphabet)};
                    return report;
                }
            } else {
                bool expect = bs.has(c, trace);
                if (static_cast<bool>(view.bits[*state]) != expect) {
                    report.pass = false;
                    report.mismatch = {trace, c, view.bits[*state] ? "1" : "0",
                                       expect ? "1" : "0"};
                    return report;
                }
            }
        }

        if (static_cast<int>(trace.size()) == k) continue;
        for (uint32_t ai = 0; ai < nf.alphabet.size(); ++ai) {
            Trace ext = trace;
            ext.push_back(nf.alphabet[ai]);
            auto next = nf.states[*state].next(ai);
            if (next || bs.tr.count(ext)) queue.push_back({std::move(ext), next});
        }
    }
    return report;
}

CrosscheckReport crosscheck(const Lts& l, int k) {
    return crosscheck_against(normalize(l, true), l, k);
}

Lts random_lts(const GenParams& p) {
    if (p.alphabet_size > 26) throw LtsError("at most 26 generated actions");
    if (p.tau_prob < 0 || p.tau_prob > 1 || p.density < 0)
        throw LtsError("bad generator parameters");
    std::mt19937_64 rng(p.seed * 0x9e3779b97f4a7c15ULL + 12345);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    uint32_t n = std::max<uint32_t>(1, p.states);
    LtsBuilder b;
    for (uint32_t s = 0; s < n; ++s) b.add_state("s" + std::to_string(s));
    std::vector<Action> actions;
    for (uint32_t i = 0; i < p.alphabet_size; ++i) {
        actions.emplace_back(std::string(1, static_cast<char>('a' + i)));
        b.add_action(actions.back());
    }
    for (uint32_t s = 0; s < n; ++s) {
        // Binomial out-degree with mean `density`; zero outgoing transitions
        // (a deadlock) keeps positive probability.
        uint32_t trials = std::max<uint32_t>(4, static_cast<uint32_t>(p.density * 2) + 1);
        uint32_t count = 0;
        for (uint32_t i = 0; i < trials; ++i)
            if (coin(rng) < p.density / trials) ++count;
        for (uint32_t i = 0; i < count; ++i) {
            bool tau = actions.empty() || coin(rng) < p.tau_prob;
            uint32_t target = static_cast<uint32_t>(coin(rng) * n);
            if (target >= n) target = n - 1;
            if (tau) {
                b.add_transition(s, Action::tau(), target);
            } else {
                uint32_t ai = static_cast<uint32_t>(coin(rng) * actions.size());
                if (ai >= actions.size()) ai = static_cast<uint32_t>(actions.size()) - 1;
                b.add_transition(s, actions[ai], target);
            }
        }
    }
    b.set_init(0);
    return std::move(b).build();
}

}  // namespace ltseq
