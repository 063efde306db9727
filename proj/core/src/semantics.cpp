#include "ltseq/semantics.hpp"

#include <algorithm>

namespace ltseq {

bool component_is_failure(ComponentId c) {
    switch (c) {
        case ComponentId::SF:
        case ComponentId::NF:
        case ComponentId::SNF:
        case ComponentId::ANF:
        case ComponentId::SANF:
        case ComponentId::CFAIL:
            return true;
        default:
            return false;
    }
}

bool component_needs_history(ComponentId c) {
    switch (c) {
        case ComponentId::MIND:
        case ComponentId::EXTT:
        case ComponentId::ANT:
        case ComponentId::ANF:
        case ComponentId::SANF:
        case ComponentId::CDIV:
        case ComponentId::CFAIL:
            return true;
        default:
            return false;
    }
}

const char* component_name(ComponentId c) {
    switch (c) {
        case ComponentId::TR: return "Tr";
        case ComponentId::DL: return "Dl";
        case ComponentId::DIV: return "Div";
        case ComponentId::MIND: return "minD";
        case ComponentId::EXTT: return "extT";
        case ComponentId::ANT: return "anT";
        case ComponentId::CDIV: return "CDiv";
        case ComponentId::SF: return "Sf";
        case ComponentId::NF: return "nF";
        case ComponentId::SNF: return "snF";
        case ComponentId::ANF: return "anF";
        case ComponentId::SANF: return "sanF";
        case ComponentId::CFAIL: return "CFail";
    }
    return "?";
}

namespace {

// Alphabet indices of actions completing a divergence trace from q.
RefusalAntichain::Set divergence_completers(const NormalForm& nf, uint32_t q) {
    RefusalAntichain::Set out;
    for (const auto& [ai, t] : nf.states[q].succ)
        if (nf.states[t].divergent) out.push_back(ai);
    return out;
}

RefusalAntichain full_family(size_t alphabet_size) {
    RefusalAntichain r;
    RefusalAntichain::Set sigma(alphabet_size);
    for (size_t i = 0; i < alphabet_size; ++i) sigma[i] = static_cast<uint32_t>(i);
    r.insert(std::move(sigma));
    return r;
}

}  // namespace

ComponentView component_view(ComponentId c, const NormalForm& nf) {
    if (!nf.annotated && c != ComponentId::TR)
        throw LtsError("component view requires an annotated normal form");
    if (component_needs_history(c) && !nf.with_history)
        throw LtsError(std::string("component ") + component_name(c) +
                       " requires a history-refined normal form");

    ComponentView v;
    v.id = c;
    size_t n = nf.states.size();
    if (component_is_failure(c))
        v.families.resize(n);
    else
        v.bits.assign(n, 0);

    for (uint32_t q = 0; q < n; ++q) {
        const NfState& st = nf.states[q];
        bool pre = st.hist == Hist::pre;
        switch (c) {
            case ComponentId::TR:
                v.bits[q] = 1;
                break;
            case ComponentId::DL:
                v.bits[q] = st.refusals.has_full(nf.alphabet.size());
                break;
            case ComponentId::DIV:
                v.bits[q] = st.divergent;
                break;
            case ComponentId::MIND:
                v.bits[q] = st.hist == Hist::mind;
                break;
            case ComponentId::EXTT:
            case ComponentId::CDIV:
                v.bits[q] = !pre;
                break;
            case ComponentId::ANT:
                v.bits[q] = pre;
                break;
            case ComponentId::SF:
                v.families[q] = st.refusals;
                break;
            case ComponentId::NF:
                v.families[q] = st.divergent ? RefusalAntichain::none() : st.refusals;
                break;
            case ComponentId::SNF:
                v.families[q] = st.divergent
                                    ? RefusalAntichain::none()
                                    : st.refusals.subtract(divergence_completers(nf, q));
                break;
            case ComponentId::ANF:
                v.families[q] = pre ? st.refusals : RefusalAntichain::none();
                break;
            case ComponentId::SANF:
                // At pre states an extension diverges iff it completes a
                // minimal divergence trace.
                v.families[q] = pre ? st.refusals.subtract(divergence_completers(nf, q))
                                    : RefusalAntichain::none();
                break;
            case ComponentId::CFAIL:
                v.families[q] = pre ? st.refusals : full_family(nf.alphabet.size());
                break;
        }
    }
    return v;
}

bool Observation::is_bottom() const {
    for (char b : bits)
        if (b) return false;
    for (const auto& f : families)
        if (!f.empty()) return false;
    return true;
}

Observation ObservationTable::at(uint32_t state) const {
    Observation o;
    for (const auto& v : views) {
        if (component_is_failure(v.id))
            o.families.push_back(v.families[state]);
        else
            o.bits.push_back(v.bits[state]);
    }
    return o;
}

bool ObservationTable::bottom_at(uint32_t state) const {
    for (const auto& v : views) {
        if (component_is_failure(v.id)) {
            if (!v.families[state].empty()) return false;
        } else {
            if (v.bits[state]) return false;
        }
    }
    return true;
}

ObservationTable observation_table(const std::vector<ComponentId>& signature,
                                   const NormalForm& nf) {
    ObservationTable t;
    t.signature = signature;
    for (ComponentId c : signature) t.views.push_back(component_view(c, nf));
    return t;
}

NormalForm trim_relevant(const std::vector<ComponentId>& signature,
                         const NormalForm& nf) {
    if (nf.empty()) return nf;

    bool chaotic = std::any_of(signature.begin(), signature.end(), [](ComponentId c) {
        return c == ComponentId::CFAIL || c == ComponentId::CDIV;
    });

    NormalForm base = nf;
    if (chaotic) {
        // Everything strictly after a minimal-divergence state carries only
        // the chaotic constants; cut it before the relevance pass.
        for (auto& st : base.states)
            if (st.hist == Hist::mind) st.succ.clear();
    }

    auto table = observation_table(signature, base);
    size_t n = base.states.size();

    // Keep exactly the states from which a non-bottom state is reachable.
    std::vector<std::vector<uint32_t>> preds(n);
    for (uint32_t q = 0; q < n; ++q)
        for (const auto& [ai, t] : base.states[q].succ) preds[t].push_back(q);
    std::vector<char> keep(n, 0);
    std::vector<uint32_t> queue;
    for (uint32_t q = 0; q < n; ++q)
        if (!table.bottom_at(q)) { keep[q] = 1; queue.push_back(q); }
    for (size_t i = 0; i < queue.size(); ++i)
        for (uint32_t p : preds[queue[i]])
            if (!keep[p]) { keep[p] = 1; queue.push_back(p); }

    // Forward-reachable kept states, renumbered in BFS order.
    NormalForm out;
    out.alphabet = base.alphabet;
    out.annotated = base.annotated;
    out.with_history = base.with_history;
    if (!keep[base.initial]) return out;  // everything is observation-free

    std::vector<int> number(n, -1);
    std::vector<uint32_t> order{base.initial};
    number[base.initial] = 0;
    for (size_t i = 0; i < order.size(); ++i)
        for (const auto& [ai, t] : base.states[order[i]].succ)
            if (keep[t] && number[t] < 0) {
                number[t] = static_cast<int>(order.size());
                order.push_back(t);
            }
    out.initial = 0;
    for (uint32_t q : order) {
        NfState st = base.states[q];
        std::vector<std::pair<uint32_t, uint32_t>> succ;
        for (const auto& [ai, t] : st.succ)
            if (keep[t] && number[t] >= 0)
                succ.emplace_back(ai, static_cast<uint32_t>(number[t]));
        st.succ = std::move(succ);
        out.states.push_back(std::move(st));
    }
    return out;
}

LassoReport bounded_limit_check(const Lts& l, int k) {
    LassoReport report;
    if (k < 1) throw LtsError("bounded_limit_check requires k >= 1");
    NormalForm nf = normalize(l, true);

    // Every path of length <= k from the initial state; a lasso closes when
    // the path revisits a state on itself.
    struct PathStep { uint32_t state; uint32_t action; };
    std::vector<uint32_t> path_states{nf.initial};
    std::vector<uint32_t> path_actions;

    auto check_lasso = [&](size_t cycle_start) {
        ++report.lassos;
        // Derived classifications from the automaton.
        bool an_derived = true;   // every state on stem and cycle nondivergent pre
        for (uint32_t q : path_states)
            if (nf.states[q].divergent || nf.states[q].hist != Hist::pre)
                an_derived = false;
        bool ean_derived = true;  // cycle avoids divergent states
        for (size_t i = cycle_start; i < path_states.size(); ++i)
            if (nf.states[path_states[i]].divergent) ean_derived = false;

        // Replay against the divergence bits of a bounded unrolling of the
        // lasso word: prefixes of length <= 3k.
        size_t stem_len = cycle_start;
        size_t cycle_len = path_actions.size() - cycle_start;
        uint32_t q = nf.initial;
        bool any_div_prefix = nf.states[q].divergent;
        bool div_in_tail = false;
        for (size_t step = 0; step < 3 * static_cast<size_t>(k); ++step) {
            size_t idx = step < stem_len
                             ? step
                             : stem_len + (step - stem_len) % cycle_len;
            auto next = nf.states[q].next(path_actions[idx]);
            q = *next;
            if (nf.states[q].divergent) {
                any_div_prefix = true;
                if (step + 1 > stem_len + cycle_len) div_in_tail = true;
            }
        }
        bool an_replayed = !any_div_prefix;
        bool ean_replayed = !div_in_tail;
        // One full unrolling past the stem settles the periodic part.
        if (an_derived != an_replayed || ean_derived != ean_replayed) {
            report.pass = false;
            if (report.counterexample.empty()) {
                Trace word;
                for (uint32_t ai : path_actions) word.push_back(nf.alphabet[ai]);
                report.counterexample =
                    "lasso " + show_trace(word) + " (cycle at " +
                    std::to_string(cycle_start) + "): derived anI=" +
                    (an_derived ? "1" : "0") + " eanI=" + (ean_derived ? "1" : "0") +
                    ", replayed anI=" + (an_replayed ? "1" : "0") + " eanI=" +
                    (ean_replayed ? "1" : "0");
            }
        }
    };

    std::function<void()> extend = [&]() {
        if (path_actions.size() >= static_cast<size_t>(k)) return;
        uint32_t q = path_states.back();
        for (const auto& [ai, t] : nf.states[q].succ) {
            path_actions.push_back(ai);
            for (size_t i = 0; i < path_states.size(); ++i)
                if (path_states[i] == t) check_lasso(i);
            path_states.push_back(t);
            extend();
            path_states.pop_back();
            path_actions.pop_back();
        }
    };
    extend();
    return report;
}

}  // namespace ltseq
