#include "ltseq/normal_form.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ltseq/ops.hpp"

namespace ltseq {

std::optional<uint32_t> NfState::next(uint32_t action_index) const {
    for (const auto& [a, t] : succ)
        if (a == action_index) return t;
    return std::nullopt;
}

std::optional<uint32_t> NormalForm::action_index(const Action& a) const {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), a);
    if (it == alphabet.end() || *it != a) return std::nullopt;
    return static_cast<uint32_t>(it - alphabet.begin());
}

namespace {

std::vector<StateId> tau_closure(const Lts& l, std::vector<StateId> seed) {
    std::vector<bool> in(l.num_states(), false);
    std::vector<StateId> queue = std::move(seed);
    for (StateId s : queue) in[s] = true;
    for (size_t i = 0; i < queue.size(); ++i)
        for (const auto& [a, t] : l.succ(queue[i]))
            if (a.is_tau() && !in[t]) { in[t] = true; queue.push_back(t); }
    std::sort(queue.begin(), queue.end());
    return queue;
}

NormalForm subset_construction(const Lts& l) {
    NormalForm nf;
    nf.alphabet = l.alphabet();

    std::map<std::vector<StateId>, uint32_t> numbered;
    auto lookup = [&](std::vector<StateId> subset) {
        auto it = numbered.find(subset);
        if (it != numbered.end()) return it->second;
        uint32_t id = static_cast<uint32_t>(nf.states.size());
        numbered.emplace(subset, id);
        NfState st;
        st.members = std::move(subset);
        nf.states.push_back(std::move(st));
        return id;
    };

    nf.initial = lookup(tau_closure(l, {l.init()}));
    for (uint32_t q = 0; q < nf.states.size(); ++q) {
        for (uint32_t ai = 0; ai < nf.alphabet.size(); ++ai) {
            std::vector<StateId> moved;
            for (StateId s : nf.states[q].members)
                for (const auto& [a, t] : l.succ(s))
                    if (a == nf.alphabet[ai]) moved.push_back(t);
            if (moved.empty()) continue;
            std::sort(moved.begin(), moved.end());
            moved.erase(std::unique(moved.begin(), moved.end()), moved.end());
            uint32_t target = lookup(tau_closure(l, std::move(moved)));
            nf.states[q].succ.emplace_back(ai, target);
        }
    }
    return nf;
}

void annotate(const Lts& l, NormalForm& nf) {
    for (auto& st : nf.states) {
        for (StateId s : st.members) {
            StateClass c = l.classify(s);
            if (c.divergent) st.divergent = true;
            if (c.stable) {
                RefusalAntichain::Set refusal;
                for (uint32_t ai = 0; ai < nf.alphabet.size(); ++ai) {
                    bool offered = false;
                    for (const auto& [a, t] : l.succ(s))
                        if (a == nf.alphabet[ai]) { offered = true; break; }
                    if (!offered) refusal.push_back(ai);
                }
                st.refusals.insert(std::move(refusal));
            }
        }
    }
    nf.annotated = true;
}

Hist step_hist(Hist h, bool target_divergent) {
    if (h == Hist::pre) return target_divergent ? Hist::mind : Hist::pre;
    return Hist::post;
}

NormalForm refine_history(const NormalForm& nf) {
    NormalForm out;
    out.alphabet = nf.alphabet;
    out.annotated = nf.annotated;
    out.with_history = true;

    std::map<std::pair<uint32_t, Hist>, uint32_t> numbered;
    std::vector<std::pair<uint32_t, Hist>> order;
    auto lookup = [&](uint32_t q, Hist h) {
        auto key = std::make_pair(q, h);
        auto it = numbered.find(key);
        if (it != numbered.end()) return it->second;
        uint32_t id = static_cast<uint32_t>(order.size());
        numbered.emplace(key, id);
        order.push_back(key);
        return id;
    };

    Hist h0 = nf.states[nf.initial].divergent ? Hist::mind : Hist::pre;
    out.initial = lookup(nf.initial, h0);
    for (size_t i = 0; i < order.size(); ++i) {
        auto [q, h] = order[i];
        NfState st = nf.states[q];
        st.hist = h;
        st.succ.clear();
        for (const auto& [ai, t] : nf.states[q].succ)
            st.succ.emplace_back(ai, lookup(t, step_hist(h, nf.states[t].divergent)));
        out.states.push_back(std::move(st));
    }
    return out;
}

}  // namespace

NormalForm determinize(const Lts& l) { return subset_construction(l); }

NormalForm normalize(const Lts& l, bool with_history) {
    NormalForm nf = subset_construction(l);
    annotate(l, nf);
    if (with_history) nf = refine_history(nf);
    return nf;
}

Lts as_lts(const NormalForm& nf) {
    LtsBuilder b;
    for (uint32_t q = 0; q < nf.states.size(); ++q)
        b.add_state("d" + std::to_string(q));
    for (const auto& a : nf.alphabet) b.add_action(a);
    for (uint32_t q = 0; q < nf.states.size(); ++q)
        for (const auto& [ai, t] : nf.states[q].succ)
            b.add_transition(q, nf.alphabet[ai], t);
    b.set_init(nf.initial);
    return std::move(b).build();
}

Lts una(const Lts& l) { return parallel(l, as_lts(determinize(l))); }

Lts pd(const Lts& input) {
    // Build Una(L) keeping track of each product state's Det component, so
    // "potentially divergent" is the divergence bit of that component.
    Lts l = input;
    NormalForm det = normalize(l, false);
    Lts det_lts = as_lts(det);
    Lts u = parallel(l, det_lts);

    // Product walk of u against det to attach a subset to every Una state;
    // "potentially divergent" is then the divergence bit of that subset.
    std::vector<int> subset_of(u.num_states(), -1);
    subset_of[u.init()] = static_cast<int>(det.initial);
    std::vector<StateId> queue{u.init()};
    for (size_t i = 0; i < queue.size(); ++i) {
        StateId s = queue[i];
        uint32_t q = static_cast<uint32_t>(subset_of[s]);
        for (const auto& [a, t] : u.succ(s)) {
            uint32_t qt = q;
            if (!a.is_tau()) {
                auto ai = det.action_index(a);
                auto nxt = det.states[q].next(*ai);
                qt = *nxt;
            }
            if (subset_of[t] == -1) {
                subset_of[t] = static_cast<int>(qt);
                queue.push_back(t);
            }
        }
    }

    auto potentially_divergent = [&](StateId s) {
        return det.states[static_cast<uint32_t>(subset_of[s])].divergent;
    };

    // Pair every Una state with the pre/post bit of the trace so far.
    LtsBuilder b;
    std::map<std::pair<StateId, bool>, StateId> numbered;
    std::vector<std::pair<StateId, bool>> order;
    auto lookup = [&](StateId s, bool post) {
        auto key = std::make_pair(s, post);
        auto it = numbered.find(key);
        if (it != numbered.end()) return it->second;
        StateId id = b.add_state(u.state_name(s) + (post ? ".post" : ".pre"));
        numbered.emplace(key, id);
        order.push_back(key);
        return id;
    };

    lookup(u.init(), potentially_divergent(u.init()));
    for (size_t i = 0; i < order.size(); ++i) {
        auto [s, post] = order[i];
        StateId src = numbered.at(order[i]);
        for (const auto& [a, t] : u.succ(s)) {
            bool tpost = a.is_tau() ? post : (post || potentially_divergent(t));
            b.add_transition(src, a, lookup(t, tpost));
        }
    }
    for (const auto& a : u.alphabet()) b.add_action(a);
    b.set_init(0);
    return std::move(b).build();
}

NormalForm minimize_normal_form(const NormalForm& nf,
                                const std::function<std::string(uint32_t)>& obs_key) {
    if (nf.empty()) return nf;
    size_t n = nf.states.size();
    std::vector<int> block(n);
    {
        std::map<std::string, int> by_key;
        for (size_t q = 0; q < n; ++q) {
            auto [it, fresh] = by_key.emplace(obs_key(static_cast<uint32_t>(q)),
                                              static_cast<int>(by_key.size()));
            (void)fresh;
            block[q] = it->second;
        }
    }
    for (;;) {
        std::map<std::pair<int, std::vector<std::pair<uint32_t, int>>>, int> sig;
        std::vector<int> next(n);
        for (size_t q = 0; q < n; ++q) {
            std::vector<std::pair<uint32_t, int>> edges;
            for (const auto& [ai, t] : nf.states[q].succ) edges.emplace_back(ai, block[t]);
            auto key = std::make_pair(block[q], std::move(edges));
            auto [it, fresh] = sig.emplace(std::move(key), static_cast<int>(sig.size()));
            (void)fresh;
            next[q] = it->second;
        }
        bool same = std::equal(block.begin(), block.end(), next.begin());
        block = std::move(next);
        if (same) break;
    }

    int nblocks = *std::max_element(block.begin(), block.end()) + 1;
    std::vector<int> rep(nblocks, -1);
    for (size_t q = 0; q < n; ++q)
        if (rep[block[q]] < 0) rep[block[q]] = static_cast<int>(q);

    // BFS numbering from the initial block.
    std::vector<int> number(nblocks, -1);
    std::vector<int> order{block[nf.initial]};
    number[block[nf.initial]] = 0;
    for (size_t i = 0; i < order.size(); ++i)
        for (const auto& [ai, t] : nf.states[rep[order[i]]].succ)
            if (number[block[t]] < 0) {
                number[block[t]] = static_cast<int>(order.size());
                order.push_back(block[t]);
            }

    NormalForm out;
    out.alphabet = nf.alphabet;
    out.annotated = nf.annotated;
    out.with_history = nf.with_history;
    out.initial = 0;
    for (int blk : order) {
        NfState st = nf.states[rep[blk]];
        // Merge member sets of the whole block.
        st.members.clear();
        for (size_t q = 0; q < n; ++q)
            if (block[q] == blk)
                st.members.insert(st.members.end(), nf.states[q].members.begin(),
                                  nf.states[q].members.end());
        std::sort(st.members.begin(), st.members.end());
        st.members.erase(std::unique(st.members.begin(), st.members.end()),
                         st.members.end());
        std::vector<std::pair<uint32_t, uint32_t>> succ;
        for (const auto& [ai, t] : nf.states[rep[blk]].succ)
            succ.emplace_back(ai, static_cast<uint32_t>(number[block[t]]));
        st.succ = std::move(succ);
        out.states.push_back(std::move(st));
    }
    return out;
}

std::string nf_to_dot(const NormalForm& nf) {
    std::ostringstream out;
    out << "digraph nf {\n  rankdir=LR;\n  node [shape=record];\n";
    std::vector<std::string> tokens;
    for (const auto& a : nf.alphabet) tokens.push_back(a.token());
    for (uint32_t q = 0; q < nf.states.size(); ++q) {
        const auto& st = nf.states[q];
        std::string hist = st.hist == Hist::none ? "-"
                         : st.hist == Hist::pre  ? "pre"
                                                 : "post";
        out << "  q" << q << " [label=\"" << q << " | div:" << (st.divergent ? 1 : 0)
            << " | refusals:" << show_antichain(st.refusals, tokens)
            << " | hist:" << hist << "\"];\n";
    }
    if (!nf.empty()) out << "  init [shape=point];\n  init -> q" << nf.initial << ";\n";
    for (uint32_t q = 0; q < nf.states.size(); ++q)
        for (const auto& [ai, t] : nf.states[q].succ)
            out << "  q" << q << " -> q" << t << " [label=\"" << tokens[ai] << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string nf_to_json(const NormalForm& nf, const Lts* source) {
    nlohmann::json doc;
    doc["alphabet"] = nlohmann::json::array();
    for (const auto& a : nf.alphabet) doc["alphabet"].push_back(a.token());
    doc["history"] = nf.with_history;
    doc["annotated"] = nf.annotated;
    if (!nf.empty()) doc["initial"] = nf.initial;
    doc["states"] = nlohmann::json::array();
    for (uint32_t q = 0; q < nf.states.size(); ++q) {
        const auto& st = nf.states[q];
        nlohmann::json js;
        js["id"] = q;
        js["divergent"] = st.divergent;
        js["refusals"] = nlohmann::json::array();
        for (const auto& m : st.refusals.sets()) {
            nlohmann::json set = nlohmann::json::array();
            for (uint32_t ai : m) set.push_back(nf.alphabet[ai].token());
            js["refusals"].push_back(set);
        }
        switch (st.hist) {
            case Hist::none: js["hist"] = nullptr; break;
            case Hist::pre: js["hist"] = "pre"; break;
            case Hist::mind: js["hist"] = "mind"; break;
            case Hist::post: js["hist"] = "post"; break;
        }
        if (source) {
            js["members"] = nlohmann::json::array();
            for (StateId s : st.members) js["members"].push_back(source->state_name(s));
        }
        js["delta"] = nlohmann::json::object();
        for (const auto& [ai, t] : st.succ) js["delta"][nf.alphabet[ai].token()] = t;
        doc["states"].push_back(js);
    }
    return doc.dump(2) + "\n";
}

}  // namespace ltseq
