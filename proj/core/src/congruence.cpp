#include "ltseq/congruence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "ltseq/bisim.hpp"

namespace ltseq {

namespace {

using C = ComponentId;

std::array<Congruence, 20> make_catalogue() {
    auto needs = [](const std::vector<ComponentId>& sig) {
        return std::any_of(sig.begin(), sig.end(), component_needs_history);
    };
    std::array<Congruence, 20> out{{
        {1, "dullest", {}, false},
        {2, "alph", {}, false},
        {3, "tr", {C::TR}, false},
        {4, "sf", {C::SF}, false},
        {5, "tr-sf", {C::TR, C::SF}, false},
        {6, "sf-mind", {C::SF, C::MIND}, false},
        {7, "tr-sf-mind", {C::TR, C::SF, C::MIND}, false},
        {8, "cffd-fin", {C::SF, C::DIV}, false},
        {9, "ant-mind", {C::ANT, C::MIND}, false},
        {10, "tr-mind", {C::TR, C::MIND}, false},
        {11, "tr-div", {C::TR, C::DIV}, false},
        {12, "sanf-mind", {C::SANF, C::MIND}, false},
        {13, "tr-sanf-mind", {C::TR, C::SANF, C::MIND}, false},
        {14, "tr-sanf-div", {C::TR, C::SANF, C::DIV}, false},
        {15, "csp-fdi", {C::ANF, C::MIND}, false},
        {16, "tr-anf-mind", {C::TR, C::ANF, C::MIND}, false},
        {17, "tr-anf-div", {C::TR, C::ANF, C::DIV}, false},
        {18, "snf-div", {C::SNF, C::DIV}, false},
        {19, "anf-snf-div", {C::ANF, C::SNF, C::DIV}, false},
        {20, "ndfd-fin", {C::NF, C::DIV}, false},
    }};
    for (auto& c : out) c.needs_history = needs(c.signature);
    return out;
}

}  // namespace

const std::array<Congruence, 20>& catalogue() {
    static const std::array<Congruence, 20> cat = make_catalogue();
    return cat;
}

const Congruence& congruence_by_id(int id) {
    if (id < 1 || id > 20) throw LtsError("unknown congruence id " + std::to_string(id));
    return catalogue()[id - 1];
}

std::optional<int> congruence_id_by_name(const std::string& name) {
    for (const auto& c : catalogue())
        if (c.name == name) return c.id;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Implication order.
//
// For finite LTSs each preserved-set signature is closed under the
// derivations
//   Dl   = { s | (s, Sigma) in Sf }
//   minD = minimal elements of Div,  extT <-> minD
//   Tr   = Div u Sf^Tr = Div u nF^Tr = Div u snF^Tr
//   Div  = Tr \ nF^Tr = Tr \ snF^Tr
//   nF, snF = from Sf and Div;  anF, sanF = from {Sf|nF} and minD
//   sanF = from {anF|snF} and minD;  anT = X^Tr \ extT
// and c1 implies c2 iff closure(c1) contains closure(c2).
// ---------------------------------------------------------------------------

namespace {

enum Comp : int { kSigma, kTr, kSf, kDl, kDiv, kMinD, kAnT, kNF, kSnF, kAnF, kSanF, kNumComp };

using Closure = std::set<int>;

Closure closure_of(const Congruence& c) {
    Closure x;
    if (c.id != 1) x.insert(kSigma);
    for (ComponentId comp : c.signature) {
        switch (comp) {
            case C::TR: x.insert(kTr); break;
            case C::SF: x.insert(kSf); break;
            case C::DIV: x.insert(kDiv); break;
            case C::MIND: x.insert(kMinD); break;
            case C::ANT: x.insert(kAnT); break;
            case C::NF: x.insert(kNF); break;
            case C::SNF: x.insert(kSnF); break;
            case C::ANF: x.insert(kAnF); break;
            case C::SANF: x.insert(kSanF); break;
            default: break;
        }
    }
    auto has = [&](int k) { return x.count(k) > 0; };
    bool changed = true;
    while (changed) {
        changed = false;
        auto add = [&](int k) {
            if (!x.count(k)) { x.insert(k); changed = true; }
        };
        if (has(kDiv)) add(kMinD);
        if (has(kSf)) add(kDl);
        if (has(kSf) && has(kDiv)) { add(kTr); add(kNF); }
        if (has(kNF) && has(kDiv)) { add(kTr); add(kSnF); }
        if (has(kSnF) && has(kDiv)) add(kTr);
        if (has(kNF) && has(kTr)) add(kDiv);
        if (has(kSnF) && has(kTr)) add(kDiv);
        if (has(kSf) && has(kMinD)) { add(kAnF); add(kAnT); }
        if (has(kNF) && has(kMinD)) { add(kAnF); add(kAnT); }
        if (has(kAnF) && has(kMinD)) add(kSanF);
        if (has(kSnF) && has(kMinD)) { add(kSanF); add(kAnT); }
        if (has(kAnF)) add(kAnT);
        if (has(kSanF)) add(kAnT);
        if (has(kTr) && has(kMinD)) add(kAnT);
    }
    return x;
}

const std::array<Closure, 20>& closures() {
    static const std::array<Closure, 20> cl = [] {
        std::array<Closure, 20> out;
        for (int i = 0; i < 20; ++i) out[i] = closure_of(catalogue()[i]);
        return out;
    }();
    return cl;
}

}  // namespace

bool implies(int c1, int c2) {
    const Closure& a = closures()[congruence_by_id(c1).id - 1];
    const Closure& b = closures()[congruence_by_id(c2).id - 1];
    return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<std::pair<int, int>> hasse_edges() {
    std::vector<std::pair<int, int>> edges;
    for (int s = 1; s <= 20; ++s) {
        for (int w = 1; w <= 20; ++w) {
            if (w == s || !implies(s, w)) continue;
            bool covered = false;
            for (int m = 1; m <= 20 && !covered; ++m)
                if (m != s && m != w && implies(s, m) && implies(m, w)) covered = true;
            if (!covered) edges.emplace_back(w, s);  // (weaker, stronger)
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

// ---------------------------------------------------------------------------
// Equivalence checking.
// ---------------------------------------------------------------------------

namespace {

struct PreparedSide {
    NormalForm nf;  // trimmed
    ObservationTable obs;
};

PreparedSide prepare_from(const Congruence& c, const NormalForm& base) {
    PreparedSide side;
    side.nf = trim_relevant(c.signature, base);
    side.obs = observation_table(c.signature, side.nf);
    return side;
}

PreparedSide prepare(const Congruence& c, const Lts& l, bool with_history) {
    return prepare_from(c, normalize(bisim_quotient(l), with_history));
}

std::string describe_set(const RefusalAntichain::Set& s,
                         const std::vector<Action>& alphabet) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += alphabet[s[i]].token();
    }
    return out + "}";
}

// A maximal refusal of `a` outside the downward closure of `b`, if any.
std::optional<RefusalAntichain::Set> family_difference(const RefusalAntichain& a,
                                                       const RefusalAntichain& b) {
    for (const auto& m : a.sets())
        if (!b.member(m)) return m;
    return std::nullopt;
}

struct Mismatch {
    Trace trace;
    Witness witness;
};

bool trace_less(const Trace& a, const Trace& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

// Shortest path from `from` to a state with a non-bottom observation,
// inside one trimmed normal form; trimming guarantees such a state exists.
std::pair<Trace, uint32_t> reach_observable(const PreparedSide& side, uint32_t from) {
    std::vector<int> back_state(side.nf.states.size(), -1);
    std::vector<uint32_t> back_action(side.nf.states.size(), 0);
    std::deque<uint32_t> queue{from};
    back_state[from] = static_cast<int>(from);
    uint32_t found = from;
    bool ok = !side.obs.bottom_at(from);
    while (!ok && !queue.empty()) {
        uint32_t q = queue.front();
        queue.pop_front();
        for (const auto& [ai, t] : side.nf.states[q].succ) {
            if (back_state[t] != -1) continue;
            back_state[t] = static_cast<int>(q);
            back_action[t] = ai;
            if (!side.obs.bottom_at(t)) { found = t; ok = true; break; }
            queue.push_back(t);
        }
    }
    Trace out;
    for (uint32_t q = found; q != from; q = static_cast<uint32_t>(back_state[q]))
        out.push_back(side.nf.alphabet[back_action[q]]);
    std::reverse(out.begin(), out.end());
    return {out, found};
}

// The other side's observation is bottom everywhere past this trace, so the
// first non-bottom component here is a replayable difference.
Witness one_sided_witness(const Congruence& c, const PreparedSide& present,
                          uint32_t state, const Trace& trace, bool left_has_it) {
    Witness w;
    w.trace = trace;
    const char* side = left_has_it ? "left" : "right";
    size_t view_i = 0;
    for (ComponentId comp : c.signature) {
        const auto& view = present.obs.views[view_i++];
        if (component_is_failure(comp)) {
            if (view.families[state].empty()) continue;
            w.kind = WitnessKind::refusal;
            w.component = comp;
            w.detail = "refusal " +
                       describe_set(view.families[state].sets().front(), present.nf.alphabet) +
                       " only in the " + side + " process";
            return w;
        }
        if (!view.bits[state]) continue;
        w.kind = comp == ComponentId::TR ? WitnessKind::trace_membership
                                         : WitnessKind::bit;
        w.component = comp;
        w.detail = std::string(component_name(comp)) + " holds only in the " +
                   side + " process";
        return w;
    }
    w.kind = WitnessKind::trace_membership;
    w.detail = std::string("trace only in the ") + side + " process";
    return w;
}

std::optional<Witness> compare_states(const Congruence& c, const PreparedSide& a,
                                      const PreparedSide& b, uint32_t qa, uint32_t qb,
                                      const Trace& trace) {
    size_t bit_i = 0, fam_i = 0;
    for (ComponentId comp : c.signature) {
        if (component_is_failure(comp)) {
            const auto& fa = a.obs.views[bit_i + fam_i].families[qa];
            const auto& fb = b.obs.views[bit_i + fam_i].families[qb];
            ++fam_i;
            if (fa == fb) continue;
            Witness w;
            w.kind = WitnessKind::refusal;
            w.component = comp;
            w.trace = trace;
            if (auto d = family_difference(fa, fb))
                w.detail = "refusal " + describe_set(*d, a.nf.alphabet) +
                           " only in the left process";
            else if (auto e = family_difference(fb, fa))
                w.detail = "refusal " + describe_set(*e, a.nf.alphabet) +
                           " only in the right process";
            return w;
        }
        const auto& va = a.obs.views[bit_i + fam_i];
        const auto& vb = b.obs.views[bit_i + fam_i];
        ++bit_i;
        if (va.bits[qa] == vb.bits[qb]) continue;
        Witness w;
        w.kind = WitnessKind::bit;
        w.component = comp;
        w.trace = trace;
        w.detail = std::string(component_name(comp)) + " holds only in the " +
                   (va.bits[qa] ? "left" : "right") + " process";
        return w;
    }
    return std::nullopt;
}

std::optional<Witness> alphabet_witness(const Lts& l1, const Lts& l2) {
    if (l1.alphabet() == l2.alphabet()) return std::nullopt;
    Witness w;
    w.kind = WitnessKind::alphabet;
    w.detail = "alphabet difference";
    for (const auto& a : l1.alphabet())
        if (!l2.in_alphabet(a)) { w.detail = "action " + a.token() + " only in the left alphabet"; break; }
    for (const auto& a : l2.alphabet())
        if (!l1.in_alphabet(a)) { w.detail = "action " + a.token() + " only in the right alphabet"; break; }
    return w;
}

Verdict check_core(const Congruence& c, const PreparedSide& a, const PreparedSide& b) {
    Verdict v{c.id, true, std::nullopt};
    std::vector<Mismatch> found;
    if (a.nf.empty() != b.nf.empty()) {
        const PreparedSide& present = a.nf.empty() ? b : a;
        auto [t, state] = reach_observable(present, present.nf.initial);
        found.push_back({t, one_sided_witness(c, present, state, t, !a.nf.empty())});
    } else if (!a.nf.empty()) {
        // BFS over the synchronized product; first-visit traces are the
        // shortest lexicographically least access traces.
        std::map<std::pair<uint32_t, uint32_t>, Trace> seen;
        std::deque<std::pair<uint32_t, uint32_t>> queue;
        seen.emplace(std::make_pair(a.nf.initial, b.nf.initial), Trace{});
        queue.emplace_back(a.nf.initial, b.nf.initial);
        while (!queue.empty()) {
            auto [qa, qb] = queue.front();
            queue.pop_front();
            Trace here = seen.at({qa, qb});
            if (auto w = compare_states(c, a, b, qa, qb, here))
                found.push_back({here, *w});
            for (uint32_t ai = 0; ai < a.nf.alphabet.size(); ++ai) {
                auto ta = a.nf.states[qa].next(ai);
                auto tb = b.nf.states[qb].next(ai);
                if (!ta && !tb) continue;
                Trace next = here;
                next.push_back(a.nf.alphabet[ai]);
                if (ta && tb) {
                    auto key = std::make_pair(*ta, *tb);
                    if (!seen.count(key)) {
                        seen.emplace(key, next);
                        queue.push_back(key);
                    }
                } else {
                    const PreparedSide& present = ta ? a : b;
                    auto [ext, state] = reach_observable(present, ta ? *ta : *tb);
                    Trace full = next;
                    full.insert(full.end(), ext.begin(), ext.end());
                    found.push_back({full, one_sided_witness(c, present, state, full,
                                                             static_cast<bool>(ta))});
                }
            }
        }
    }

    if (found.empty()) return v;
    auto best = std::min_element(found.begin(), found.end(),
                                 [](const Mismatch& x, const Mismatch& y) {
                                     return trace_less(x.trace, y.trace);
                                 });
    v.equal = false;
    v.witness = best->witness;
    return v;
}

Verdict check(const Congruence& c, const Lts& l1, const Lts& l2) {
    Verdict v{c.id, true, std::nullopt};
    if (c.id == 1) return v;  // the dullest congruence equates everything
    if (auto w = alphabet_witness(l1, l2)) {
        v.equal = false;
        v.witness = w;
        return v;
    }
    if (c.signature.empty()) return v;  // alph: alphabets agree
    return check_core(c, prepare(c, l1, c.needs_history),
                      prepare(c, l2, c.needs_history));
}

}  // namespace

Verdict equivalent(int cong_id, const Lts& l1, const Lts& l2) {
    return check(congruence_by_id(cong_id), l1, l2);
}

std::vector<Verdict> verdict_table(const Lts& l1, const Lts& l2) {
    std::vector<Verdict> out;
    out.reserve(20);
    auto alpha = alphabet_witness(l1, l2);
    if (alpha) {
        for (const auto& c : catalogue()) {
            Verdict v{c.id, c.id == 1, std::nullopt};
            if (!v.equal) v.witness = alpha;
            out.push_back(v);
        }
        return out;
    }
    // One history-refined normal form per side serves all 20 signatures; the
    // refinement leaves every per-trace observation unchanged.
    NormalForm base1 = normalize(bisim_quotient(l1), true);
    NormalForm base2 = normalize(bisim_quotient(l2), true);
    for (const auto& c : catalogue()) {
        if (c.signature.empty()) {
            out.push_back({c.id, true, std::nullopt});
            continue;
        }
        out.push_back(check_core(c, prepare_from(c, base1), prepare_from(c, base2)));
    }
    return out;
}

std::vector<int> minimal_distinguishing(const Lts& l1, const Lts& l2) {
    auto table = verdict_table(l1, l2);
    std::vector<int> unequal;
    for (const auto& v : table)
        if (!v.equal) unequal.push_back(v.cong);
    std::vector<int> out;
    for (int c : unequal) {
        bool minimal = true;
        for (int d : unequal)
            if (d != c && implies(c, d)) { minimal = false; break; }
        if (minimal) out.push_back(c);
    }
    return out;
}

std::vector<int> maximal_equating(const Lts& l1, const Lts& l2) {
    auto table = verdict_table(l1, l2);
    std::vector<int> equal;
    for (const auto& v : table)
        if (v.equal) equal.push_back(v.cong);
    std::vector<int> out;
    for (int c : equal) {
        bool maximal = true;
        for (int d : equal)
            if (d != c && implies(d, c)) { maximal = false; break; }
        if (maximal) out.push_back(c);
    }
    return out;
}

Verdict equivalent_csp_cfail(const Lts& l1, const Lts& l2) {
    Congruence view{15, "csp-cfail-view", {C::CFAIL, C::CDIV}, true};
    return check(view, l1, l2);
}

Observation observation_vector(int cong_id, const NormalForm& nf, uint32_t state) {
    const Congruence& c = congruence_by_id(cong_id);
    return observation_table(c.signature, nf).at(state);
}

}  // namespace ltseq
