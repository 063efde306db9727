#include <doctest.h>

#include "ltseq/bisim.hpp"
#include "ltseq/lts_io.hpp"
#include "ltseq/normal_form.hpp"
#include "ltseq/oracle.hpp"
#include "test_util.hpp"

using namespace ltseq;
using namespace ltseq::test;

namespace {

// All traces of the automaton up to the given depth.
std::set<Trace> nf_language(const NormalForm& nf, int depth) {
    std::set<Trace> out;
    if (nf.empty()) return out;
    struct Item { Trace t; uint32_t q; };
    std::vector<Item> queue{{{}, nf.initial}};
    for (size_t i = 0; i < queue.size(); ++i) {
        out.insert(queue[i].t);
        if (static_cast<int>(queue[i].t.size()) == depth) continue;
        for (const auto& [ai, t] : nf.states[queue[i].q].succ) {
            Trace ext = queue[i].t;
            ext.push_back(nf.alphabet[ai]);
            queue.push_back({std::move(ext), t});
        }
    }
    return out;
}

std::optional<uint32_t> state_of(const NormalForm& nf, const Trace& t) {
    uint32_t q = nf.initial;
    for (const auto& a : t) {
        auto ai = nf.action_index(a);
        if (!ai) return std::nullopt;
        auto next = nf.states[q].next(*ai);
        if (!next) return std::nullopt;
        q = *next;
    }
    return q;
}

}  // namespace

TEST_CASE("determinize the split-divergence process") {
    NormalForm det = determinize(split_div());
    REQUIRE(det.states.size() == 3);
    // init -a-> {r}, init -b-> {l,r}, {l,r} -a-> {r}, {r} -a-> {r}
    auto a = det.action_index(Action("a")).value();
    auto b = det.action_index(Action("b")).value();
    auto after_a = det.states[det.initial].next(a);
    auto after_b = det.states[det.initial].next(b);
    REQUIRE(after_a.has_value());
    REQUIRE(after_b.has_value());
    CHECK(*after_a != *after_b);
    CHECK(det.states[*after_a].next(a) == after_a);      // {r} loops on a
    CHECK(det.states[*after_a].next(b) == std::nullopt);
    CHECK(det.states[*after_b].next(a) == after_a);      // {l,r} -a-> {r}
    CHECK(det.states[*after_b].next(b) == std::nullopt);
    CHECK(det.states[*after_b].members.size() == 2);
}

TEST_CASE("determinize is the identity on deterministic tau-free input") {
    Lts l = parse_lts("alphabet: a b\ninit: s0\ntrans:\ns0 a s1\ns0 b s2\ns1 a s0\n");
    NormalForm det = determinize(l);
    CHECK(det.states.size() == l.num_states());
    CHECK(bisimilar(as_lts(det), l).equal);
}

TEST_CASE("determinize preserves the language up to depth 6") {
    for (const Lts& l : corpus(40, 17)) {
        auto bs = enumerate_bounded(l, 6);
        CHECK(nf_language(determinize(l), 6) == bs.tr);
    }
}

TEST_CASE("normalize LLG and BLG") {
    NormalForm ll = normalize(llg(), false);
    REQUIRE(ll.states.size() == 1);
    CHECK(ll.states[0].divergent);
    CHECK(ll.states[0].refusals.empty());  // Sf = {}

    NormalForm bl = normalize(blg(), false);
    REQUIRE(bl.states.size() == 1);
    CHECK(bl.states[0].divergent);
    CHECK(bl.states[0].refusals.sets() ==
          std::vector<RefusalAntichain::Set>{{}});  // Sf = {(eps, {})}
}

TEST_CASE("normalize the split-divergence process with history") {
    NormalForm nf = normalize(split_div(), true);
    // Four refined states: init (pre), a-successor (pre), b-successor
    // (minimal divergence), and the post copy of the a-loop subset.
    REQUIRE(nf.states.size() == 4);
    CHECK(nf.states[nf.initial].hist == Hist::pre);
    CHECK(nf.states[nf.initial].refusals.sets() ==
          std::vector<RefusalAntichain::Set>{{}});

    auto qa = state_of(nf, {Action("a")}).value();
    auto qb = state_of(nf, {Action("b")}).value();
    CHECK(nf.states[qa].hist == Hist::pre);
    CHECK(!nf.states[qa].divergent);
    CHECK(nf.states[qb].hist == Hist::mind);
    CHECK(nf.states[qb].divergent);

    auto qba = state_of(nf, {Action("b"), Action("a")}).value();
    CHECK(nf.states[qba].hist == Hist::post);
    CHECK(qba != qa);
    CHECK(nf.states[qba].members == nf.states[qa].members);
}

TEST_CASE("history: no step back to pre, post iff behind divergence") {
    for (const Lts& l : corpus(40, 19)) {
        NormalForm nf = normalize(l, true);
        for (const auto& st : nf.states) {
            if (st.hist == Hist::pre) CHECK(!st.divergent);
            if (st.hist == Hist::mind) CHECK(st.divergent);
            for (const auto& [ai, t] : st.succ) {
                if (st.hist != Hist::pre)
                    CHECK(nf.states[t].hist != Hist::pre);  // no post -> pre
                if (st.hist == Hist::pre && nf.states[t].divergent)
                    CHECK(nf.states[t].hist == Hist::mind);
            }
        }
        // Refinement at most doubles the subset automaton.
        CHECK(nf.states.size() <= 2 * normalize(l, false).states.size());
    }
}

TEST_CASE("una splits the shared a-loop state, bisimilarity preserved") {
    Lts u = una(split_div());
    CHECK(bisimilar(u, split_div()).equal);
    CHECK(u.num_states() == 4);  // rightmost state split in two

    // Deterministic tau-free input: no growth.
    Lts det = parse_lts("alphabet: a\ninit: s0\ntrans:\ns0 a s1\n");
    CHECK(una(det).num_states() == det.num_states());
}

TEST_CASE("every una state is reached by divergence traces only or not at all") {
    for (const Lts& l : corpus(30, 37)) {
        Lts u = una(l);
        CHECK(bisimilar(u, l).equal);
        auto bs = enumerate_bounded(l, 5);

        // Collect, per una state, which depth-<=5 traces reach it.
        std::map<StateId, std::pair<bool, bool>> seen;  // divergent / nondivergent
        // =>-walk over u mirroring the oracle.
        std::map<Trace, std::set<StateId>> level;
        {
            std::set<StateId> cur{u.init()};
            bool grew = true;
            while (grew) {
                grew = false;
                for (StateId s : std::set<StateId>(cur))
                    for (const auto& [a, t] : u.succ(s))
                        if (a.is_tau() && cur.insert(t).second) grew = true;
            }
            level[{}] = cur;
        }
        for (int len = 0; len <= 5; ++len) {
            std::map<Trace, std::set<StateId>> next;
            for (const auto& [trace, ends] : level) {
                bool div = bs.div.count(trace) > 0;
                for (StateId s : ends) {
                    auto& flags = seen[s];
                    (div ? flags.first : flags.second) = true;
                }
                if (len == 5) continue;
                for (const auto& a : u.alphabet()) {
                    std::set<StateId> moved;
                    for (StateId s : ends)
                        for (const auto& [x, t] : u.succ(s))
                            if (x == a) moved.insert(t);
                    if (moved.empty()) continue;
                    bool grew = true;
                    while (grew) {
                        grew = false;
                        for (StateId s : std::set<StateId>(moved))
                            for (const auto& [x, t] : u.succ(s))
                                if (x.is_tau() && moved.insert(t).second) grew = true;
                    }
                    Trace ext = trace;
                    ext.push_back(a);
                    next[ext] = moved;
                }
            }
            level = std::move(next);
        }
        for (const auto& [s, flags] : seen) CHECK(!(flags.first && flags.second));
    }
}

TEST_CASE("pd splits the post-divergence copy and stays bisimilar") {
    Lts p = pd(split_div());
    CHECK(bisimilar(p, split_div()).equal);
    CHECK(p.num_states() == 5);

    // Without divergence pd adds nothing beyond una.
    Lts no_div = parse_lts("alphabet: a\ninit: s0\ntrans:\ns0 a s1\ns0 a s2\ns2 a s0\n");
    CHECK(pd(no_div).num_states() == una(no_div).num_states());
}

TEST_CASE("pd: no transition from post to pre") {
    for (const Lts& l : corpus(30, 53)) {
        Lts p = pd(l);
        CHECK(bisimilar(p, l).equal);
        auto is_post = [&](StateId s) {
            const std::string& n = p.state_name(s);
            return n.size() >= 5 && n.substr(n.size() - 5) == ".post";
        };
        for (StateId s = 0; s < p.num_states(); ++s)
            for (const auto& [a, t] : p.succ(s))
                if (is_post(s)) CHECK(is_post(t));
    }
}

TEST_CASE("minimize_normal_form merges annotation-identical states") {
    Lts l = parse_lts(
        "alphabet: a\ninit: s0\ntrans:\ns0 a s1\ns0 a s2\ns1 a s3\ns2 a s4\n");
    NormalForm nf = normalize(l, true);
    auto key = [&](uint32_t q) {
        return std::string(nf.states[q].divergent ? "d" : "-") +
               (nf.states[q].refusals.empty() ? "e" : "r");
    };
    NormalForm min = minimize_normal_form(nf, key);
    CHECK(min.states.size() <= nf.states.size());

    // Idempotent.
    auto key2 = [&](uint32_t q) {
        return std::string(min.states[q].divergent ? "d" : "-") +
               (min.states[q].refusals.empty() ? "e" : "r");
    };
    CHECK(minimize_normal_form(min, key2).states.size() == min.states.size());

    // Language preserved.
    CHECK(nf_language(min, 6) == nf_language(nf, 6));
}

TEST_CASE("minimize preserves per-trace annotations on random inputs") {
    for (const Lts& l : corpus(25, 71)) {
        NormalForm nf = normalize(l, true);
        auto key = [&](uint32_t q) {
            std::string k = nf.states[q].divergent ? "d" : "-";
            k += std::to_string(static_cast<int>(nf.states[q].hist));
            std::vector<std::string> tokens;
            for (const auto& a : nf.alphabet) tokens.push_back(a.token());
            k += show_antichain(nf.states[q].refusals, tokens);
            return k;
        };
        NormalForm min = minimize_normal_form(nf, key);
        CHECK(min.states.size() <= nf.states.size());
        auto language = nf_language(nf, 6);
        CHECK(nf_language(min, 6) == language);
        for (const auto& t : language) {
            auto q1 = state_of(nf, t);
            auto q2 = state_of(min, t);
            REQUIRE(q1.has_value());
            REQUIRE(q2.has_value());
            CHECK(nf.states[*q1].divergent == min.states[*q2].divergent);
            CHECK(nf.states[*q1].hist == min.states[*q2].hist);
            CHECK(nf.states[*q1].refusals == min.states[*q2].refusals);
        }
    }
}

TEST_CASE("subset count bound") {
    for (const Lts& l : corpus(20, 83)) {
        NormalForm nf = normalize(l, false);
        CHECK(nf.states.size() <= (1u << reachable_part(l).num_states()));
    }
}

TEST_CASE("dot and json dumps are stable") {
    NormalForm nf = normalize(split_div(), true);
    std::string dot = nf_to_dot(nf);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("div:1") != std::string::npos);
    CHECK(dot.find("hist:pre") != std::string::npos);
    CHECK(dot == nf_to_dot(nf));
    Lts src = split_div();
    std::string json = nf_to_json(normalize(src, true), &src);
    CHECK(json.find("\"divergent\"") != std::string::npos);
    CHECK(json == nf_to_json(normalize(src, true), &src));
}
