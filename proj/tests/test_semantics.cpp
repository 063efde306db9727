#include <doctest.h>

#include "ltseq/bisim.hpp"
#include "ltseq/lts_io.hpp"
#include "ltseq/ops.hpp"
#include "ltseq/oracle.hpp"
#include "ltseq/semantics.hpp"
#include "test_util.hpp"

using namespace ltseq;
using namespace ltseq::test;

namespace {

std::optional<uint32_t> state_of(const NormalForm& nf, const Trace& t) {
    if (nf.empty()) return std::nullopt;
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

std::set<Trace> traces_with_bit(const NormalForm& nf, const ComponentView& v, int depth) {
    std::set<Trace> out;
    if (nf.empty()) return out;
    struct Item { Trace t; uint32_t q; };
    std::vector<Item> queue{{{}, nf.initial}};
    for (size_t i = 0; i < queue.size(); ++i) {
        if (v.bits[queue[i].q]) out.insert(queue[i].t);
        if (static_cast<int>(queue[i].t.size()) == depth) continue;
        for (const auto& [ai, t] : nf.states[queue[i].q].succ) {
            Trace ext = queue[i].t;
            ext.push_back(nf.alphabet[ai]);
            queue.push_back({std::move(ext), t});
        }
    }
    return out;
}

}  // namespace

TEST_CASE("views on BLG: nF erased like LLG") {
    NormalForm b = normalize(blg(), true);
    NormalForm l = normalize(llg(), true);
    auto nf_b = component_view(ComponentId::NF, b);
    auto nf_l = component_view(ComponentId::NF, l);
    CHECK(nf_b.families[b.initial].empty());  // eps in Div erases the refusals
    CHECK(nf_l.families[l.initial].empty());
    // Sf still tells them apart.
    auto sf_b = component_view(ComponentId::SF, b);
    auto sf_l = component_view(ComponentId::SF, l);
    CHECK(!sf_b.families[b.initial].empty());
    CHECK(sf_l.families[l.initial].empty());
}

TEST_CASE("ANT view of the split-divergence process: eps + a a*") {
    NormalForm nf = normalize(split_div(), true);
    auto ant = component_view(ComponentId::ANT, nf);
    auto got = traces_with_bit(nf, ant, 4);
    const Action a{"a"}, b{"b"};
    CHECK(got == std::set<Trace>{{}, {a}, {a, a}, {a, a, a}, {a, a, a, a}});
    // b is a minimal divergence trace, so everything after it is out.
    auto mind = component_view(ComponentId::MIND, nf);
    CHECK(traces_with_bit(nf, mind, 4) == std::set<Trace>{{b}});
}

TEST_CASE("SF view of a.Stop({a}) and the deadlock rule") {
    NormalForm nf = normalize(a_stop(), true);
    auto sf = component_view(ComponentId::SF, nf);
    auto dl = component_view(ComponentId::DL, nf);
    auto q0 = state_of(nf, {}).value();
    auto q1 = state_of(nf, {Action("a")}).value();
    CHECK(sf.families[q0].sets() == std::vector<RefusalAntichain::Set>{{}});
    CHECK(sf.families[q1].sets() == std::vector<RefusalAntichain::Set>{{0}});
    CHECK(!dl.bits[q0]);
    CHECK(dl.bits[q1]);  // Dl = { s | (s, Sigma) in Sf }
}

TEST_CASE("views need history when documented") {
    NormalForm plain = normalize(split_div(), false);
    CHECK_THROWS_AS(component_view(ComponentId::MIND, plain), LtsError);
    CHECK_THROWS_AS(component_view(ComponentId::ANF, plain), LtsError);
    CHECK_NOTHROW(component_view(ComponentId::DIV, plain));
    NormalForm bare = determinize(split_div());
    CHECK_THROWS_AS(component_view(ComponentId::DIV, bare), LtsError);
}

TEST_CASE("per-trace identities at depth 5 on the corpus") {
    for (const Lts& l : corpus(40, 111)) {
        NormalForm nf = normalize(l, true);
        auto table = observation_table(
            {ComponentId::TR, ComponentId::DIV, ComponentId::ANT, ComponentId::SF,
             ComponentId::NF, ComponentId::SNF, ComponentId::ANF, ComponentId::SANF},
            nf);
        const auto& tr = table.views[0];
        const auto& div = table.views[1];
        const auto& ant = table.views[2];
        const auto& sf = table.views[3];
        const auto& nfv = table.views[4];
        const auto& snf = table.views[5];
        const auto& anf = table.views[6];
        const auto& sanf = table.views[7];
        auto extt = component_view(ComponentId::EXTT, nf);
        for (uint32_t q = 0; q < nf.states.size(); ++q) {
            // Tr = Div u Sf^Tr.
            CHECK(tr.bits[q] == (div.bits[q] || !sf.families[q].empty()));
            // anT = Sf^Tr \ extT.
            CHECK(ant.bits[q] == (!sf.families[q].empty() && !extt.bits[q]));
            // nF^Tr = snF^Tr = Tr \ Div.
            bool nondiv_trace = tr.bits[q] && !div.bits[q];
            CHECK(!nfv.families[q].empty() == nondiv_trace);
            CHECK(!snf.families[q].empty() == nondiv_trace);
            // anF^Tr = sanF^Tr = anT.
            CHECK(!anf.families[q].empty() == static_cast<bool>(ant.bits[q]));
            CHECK(!sanf.families[q].empty() == static_cast<bool>(ant.bits[q]));
            // Containments snF <= nF <= Sf and sanF <= anF <= Sf.
            for (const auto& m : snf.families[q].sets())
                CHECK(nfv.families[q].member(m));
            for (const auto& m : nfv.families[q].sets())
                CHECK(sf.families[q].member(m));
            for (const auto& m : sanf.families[q].sets())
                CHECK(anf.families[q].member(m));
            for (const auto& m : anf.families[q].sets())
                CHECK(sf.families[q].member(m));
        }
    }
}

TEST_CASE("every component view agrees with the oracle on the corpus") {
    for (const Lts& l : corpus(60, 131)) {
        auto report = crosscheck(l, 5);
        CAPTURE(render_lts(l));
        if (report.mismatch) {
            CAPTURE(show_trace(report.mismatch->trace));
            CAPTURE(component_name(report.mismatch->component));
        }
        CHECK(report.pass);
    }
}

TEST_CASE("trim keeps nothing observable away") {
    // Under (Sigma, Sf), a tau-loop tail carries no observation.
    Lts l = parse_lts("alphabet: a\ninit: s0\ntrans:\ns0 a s1\ns1 tau s1\n");
    NormalForm nf = normalize(l, false);
    NormalForm trimmed = trim_relevant({ComponentId::SF}, nf);
    CHECK(trimmed.states.size() == 1);  // only the stable initial state

    // With Tr in the signature nothing is trimmed.
    NormalForm full = trim_relevant({ComponentId::TR, ComponentId::SF}, nf);
    CHECK(full.states.size() == nf.states.size());

    // LLG under (Sigma, Sf) trims to the empty automaton.
    NormalForm empty = trim_relevant({ComponentId::SF}, normalize(llg(), false));
    CHECK(empty.empty());
}

TEST_CASE("trim under csp-fdi truncates strictly after minimal divergence") {
    Lts l = parse_lts(
        "alphabet: a\ninit: s0\ntrans:\ns0 a s1\ns1 tau s1\ns1 a s2\n");
    NormalForm nf = normalize(l, true);
    CHECK(nf.states.size() == 3);
    NormalForm trimmed = trim_relevant({ComponentId::ANF, ComponentId::MIND}, nf);
    CHECK(trimmed.states.size() == 2);  // s2's subset is strictly behind minD
    // Observations on surviving traces are unchanged.
    auto anf_full = component_view(ComponentId::ANF, nf);
    auto anf_trim = component_view(ComponentId::ANF, trimmed);
    auto q_full = state_of(nf, {}).value();
    auto q_trim = state_of(trimmed, {}).value();
    CHECK(anf_full.families[q_full] == anf_trim.families[q_trim]);
}

TEST_CASE("bounded_limit_check examples") {
    // Run({a}): the lasso a^omega, all prefixes traces.
    auto run_report = bounded_limit_check(make_constant(ConstantKind::run, {Action("a")}), 4);
    CHECK(run_report.pass);
    CHECK(run_report.lassos > 0);

    // LLG: no visible lassos at all.
    auto llg_report = bounded_limit_check(llg(), 4);
    CHECK(llg_report.pass);
    CHECK(llg_report.lassos == 0);

    // b a^omega is not always-nondivergent but eventually-always.
    auto fig_report = bounded_limit_check(split_div(), 5);
    CHECK(fig_report.pass);
    CHECK(fig_report.lassos > 0);
}

TEST_CASE("bounded_limit_check passes on the corpus") {
    for (const Lts& l : corpus(40, 149)) {
        auto report = bounded_limit_check(l, 5);
        CAPTURE(report.counterexample);
        CHECK(report.pass);
    }
}

TEST_CASE("lasso classification details on the split-divergence process") {
    // Check the derived bits directly on the refined normal form.
    NormalForm nf = normalize(split_div(), true);
    auto qb = state_of(nf, {Action("b")}).value();
    auto qba = state_of(nf, {Action("b"), Action("a")}).value();
    CHECK(nf.states[qb].divergent);       // prefix b diverges: not anI
    CHECK(!nf.states[qba].divergent);     // the a-cycle is nondivergent: eanI
    CHECK(nf.states[qba].next(nf.action_index(Action("a")).value()) == qba);
}
