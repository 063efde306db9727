#include <doctest.h>

#include "ltseq/lts_io.hpp"
#include "ltseq/ops.hpp"
#include "ltseq/oracle.hpp"
#include "test_util.hpp"

using namespace ltseq;
using namespace ltseq::test;

TEST_CASE("enumerate_bounded on the split-divergence process at depth 2") {
    // Hand-computed from the drawing, then frozen.
    auto bs = enumerate_bounded(split_div(), 2);
    const Action a{"a"}, b{"b"};
    CHECK(bs.tr == std::set<Trace>{{}, {a}, {b}, {a, a}, {b, a}});
    CHECK(bs.div == std::set<Trace>{{b}});
    CHECK(bs.mind == std::set<Trace>{{b}});
    CHECK(bs.ant == std::set<Trace>{{}, {a}, {a, a}});
    CHECK(bs.extt == std::set<Trace>{{b}, {b, a}});
    // At the empty trace the initial state is stable and offers {a,b}.
    CHECK(bs.sf.at({}).sets() == std::vector<RefusalAntichain::Set>{{}});
}

TEST_CASE("enumerate_bounded on DLG and rdl(empty)") {
    auto bs = enumerate_bounded(dlg(), 3);
    CHECK(bs.sf.at({}).member({}));
    CHECK(bs.div.empty());
    CHECK(bs.dl == std::set<Trace>{{}});

    auto chaos = enumerate_bounded(make_constant(ConstantKind::rdl, {}), 3);
    CHECK(chaos.div == std::set<Trace>{{}});
    CHECK(chaos.sf.at({}).sets() == std::vector<RefusalAntichain::Set>{{}});
    CHECK(chaos.dl == std::set<Trace>{{}});
}

TEST_CASE("oracle self-consistency on the corpus") {
    for (const Lts& l : corpus(60, 201)) {
        auto bs = enumerate_bounded(l, 4);
        // Tr = Div u Sf^Tr.
        for (const auto& t : bs.tr) {
            bool in_div = bs.div.count(t) > 0;
            bool in_sf = bs.sf.count(t) > 0;
            CHECK((in_div || in_sf));
        }
        // Dl = { s | (s, Sigma) in Sf }.
        RefusalAntichain::Set sigma;
        for (uint32_t i = 0; i < l.alphabet().size(); ++i) sigma.push_back(i);
        for (const auto& t : bs.tr) {
            bool dl = bs.dl.count(t) > 0;
            bool full = bs.sf.count(t) && bs.sf.at(t).member(sigma);
            CHECK(dl == full);
        }
        // minD is the minimal part of Div; extT covers Div; ant partitions.
        for (const auto& t : bs.mind) {
            CHECK(bs.div.count(t));
            for (size_t i = 0; i < t.size(); ++i)
                CHECK(!bs.div.count(Trace(t.begin(), t.begin() + i)));
        }
        for (const auto& t : bs.div) CHECK(bs.extt.count(t));
        for (const auto& t : bs.tr)
            CHECK((bs.extt.count(t) > 0) != (bs.ant.count(t) > 0));
    }
}

TEST_CASE("depth restriction is consistent") {
    for (const Lts& l : corpus(20, 303)) {
        auto deep = enumerate_bounded(l, 4);
        auto shallow = enumerate_bounded(l, 3);
        for (const auto& t : shallow.tr) CHECK(deep.tr.count(t));
        for (const auto& t : deep.tr)
            if (t.size() <= 3) CHECK(shallow.tr.count(t));
        CHECK(shallow.sf.size() <= deep.sf.size());
        for (const auto& [t, fam] : shallow.sf) CHECK(deep.sf.at(t) == fam);
        for (const auto& t : deep.mind)
            if (t.size() <= 3) CHECK(shallow.mind.count(t));
    }
}

TEST_CASE("crosscheck passes on the corpus and on the empty-alphabet trio") {
    for (const Lts& l : {dlg(), llg(), blg(), split_div()}) {
        auto report = crosscheck(l, 6);
        CHECK(report.pass);
    }
    for (const Lts& l : corpus(40, 404)) CHECK(crosscheck(l, 5).pass);
}

TEST_CASE("crosscheck names the component and trace under fault injection") {
    Lts l = split_div();
    NormalForm nf = normalize(l, true);
    // Corrupt the refusal antichain of the state reached by the trace "a".
    auto ai = nf.action_index(Action("a"));
    REQUIRE(ai.has_value());
    auto next = nf.states[nf.initial].next(*ai);
    REQUIRE(next.has_value());
    nf.states[*next].refusals = RefusalAntichain::none();
    auto report = crosscheck_against(nf, l, 3);
    CHECK(!report.pass);
    REQUIRE(report.mismatch.has_value());
    CHECK(report.mismatch->component == ComponentId::SF);
    CHECK(report.mismatch->trace == Trace{Action("a")});
}

TEST_CASE("random_lts: determinism and contracts") {
    GenParams p;
    p.seed = 99;
    p.states = 6;
    p.alphabet_size = 3;
    p.density = 1.8;
    p.tau_prob = 0.4;
    Lts a = random_lts(p);
    Lts b = random_lts(p);
    CHECK(render_lts(a) == render_lts(b));

    GenParams zero;
    zero.density = 0;
    zero.states = 1;
    zero.alphabet_size = 2;
    Lts stop = random_lts(zero);
    CHECK(stop.num_transitions() == 0);
    CHECK(stop.alphabet().size() == 2);

    // Large sample: everything validates (build() would throw otherwise)
    // and the advertised shapes all occur.
    bool tau_cycle = false, unreachable = false, deadlock = false, branch = false;
    for (uint64_t seed = 0; seed < 400; ++seed) {
        GenParams q;
        q.seed = seed;
        q.states = 5;
        q.alphabet_size = 2;
        q.density = 1.6;
        q.tau_prob = 0.35;
        Lts l = random_lts(q);
        if (reachable_part(l).num_states() < l.num_states()) unreachable = true;
        for (StateId s = 0; s < l.num_states(); ++s) {
            auto c = l.classify(s);
            if (c.divergent) tau_cycle = true;
            if (c.deadlock) deadlock = true;
            std::map<Action, int> fanout;
            for (const auto& [x, t] : l.succ(s))
                if (!x.is_tau() && ++fanout[x] > 1) branch = true;
        }
    }
    CHECK(tau_cycle);
    CHECK(unreachable);
    CHECK(deadlock);
    CHECK(branch);
}
