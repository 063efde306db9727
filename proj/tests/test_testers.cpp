#include <doctest.h>

#include "ltseq/lts_io.hpp"
#include "ltseq/ops.hpp"
#include "ltseq/oracle.hpp"
#include "ltseq/testers.hpp"
#include "test_util.hpp"

using namespace ltseq;
using namespace ltseq::test;

namespace {

const Action A{"a"}, B{"b"};

bool sf_detects(const Lts& l, const Trace& sigma, const std::set<Action>& refusal) {
    std::set<Action> ambient(l.alphabet().begin(), l.alphabet().end());
    Lts t = tester_sf({sigma, refusal, ambient});
    auto bs = enumerate_bounded(parallel(l, t), static_cast<int>(sigma.size()) + 1);
    return bs.dl.count(sigma) > 0;
}

}  // namespace

TEST_CASE("tester_sf on the two-distinguishers pair") {
    // (eps, {a}) not in Sf(a.Stop), and the composition cannot deadlock at eps.
    CHECK(!sf_detects(a_stop(), {}, {A}));
    auto direct = enumerate_bounded(a_stop(), 1);
    CHECK(!(direct.sf.count({}) && direct.sf.at({}).member({0})));

    // For the tau/a process both sides flip.
    CHECK(sf_detects(tau_a(), {}, {A}));
    auto other = enumerate_bounded(tau_a(), 1);
    CHECK((other.sf.count({}) && other.sf.at({}).member({0})));
}

TEST_CASE("tester_sf biconditional on random samples") {
    auto c = corpus(25, 301);
    uint64_t salt = 0;
    for (const Lts& l : c) {
        if (l.alphabet().empty()) continue;
        auto bs = enumerate_bounded(l, 3);
        // A handful of (sigma, A) samples per process, |sigma| <= 3.
        std::vector<Trace> sigmas{{}};
        for (const auto& t : bs.tr)
            if (!t.empty()) sigmas.push_back(t);
        int used = 0;
        for (const auto& sigma : sigmas) {
            if (used >= 4) break;
            ++used;
            std::set<Action> refusal;
            for (size_t i = 0; i < l.alphabet().size(); ++i)
                if ((salt++ + i) % 2 == 0) refusal.insert(l.alphabet()[i]);
            RefusalAntichain::Set indices;
            for (uint32_t i = 0; i < l.alphabet().size(); ++i)
                if (refusal.count(l.alphabet()[i])) indices.push_back(i);
            bool in_sf = bs.sf.count(sigma) && bs.sf.at(sigma).member(indices);
            CHECK(sf_detects(l, sigma, refusal) == in_sf);
        }
    }
}

TEST_CASE("tester_tr shapes") {
    Lts chain = tester_tr({A, B}, {B}, {A, B});
    CHECK(chain.num_states() == 3);

    // sigma = eps: single looped state.
    Lts trivial = tester_tr({}, {A}, {A});
    CHECK(trivial.num_states() == 1);
    CHECK(trivial.num_transitions() == 2);  // tau loop and a-loop
}

TEST_CASE("tester_tr wiring: tagged trace probe switches the loop block") {
    // M over {a}: can or cannot execute the probe trace "a".
    Lts m_can = parse_lts("alphabet: a\ninit: s0\ntrans:\ns0 a s1\n");
    Lts m_cant = parse_lts("alphabet: a\ninit: s0\ntrans:\n");
    const Trace sigma{A};
    std::set<Action> loops{Action("x").with_tag(2)};

    auto compose = [&](const Lts& m) {
        Lts up = retag(TagDirection::up, 1, m);
        std::set<Action> tagged(up.alphabet().begin(), up.alphabet().end());
        Trace tagged_sigma;
        for (const auto& x : sigma) tagged_sigma.push_back(x.with_tag(1));
        std::set<Action> ambient = tagged;
        Lts t = tester_tr(tagged_sigma, loops, ambient);
        return retag(TagDirection::down, 2, hide(tagged, parallel(t, up)));
    };

    // With the trace available: Tr = Div = loops* up to the bound.
    auto bs_can = enumerate_bounded(compose(m_can), 2);
    Action x{"x"};
    CHECK(bs_can.tr == std::set<Trace>{{}, {x}, {x, x}});
    CHECK(bs_can.div == bs_can.tr);
    CHECK(bs_can.sf.empty());

    // Without it: only the empty trace.
    auto bs_cant = enumerate_bounded(compose(m_cant), 2);
    CHECK(bs_cant.tr == std::set<Trace>{{}});
    CHECK(bs_cant.div == bs_cant.tr);
    CHECK(bs_cant.sf.empty());
}

TEST_CASE("tester_trace_loop detects Tr and anT") {
    const Action z{"z"};
    auto check_contract = [&](const Lts& l, const Trace& sigma) {
        std::set<Action> ambient(l.alphabet().begin(), l.alphabet().end());
        Lts t = tester_trace_loop(sigma, z, ambient);
        Lts composed = parallel(l, t);
        int k = static_cast<int>(sigma.size()) + 1;
        auto bs = enumerate_bounded(composed, k);
        auto base = enumerate_bounded(l, k);
        Trace sigma_z = sigma;
        sigma_z.push_back(z);
        CHECK((base.tr.count(sigma) > 0) == (bs.div.count(sigma_z) > 0));
        CHECK((base.ant.count(sigma) > 0) == (bs.mind.count(sigma_z) > 0));
    };

    // a stays nondivergent, so a.z is a minimal divergence of the composition.
    check_contract(split_div(), {A});
    check_contract(split_div(), {B});
    check_contract(split_div(), {B, A});
    // Mismatched prefix: absent trace is not detected.
    check_contract(split_div(), {B, B});
    // LLG: eps not in anT, so z is not minimal.
    check_contract(llg(), {});

    for (const Lts& l : corpus(20, 401)) {
        auto bs = enumerate_bounded(l, 2);
        int used = 0;
        for (const auto& t : bs.tr) {
            if (used++ >= 3) break;
            check_contract(l, t);
        }
    }
}
