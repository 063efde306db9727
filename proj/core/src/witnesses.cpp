#include "ltseq/congruence.hpp"

#include "ltseq/lts_io.hpp"

namespace ltseq {

namespace {

// Each named pair is equated by every congruence on the weak side of the
// edges it serves and distinguished by the strong side. Kept as literal
// documents so the suite replays them through the full parser.

const char* kStopA = "alphabet: a\ninit: s0\ntrans:\n";
const char* kStopNone = "alphabet:\ninit: s0\ntrans:\n";
const char* kRunA = "alphabet: a\ninit: s0\ntrans:\ns0 a s0\n";

// The three empty-alphabet processes.
const char* kDlg = "alphabet:\ninit: s0\ntrans:\n";
const char* kLlg = "alphabet:\ninit: s0\ntrans:\ns0 tau s0\n";
const char* kBlg = "alphabet:\ninit: s0\ntrans:\ns0 tau s0\ns0 tau s1\n";

// a.Stop({a}) against the tau/a branching process: the pair behind the
// two-minimal-distinguishers example.
const char* kAStop = "alphabet: a\ninit: s0\ntrans:\ns0 a s1\n";
const char* kTauA = "alphabet: a\ninit: s0\ntrans:\ns0 tau s1\ns0 a s2\n";

// Run({a}) against RDL({a}): same traces, divergence added.
const char* kRdlA = "alphabet: a\ninit: s0\ntrans:\ns0 a s0\ns0 tau s0\ns0 tau s1\n";

// RD({a}) against RDL({a}): same stable failures, divergence added.
const char* kRdA = "alphabet: a\ninit: s0\ntrans:\ns0 a s0\ns0 tau s1\n";

// Livelocked initial state, once with and once without an escape action;
// no stable failures on either side.
const char* kLockPlain = "alphabet: a\ninit: s0\ntrans:\ns0 tau s0\n";
const char* kLockStep = "alphabet: a\ninit: s0\ntrans:\ns0 tau s0\ns0 a s1\ns1 tau s1\n";

// One or two steps into a livelock: traces differ only past the minimal
// divergence trace.
const char* kDiv1 = "alphabet: a\ninit: s0\ntrans:\ns0 a s1\ns1 tau s1\n";
const char* kDiv2 = "alphabet: a\ninit: s0\ntrans:\ns0 a s1\ns1 tau s1\ns1 a s2\ns2 tau s2\n";

// Behind the minimal divergence trace a, the trace aa deadlocks on both
// sides but diverges only on the left.
const char* kPostDivA =
    "alphabet: a\ninit: s0\ntrans:\ns0 a s1\ns1 tau s1\ns1 a s2\ns1 a s3\ns2 tau s2\n";
const char* kPostDivB =
    "alphabet: a\ninit: s0\ntrans:\ns0 a s1\ns1 tau s1\ns1 a s3\n";

// The tau/a pair with the a-successor made divergent: sanF cannot see the
// initial refusal of a any more, anF still can.
const char* kHideMinA = "alphabet: a\ninit: s0\ntrans:\ns0 a s1\ns1 tau s1\n";
const char* kHideMinB = "alphabet: a\ninit: s0\ntrans:\ns0 tau s2\ns0 a s1\ns1 tau s1\n";

// A stable failure appearing only behind the minimal divergence trace.
const char* kPostSfA = "alphabet: a\ninit: s0\ntrans:\ns0 a s1\ns1 tau s1\n";
const char* kPostSfB = "alphabet: a\ninit: s0\ntrans:\ns0 a s1\ns1 tau s1\ns0 a s2\n";

// Behind the minimal divergence trace a, the trace aa refuses {a,b} on the
// left but only {b} on the right; refusals of a vanish from both under the
// strong transform since aaa never diverges.
const char* kSnfA =
    "alphabet: a b\ninit: s0\ntrans:\ns0 a s1\ns1 tau s1\ns1 a s2\ns1 a s3\ns3 a s4\n";
const char* kSnfB =
    "alphabet: a b\ninit: s0\ntrans:\ns0 a s1\ns1 tau s1\ns1 a s3\ns3 a s4\n";

// At the nondivergent trace aa inside the divergence region, the left
// refuses a with aaa divergent, the right can only continue; after
// subtracting divergence-completing actions both families collapse.
const char* kNfA =
    "alphabet: a\ninit: s0\ntrans:\ns0 a s1\ns1 tau s1\ns1 a s2\ns2 a s3\ns3 tau s3\n";
const char* kNfB =
    "alphabet: a\ninit: s0\ntrans:\ns0 a s1\ns1 tau s1\ns1 a s2\ns1 a s4\ns2 a s3\ns3 tau s3\n";

std::vector<HasseWitness> make_witnesses() {
    auto mk = [](int weaker, int stronger, const char* label, const char* a,
                 const char* b) {
        return HasseWitness{weaker, stronger, label, parse_lts(a), parse_lts(b)};
    };
    return {
        mk(1, 2, "alphabet only", kStopA, kStopNone),
        mk(2, 3, "traces", kStopA, kRunA),
        mk(2, 4, "deadlock vs livelock", kDlg, kLlg),
        mk(2, 9, "deadlock vs livelock", kDlg, kLlg),
        mk(3, 5, "initial refusal", kAStop, kTauA),
        mk(3, 10, "divergence under equal traces", kRunA, kRdlA),
        mk(4, 5, "trace behind a livelock", kLockStep, kLockPlain),
        mk(4, 6, "rd vs rdl", kRdA, kRdlA),
        mk(5, 7, "rd vs rdl", kRdA, kRdlA),
        mk(6, 7, "trace past minimal divergence", kDiv1, kDiv2),
        mk(7, 8, "nonminimal divergence", kPostDivA, kPostDivB),
        mk(9, 10, "trace behind a livelock", kLockPlain, kLockStep),
        mk(9, 12, "initial refusal", kAStop, kTauA),
        mk(10, 11, "nonminimal divergence", kPostDivA, kPostDivB),
        mk(10, 13, "initial refusal", kAStop, kTauA),
        mk(11, 14, "initial refusal", kAStop, kTauA),
        mk(12, 13, "trace past minimal divergence", kDiv1, kDiv2),
        mk(12, 15, "refusal of a divergence completer", kHideMinA, kHideMinB),
        mk(13, 14, "nonminimal divergence", kPostDivA, kPostDivB),
        mk(13, 16, "refusal of a divergence completer", kHideMinA, kHideMinB),
        mk(14, 17, "refusal of a divergence completer", kHideMinA, kHideMinB),
        mk(14, 18, "refusal inside the divergence region", kSnfA, kSnfB),
        mk(15, 6, "stable failure inside the divergence region", kPostSfA, kPostSfB),
        mk(15, 16, "trace past minimal divergence", kDiv1, kDiv2),
        mk(16, 7, "stable failure inside the divergence region", kPostSfA, kPostSfB),
        mk(16, 17, "nonminimal divergence", kPostDivA, kPostDivB),
        mk(17, 19, "refusal inside the divergence region", kSnfA, kSnfB),
        mk(18, 19, "refusal of a divergence completer", kHideMinA, kHideMinB),
        mk(19, 20, "refusal completing a divergence", kNfA, kNfB),
        mk(20, 8, "livelock vs bothlock", kLlg, kBlg),
    };
}

}  // namespace

const std::vector<HasseWitness>& hasse_witnesses() {
    static const std::vector<HasseWitness> w = make_witnesses();
    return w;
}

}  // namespace ltseq
