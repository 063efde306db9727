#pragma once

#include <set>
#include <vector>

#include "ltseq/lts.hpp"

namespace ltseq {

// Relational renaming Phi: a finite set of (visible, visible) pairs.
// Phi(a,b) holds iff (a,b) is a pair or a = b outside the domain, so
// actions the relation does not mention keep their label.
class RenameRelation {
public:
    RenameRelation() = default;
    explicit RenameRelation(std::vector<std::pair<Action, Action>> pairs);

    const std::vector<std::pair<Action, Action>>& pairs() const { return pairs_; }
    bool in_domain(const Action& a) const;
    // All b with Phi(a,b); a itself when a is outside the domain.
    std::vector<Action> apply(const Action& a) const;

private:
    std::vector<std::pair<Action, Action>> pairs_;  // sorted, unique
};

// a.L — fresh initial state, one a-transition into the old initial state;
// a joins the alphabet. tau is rejected.
Lts prefix(const Action& a, const Lts& l);

// L \ A — labels in A become tau, the alphabet loses A. Actions of A
// outside the alphabet are ignored.
Lts hide(const std::set<Action>& a, const Lts& l);

// L Phi.
Lts rename(const RenameRelation& phi, const Lts& l);

// L1 || L2 — shared actions synchronize, the rest and tau interleave.
// Only the reachable part of the product is constructed.
Lts parallel(const Lts& l1, const Lts& l2);

enum class ConstantKind { stop, run, rd, rdl, lc };

// The simple process constants; lc ignores the action set and is the
// two-state choice gadget over {1@0, 2@0}.
Lts make_constant(ConstantKind kind, const std::set<Action>& a);

enum class TagDirection { up, down };

// up: every visible action a becomes a@i. down: every a@i becomes a,
// other actions pass through unchanged. Token collisions are rejected.
Lts retag(TagDirection dir, int i, const Lts& l);

// Internal choice, direct form: fresh initial state with tau-moves into
// disjoint copies of both operands.
Lts internal_choice(const Lts& l1, const Lts& l2);

// Internal choice assembled from the four primitive operators and the lc
// constant: ((lc || c1.up1(L1) || c2.up2(L2)) \ {c1,c2}) Phi with the final
// Phi stripping the tags again. Component-equal to the direct form under
// (Sigma, Sf, Div).
Lts internal_choice_composed(const Lts& l1, const Lts& l2);

}  // namespace ltseq
