#include "ltseq/ops.hpp"

#include <algorithm>
#include <map>

namespace ltseq {

RenameRelation::RenameRelation(std::vector<std::pair<Action, Action>> pairs)
    : pairs_(std::move(pairs)) {
    for (const auto& [a, b] : pairs_)
        if (a.is_tau() || b.is_tau())
            throw LtsError("tau in renaming relation");
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool RenameRelation::in_domain(const Action& a) const {
    return std::any_of(pairs_.begin(), pairs_.end(),
                       [&](const auto& p) { return p.first == a; });
}

std::vector<Action> RenameRelation::apply(const Action& a) const {
    std::vector<Action> out;
    for (const auto& [x, y] : pairs_)
        if (x == a) out.push_back(y);
    if (out.empty()) out.push_back(a);  // identity outside the domain
    return out;
}

Lts prefix(const Action& a, const Lts& l) {
    if (a.is_tau()) throw LtsError("prefix with tau is not defined");
    LtsBuilder b;
    for (StateId s = 0; s < l.num_states(); ++s) b.add_state(l.state_name(s));
    StateId fresh = b.add_state(fresh_state_name(l, "i0"));
    for (const auto& x : l.alphabet()) b.add_action(x);
    b.add_action(a);
    for (StateId s = 0; s < l.num_states(); ++s)
        for (const auto& [x, t] : l.succ(s)) b.add_transition(s, x, t);
    b.add_transition(fresh, a, l.init());
    b.set_init(fresh);
    return std::move(b).build();
}

Lts hide(const std::set<Action>& a, const Lts& l) {
    if (a.count(Action::tau())) throw LtsError("tau in hiding set");
    LtsBuilder b;
    for (StateId s = 0; s < l.num_states(); ++s) b.add_state(l.state_name(s));
    for (const auto& x : l.alphabet())
        if (!a.count(x)) b.add_action(x);
    for (StateId s = 0; s < l.num_states(); ++s)
        for (const auto& [x, t] : l.succ(s))
            b.add_transition(s, a.count(x) ? Action::tau() : x, t);
    b.set_init(l.init());
    return std::move(b).build();
}

Lts rename(const RenameRelation& phi, const Lts& l) {
    LtsBuilder b;
    for (StateId s = 0; s < l.num_states(); ++s) b.add_state(l.state_name(s));
    for (const auto& x : l.alphabet())
        for (const auto& y : phi.apply(x)) b.add_action(y);
    for (StateId s = 0; s < l.num_states(); ++s)
        for (const auto& [x, t] : l.succ(s)) {
            if (x.is_tau()) {
                b.add_transition(s, x, t);
            } else {
                for (const auto& y : phi.apply(x)) b.add_transition(s, y, t);
            }
        }
    b.set_init(l.init());
    return std::move(b).build();
}

Lts parallel(const Lts& l1, const Lts& l2) {
    std::vector<Action> shared;
    std::set_intersection(l1.alphabet().begin(), l1.alphabet().end(),
                          l2.alphabet().begin(), l2.alphabet().end(),
                          std::back_inserter(shared));
    auto is_shared = [&](const Action& a) {
        return std::binary_search(shared.begin(), shared.end(), a);
    };

    LtsBuilder b;
    std::map<std::pair<StateId, StateId>, StateId> numbered;
    std::vector<std::pair<StateId, StateId>> order;
    auto lookup = [&](StateId s1, StateId s2) {
        auto key = std::make_pair(s1, s2);
        auto it = numbered.find(key);
        if (it != numbered.end()) return it->second;
        StateId id = b.add_state("p" + std::to_string(order.size()));
        numbered.emplace(key, id);
        order.push_back(key);
        return id;
    };

    lookup(l1.init(), l2.init());
    for (size_t i = 0; i < order.size(); ++i) {
        auto [s1, s2] = order[i];
        StateId src = numbered.at(order[i]);
        for (const auto& [a, t1] : l1.succ(s1))
            if (a.is_tau() || !is_shared(a))
                b.add_transition(src, a, lookup(t1, s2));
        for (const auto& [a, t2] : l2.succ(s2))
            if (a.is_tau() || !is_shared(a))
                b.add_transition(src, a, lookup(s1, t2));
        for (const auto& [a, t1] : l1.succ(s1)) {
            if (a.is_tau() || !is_shared(a)) continue;
            for (const auto& [x, t2] : l2.succ(s2))
                if (x == a) b.add_transition(src, a, lookup(t1, t2));
        }
    }

    for (const auto& a : l1.alphabet()) b.add_action(a);
    for (const auto& a : l2.alphabet()) b.add_action(a);
    b.set_init(0);
    return std::move(b).build();
}

Lts make_constant(ConstantKind kind, const std::set<Action>& a) {
    for (const auto& x : a)
        if (x.is_tau()) throw LtsError("tau in constant alphabet");
    LtsBuilder b;
    switch (kind) {
        case ConstantKind::stop: {
            StateId s = b.add_state("s0");
            for (const auto& x : a) b.add_action(x);
            b.set_init(s);
            break;
        }
        case ConstantKind::run: {
            StateId s = b.add_state("s0");
            for (const auto& x : a) {
                b.add_action(x);
                b.add_transition(s, x, s);
            }
            b.set_init(s);
            break;
        }
        case ConstantKind::rd: {
            StateId s = b.add_state("s0");
            StateId d = b.add_state("s1");
            for (const auto& x : a) {
                b.add_action(x);
                b.add_transition(s, x, s);
            }
            b.add_transition(s, Action::tau(), d);
            b.set_init(s);
            break;
        }
        case ConstantKind::rdl: {
            StateId s = b.add_state("s0");
            StateId d = b.add_state("s1");
            for (const auto& x : a) {
                b.add_action(x);
                b.add_transition(s, x, s);
            }
            b.add_transition(s, Action::tau(), s);
            b.add_transition(s, Action::tau(), d);
            b.set_init(s);
            break;
        }
        case ConstantKind::lc: {
            StateId s = b.add_state("s0");
            StateId t = b.add_state("s1");
            Action c1 = Action("1").with_tag(0), c2 = Action("2").with_tag(0);
            b.add_action(c1);
            b.add_action(c2);
            b.add_transition(s, c1, t);
            b.add_transition(s, c2, t);
            b.set_init(s);
            break;
        }
    }
    return std::move(b).build();
}

Lts retag(TagDirection dir, int i, const Lts& l) {
    std::vector<std::pair<Action, Action>> pairs;
    if (dir == TagDirection::up) {
        for (const auto& a : l.alphabet()) {
            if (a.outer_tag() == i)
                throw LtsError("retag up: " + a.token() + " already carries tag " +
                               std::to_string(i));
            pairs.emplace_back(a, a.with_tag(i));
        }
    } else {
        for (const auto& a : l.alphabet()) {
            if (a.outer_tag() != i) continue;
            Action bare = a.strip_outer_tag();
            if (l.in_alphabet(bare))
                throw LtsError("retag down: " + a.token() + " collides with " +
                               bare.token());
            pairs.emplace_back(a, bare);
        }
    }
    return rename(RenameRelation(std::move(pairs)), l);
}

Lts internal_choice(const Lts& l1, const Lts& l2) {
    LtsBuilder b;
    StateId init = b.add_state("i0");
    std::vector<StateId> m1(l1.num_states()), m2(l2.num_states());
    for (StateId s = 0; s < l1.num_states(); ++s)
        m1[s] = b.add_state("l." + l1.state_name(s));
    for (StateId s = 0; s < l2.num_states(); ++s)
        m2[s] = b.add_state("r." + l2.state_name(s));
    for (const auto& a : l1.alphabet()) b.add_action(a);
    for (const auto& a : l2.alphabet()) b.add_action(a);
    for (StateId s = 0; s < l1.num_states(); ++s)
        for (const auto& [a, t] : l1.succ(s)) b.add_transition(m1[s], a, m1[t]);
    for (StateId s = 0; s < l2.num_states(); ++s)
        for (const auto& [a, t] : l2.succ(s)) b.add_transition(m2[s], a, m2[t]);
    b.add_transition(init, Action::tau(), m1[l1.init()]);
    b.add_transition(init, Action::tau(), m2[l2.init()]);
    b.set_init(init);
    return std::move(b).build();
}

Lts internal_choice_composed(const Lts& l1, const Lts& l2) {
    Action c1 = Action("1").with_tag(0), c2 = Action("2").with_tag(0);
    Lts left = prefix(c1, retag(TagDirection::up, 1, l1));
    Lts right = prefix(c2, retag(TagDirection::up, 2, l2));
    Lts combined = parallel(make_constant(ConstantKind::lc, {}),
                            parallel(left, right));
    Lts hidden = hide({c1, c2}, combined);
    std::vector<std::pair<Action, Action>> untag;
    for (const auto& a : l1.alphabet()) untag.emplace_back(a.with_tag(1), a);
    for (const auto& a : l2.alphabet()) untag.emplace_back(a.with_tag(2), a);
    return reachable_part(rename(RenameRelation(std::move(untag)), hidden));
}

}  // namespace ltseq
