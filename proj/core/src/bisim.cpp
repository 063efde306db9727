#include "ltseq/bisim.hpp"

#include <algorithm>
#include <map>

namespace ltseq {

namespace {

// Coarsest partition of the combined state space such that related states
// have matching (label, block) successor sets. Signature-based refinement;
// quadratic-ish but the inputs here are small.
std::vector<int> refine(const std::vector<std::vector<std::pair<Action, int>>>& succ) {
    size_t n = succ.size();
    std::vector<int> block(n, 0);
    size_t num_blocks = 1;
    for (;;) {
        std::map<std::pair<int, std::vector<std::pair<Action, int>>>, int> sig_to_block;
        std::vector<int> next(n);
        for (size_t s = 0; s < n; ++s) {
            std::vector<std::pair<Action, int>> sig;
            sig.reserve(succ[s].size());
            for (const auto& [a, t] : succ[s]) sig.emplace_back(a, block[t]);
            std::sort(sig.begin(), sig.end());
            sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
            auto key = std::make_pair(block[s], std::move(sig));
            auto [it, fresh] = sig_to_block.emplace(std::move(key), static_cast<int>(sig_to_block.size()));
            (void)fresh;
            next[s] = it->second;
        }
        if (sig_to_block.size() == num_blocks) return next;
        num_blocks = sig_to_block.size();
        block = std::move(next);
    }
}

std::vector<bool> reachable_mask(const Lts& l) {
    std::vector<bool> seen(l.num_states(), false);
    std::vector<StateId> q{l.init()};
    seen[l.init()] = true;
    for (size_t i = 0; i < q.size(); ++i)
        for (const auto& [a, t] : l.succ(q[i]))
            if (!seen[t]) { seen[t] = true; q.push_back(t); }
    return seen;
}

}  // namespace

BisimResult bisimilar(const Lts& l1, const Lts& l2) {
    BisimResult r;
    if (l1.alphabet() != l2.alphabet()) return r;

    size_t n1 = l1.num_states();
    std::vector<std::vector<std::pair<Action, int>>> succ(n1 + l2.num_states());
    for (StateId s = 0; s < n1; ++s)
        for (const auto& [a, t] : l1.succ(s)) succ[s].emplace_back(a, static_cast<int>(t));
    for (StateId s = 0; s < l2.num_states(); ++s)
        for (const auto& [a, t] : l2.succ(s))
            succ[n1 + s].emplace_back(a, static_cast<int>(n1 + t));

    auto block = refine(succ);
    if (block[l1.init()] != block[n1 + l2.init()]) return r;

    r.equal = true;
    auto m1 = reachable_mask(l1);
    auto m2 = reachable_mask(l2);
    for (StateId s = 0; s < n1; ++s) {
        if (!m1[s]) continue;
        for (StateId t = 0; t < l2.num_states(); ++t)
            if (m2[t] && block[s] == block[n1 + t])
                r.relation.emplace_back(l1.state_name(s), l2.state_name(t));
    }
    return r;
}

Lts bisim_quotient(const Lts& input) {
    Lts l = reachable_part(input);
    std::vector<std::vector<std::pair<Action, int>>> succ(l.num_states());
    for (StateId s = 0; s < l.num_states(); ++s)
        for (const auto& [a, t] : l.succ(s)) succ[s].emplace_back(a, static_cast<int>(t));
    auto block = refine(succ);

    // BFS over blocks from the initial block for stable numbering.
    int nblocks = *std::max_element(block.begin(), block.end()) + 1;
    std::vector<std::vector<std::pair<Action, int>>> bsucc(nblocks);
    for (StateId s = 0; s < l.num_states(); ++s)
        for (const auto& [a, t] : l.succ(s)) bsucc[block[s]].emplace_back(a, block[t]);
    for (auto& v : bsucc) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    std::vector<int> number(nblocks, -1);
    std::vector<int> order{block[l.init()]};
    number[block[l.init()]] = 0;
    for (size_t i = 0; i < order.size(); ++i)
        for (const auto& [a, t] : bsucc[order[i]])
            if (number[t] < 0) {
                number[t] = static_cast<int>(order.size());
                order.push_back(t);
            }

    LtsBuilder b;
    for (size_t i = 0; i < order.size(); ++i) b.add_state("q" + std::to_string(i));
    for (const auto& a : l.alphabet()) b.add_action(a);
    for (int blk : order)
        for (const auto& [a, t] : bsucc[blk])
            b.add_transition(number[blk], a, number[t]);
    b.set_init(0);
    return std::move(b).build();
}

}  // namespace ltseq
