#include "ltseq/lts.hpp"

#include <algorithm>
#include <unordered_map>

namespace ltseq {

int Action::outer_tag() const {
    auto pos = token_.rfind('@');
    if (pos == std::string::npos) return -1;
    int tag = 0;
    for (size_t i = pos + 1; i < token_.size(); ++i) {
        char c = token_[i];
        if (c < '0' || c > '9') return -1;
        tag = tag * 10 + (c - '0');
    }
    return pos + 1 == token_.size() ? -1 : tag;
}

Action Action::strip_outer_tag() const {
    if (outer_tag() < 0) return *this;
    return Action(token_.substr(0, token_.rfind('@')));
}

Action Action::with_tag(int i) const {
    return Action(token_ + "@" + std::to_string(i));
}

bool is_valid_token(const std::string& token) {
    if (token.empty()) return false;
    size_t i = 0;
    auto base_char = [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
               (c >= '0' && c <= '9') || c == '_' || c == '.';
    };
    size_t base_len = 0;
    while (i < token.size() && base_char(token[i])) { ++i; ++base_len; }
    if (base_len == 0) return false;
    while (i < token.size()) {  // "@i" tag suffixes
        if (token[i] != '@') return false;
        ++i;
        size_t digits = 0;
        while (i < token.size() && token[i] >= '0' && token[i] <= '9') { ++i; ++digits; }
        if (digits == 0) return false;
    }
    return true;
}

std::string show_trace(const Trace& t) {
    if (t.empty()) return "<>";
    std::string out;
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) out += '.';
        out += t[i].token();
    }
    return out;
}

bool Lts::in_alphabet(const Action& a) const {
    return std::binary_search(alphabet_.begin(), alphabet_.end(), a);
}

std::optional<StateId> Lts::state_by_name(const std::string& name) const {
    for (StateId s = 0; s < names_.size(); ++s)
        if (names_[s] == name) return s;
    return std::nullopt;
}

size_t Lts::num_transitions() const {
    size_t n = 0;
    for (const auto& v : succ_) n += v.size();
    return n;
}

StateClass Lts::classify(StateId s) const {
    if (s >= names_.size()) throw LtsError("unknown state id");
    return classes_[s];
}

StateId LtsBuilder::add_state(const std::string& name) {
    for (StateId s = 0; s < names_.size(); ++s)
        if (names_[s] == name) return s;
    names_.push_back(name);
    return static_cast<StateId>(names_.size() - 1);
}

bool LtsBuilder::has_state(const std::string& name) const {
    return std::any_of(names_.begin(), names_.end(),
                       [&](const std::string& n) { return n == name; });
}

void LtsBuilder::add_action(const Action& a) { alphabet_.push_back(a); }

void LtsBuilder::add_transition(StateId src, const Action& label, StateId dst) {
    transitions_.push_back({src, label, dst});
}

namespace {

// Divergence for every state at once: a state diverges iff it reaches, via
// tau-transitions, a tau-cycle (tau-self-loops included). Cyclic tau-SCCs
// are found with Tarjan's algorithm, then propagated backwards.
std::vector<bool> divergent_states(
    const std::vector<std::vector<StateId>>& tau_succ) {
    size_t n = tau_succ.size();
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<StateId> stack;
    std::vector<bool> comp_cyclic;
    int next_index = 0;

    // Iterative Tarjan to avoid recursion depth limits.
    struct Frame { StateId v; size_t child; };
    for (StateId root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& [v, child] = frames.back();
            if (child < tau_succ[v].size()) {
                StateId w = tau_succ[v][child++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            } else {
                if (low[v] == index[v]) {
                    int c = static_cast<int>(comp_cyclic.size());
                    size_t members = 0;
                    bool self_loop = false;
                    StateId w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = c;
                        ++members;
                        for (StateId t : tau_succ[w])
                            if (t == w) self_loop = true;
                    } while (w != v);
                    comp_cyclic.push_back(members > 1 || self_loop);
                }
                StateId done = v;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().v] = std::min(low[frames.back().v], low[done]);
            }
        }
    }

    std::vector<bool> div(n, false);
    for (StateId s = 0; s < n; ++s) div[s] = comp_cyclic[comp[s]];
    // Backward closure over tau-edges, iterated to fixpoint (n is small).
    bool changed = true;
    while (changed) {
        changed = false;
        for (StateId s = 0; s < n; ++s) {
            if (div[s]) continue;
            for (StateId t : tau_succ[s])
                if (div[t]) { div[s] = true; changed = true; break; }
        }
    }
    return div;
}

}  // namespace

Lts LtsBuilder::build() && {
    Lts l;
    l.names_ = std::move(names_);

    std::sort(alphabet_.begin(), alphabet_.end());
    alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
    for (const auto& a : alphabet_)
        if (a.is_tau()) throw LtsError("tau in alphabet");
    l.alphabet_ = std::move(alphabet_);

    if (!init_) throw LtsError("missing init");
    if (*init_ >= l.names_.size()) throw LtsError("initial state out of range");
    l.init_ = *init_;

    l.succ_.assign(l.names_.size(), {});
    std::sort(transitions_.begin(), transitions_.end());
    transitions_.erase(std::unique(transitions_.begin(), transitions_.end()),
                       transitions_.end());
    for (const auto& t : transitions_) {
        if (t.src >= l.names_.size() || t.dst >= l.names_.size())
            throw LtsError("transition endpoint out of range");
        if (!t.label.is_tau() && !l.in_alphabet(t.label))
            throw LtsError("undeclared action " + t.label.token());
        l.succ_[t.src].emplace_back(t.label, t.dst);
    }
    for (auto& v : l.succ_) {
        std::sort(v.begin(), v.end(), [&](const auto& x, const auto& y) {
            if (x.first != y.first) return x.first < y.first;
            return l.names_[x.second] < l.names_[y.second];
        });
    }

    std::vector<std::vector<StateId>> tau_succ(l.names_.size());
    for (StateId s = 0; s < l.names_.size(); ++s)
        for (const auto& [a, t] : l.succ_[s])
            if (a.is_tau()) tau_succ[s].push_back(t);
    auto div = divergent_states(tau_succ);

    l.classes_.resize(l.names_.size());
    for (StateId s = 0; s < l.names_.size(); ++s) {
        StateClass c;
        c.stable = tau_succ[s].empty();
        c.deadlock = l.succ_[s].empty();
        c.divergent = div[s];
        l.classes_[s] = c;
    }
    return l;
}

Lts reachable_part(const Lts& l) {
    std::vector<bool> seen(l.num_states(), false);
    std::vector<StateId> queue{l.init()};
    seen[l.init()] = true;
    for (size_t i = 0; i < queue.size(); ++i)
        for (const auto& [a, t] : l.succ(queue[i]))
            if (!seen[t]) { seen[t] = true; queue.push_back(t); }

    LtsBuilder b;
    std::vector<StateId> map(l.num_states());
    for (StateId s = 0; s < l.num_states(); ++s)
        if (seen[s]) map[s] = b.add_state(l.state_name(s));
    for (const auto& a : l.alphabet()) b.add_action(a);
    for (StateId s = 0; s < l.num_states(); ++s)
        if (seen[s])
            for (const auto& [a, t] : l.succ(s)) b.add_transition(map[s], a, map[t]);
    b.set_init(map[l.init()]);
    return std::move(b).build();
}

StateClass classify_state(const Lts& l, StateId s) { return l.classify(s); }

StateClass classify_state(const Lts& l, const std::string& name) {
    auto s = l.state_by_name(name);
    if (!s) throw LtsError("unknown state id " + name);
    return l.classify(*s);
}

std::string fresh_state_name(const Lts& l, const std::string& base) {
    if (!l.state_by_name(base)) return base;
    for (int i = 1;; ++i) {
        std::string cand = base + std::to_string(i);
        if (!l.state_by_name(cand)) return cand;
    }
}

}  // namespace ltseq
