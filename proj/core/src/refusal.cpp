#include "ltseq/refusal.hpp"

#include <algorithm>

namespace ltseq {

namespace {

bool subset_of(const RefusalAntichain::Set& a, const RefusalAntichain::Set& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

void RefusalAntichain::insert(Set s) {
    for (const auto& m : sets_)
        if (subset_of(s, m)) return;
    std::erase_if(sets_, [&](const Set& m) { return subset_of(m, s); });
    auto pos = std::lower_bound(sets_.begin(), sets_.end(), s);
    sets_.insert(pos, std::move(s));
}

bool RefusalAntichain::member(const Set& s) const {
    return std::any_of(sets_.begin(), sets_.end(),
                       [&](const Set& m) { return subset_of(s, m); });
}

bool RefusalAntichain::has_full(size_t alphabet_size) const {
    return std::any_of(sets_.begin(), sets_.end(),
                       [&](const Set& m) { return m.size() == alphabet_size; });
}

RefusalAntichain RefusalAntichain::subtract(const Set& kill) const {
    RefusalAntichain out;
    for (const auto& m : sets_) {
        Set reduced;
        std::set_difference(m.begin(), m.end(), kill.begin(), kill.end(),
                            std::back_inserter(reduced));
        out.insert(std::move(reduced));
    }
    return out;
}

std::string show_antichain(const RefusalAntichain& r,
                           const std::vector<std::string>& alphabet_tokens) {
    std::string out = "{";
    bool first_set = true;
    for (const auto& m : r.sets()) {
        if (!first_set) out += ',';
        first_set = false;
        out += '{';
        for (size_t i = 0; i < m.size(); ++i) {
            if (i) out += ',';
            out += alphabet_tokens[m[i]];
        }
        out += '}';
    }
    out += '}';
    return out;
}

}  // namespace ltseq
