#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ltseq {

// An antichain of maximal refusal sets over some alphabet, denoting the
// downward-closed family of all their subsets. Refusal sets are sorted
// vectors of alphabet indices. The empty antichain denotes the empty family
// (no stable failures at this trace), which is different from {{}} (the
// family containing only the empty refusal).
class RefusalAntichain {
public:
    using Set = std::vector<uint32_t>;

    static RefusalAntichain none() { return {}; }

    // Inserts s unless it is dominated; drops members s dominates.
    void insert(Set s);

    bool empty() const { return sets_.empty(); }
    // Membership of s in the denoted downward-closed family.
    bool member(const Set& s) const;
    // True iff some maximal refusal has the given cardinality (i.e. is the
    // full alphabet, since members are alphabet subsets).
    bool has_full(size_t alphabet_size) const;

    // Removes the given actions from every member and re-maximalizes;
    // realizes intersection of the family with "refusals avoiding kill".
    RefusalAntichain subtract(const Set& kill) const;

    const std::vector<Set>& sets() const { return sets_; }

    bool operator==(const RefusalAntichain&) const = default;

private:
    std::vector<Set> sets_;  // kept sorted lexicographically
};

// "{}" for the empty family, "{{},{a,b}}" style otherwise.
std::string show_antichain(const RefusalAntichain& r,
                           const std::vector<std::string>& alphabet_tokens);

}  // namespace ltseq
