#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace ltseq {

// Thrown by parsers, validators and operator preconditions.
class LtsError : public std::runtime_error {
public:
    explicit LtsError(const std::string& what) : std::runtime_error(what) {}
};

// A transition label. The reserved token "tau" is the invisible action and
// never belongs to an alphabet; every other token is a visible action.
// Tokens are words over [a-zA-Z0-9_.] optionally followed by "@i" tag
// suffixes introduced by retagging.
class Action {
public:
    Action() = default;
    explicit Action(std::string token) : token_(std::move(token)) {}

    static Action tau() { return Action("tau"); }

    bool is_tau() const { return token_ == "tau"; }
    const std::string& token() const { return token_; }

    // -1 when untagged, otherwise the outermost "@i" tag.
    int outer_tag() const;
    // "a@1" -> "a"; untagged tokens are returned unchanged.
    Action strip_outer_tag() const;
    Action with_tag(int i) const;

    auto operator<=>(const Action&) const = default;

private:
    std::string token_;
};

bool is_valid_token(const std::string& token);

using Trace = std::vector<Action>;

std::string show_trace(const Trace& t);  // "a.b.c", "<>" for the empty trace

}  // namespace ltseq
