#include "ltseq/lts_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace ltseq {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw LtsError("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Lts parse_lts(std::string_view text) {
    struct Line { int no; std::string body; };
    std::vector<Line> lines;
    {
        int no = 0;
        std::string cur;
        std::istringstream in{std::string(text)};
        while (std::getline(in, cur)) {
            ++no;
            auto hash = cur.find('#');
            if (hash != std::string::npos) cur.erase(hash);
            if (split_ws(cur).empty()) continue;
            lines.push_back({no, cur});
        }
    }

    size_t i = 0;
    auto expect_header = [&](const std::string& kw) -> std::vector<std::string> {
        if (i >= lines.size()) fail(lines.empty() ? 1 : lines.back().no, "missing " + kw + " section");
        auto toks = split_ws(lines[i].body);
        if (toks.empty() || toks[0] != kw + ":") {
            if (kw == "init") fail(lines[i].no, "missing init");
            fail(lines[i].no, "expected '" + kw + ":'");
        }
        toks.erase(toks.begin());
        ++i;
        return toks;
    };

    LtsBuilder b;

    auto alpha = expect_header("alphabet");
    std::set<std::string> seen_actions;
    for (const auto& t : alpha) {
        if (t == "tau") fail(lines[i - 1].no, "tau in alphabet");
        if (!is_valid_token(t)) fail(lines[i - 1].no, "bad action token '" + t + "'");
        if (!seen_actions.insert(t).second)
            fail(lines[i - 1].no, "duplicate declaration '" + t + "' in alphabet line");
        b.add_action(Action(t));
    }

    if (i < lines.size()) {
        auto toks = split_ws(lines[i].body);
        if (!toks.empty() && toks[0] == "states:") {
            toks.erase(toks.begin());
            for (const auto& t : toks) {
                if (!is_valid_token(t)) fail(lines[i].no, "bad state token '" + t + "'");
                if (b.has_state(t))
                    fail(lines[i].no, "duplicate declaration '" + t + "' in states line");
                b.add_state(t);
            }
            ++i;
        }
    }

    auto init_toks = expect_header("init");
    if (init_toks.size() != 1) fail(lines[i - 1].no, "init takes exactly one state");
    if (!is_valid_token(init_toks[0])) fail(lines[i - 1].no, "bad state token '" + init_toks[0] + "'");
    StateId init = b.add_state(init_toks[0]);

    auto trans_toks = expect_header("trans");
    if (!trans_toks.empty()) fail(lines[i - 1].no, "unexpected tokens after 'trans:'");

    for (; i < lines.size(); ++i) {
        auto toks = split_ws(lines[i].body);
        if (toks.size() != 3)
            fail(lines[i].no, "expected 'src label dst'");
        for (const auto& t : toks)
            if (!is_valid_token(t)) fail(lines[i].no, "bad token '" + t + "'");
        Action label(toks[1]);
        if (!label.is_tau() && !seen_actions.count(toks[1]))
            fail(lines[i].no, "undeclared action " + toks[1]);
        StateId src = b.add_state(toks[0]);
        StateId dst = b.add_state(toks[2]);
        b.add_transition(src, label, dst);
    }

    b.set_init(init);
    return std::move(b).build();
}

std::string render_lts(const Lts& l) {
    // First-visit BFS order; ties inside a state resolved by the stored
    // (label, target name) transition order.
    std::vector<StateId> order;
    std::vector<bool> seen(l.num_states(), false);
    order.push_back(l.init());
    seen[l.init()] = true;
    for (size_t i = 0; i < order.size(); ++i)
        for (const auto& [a, t] : l.succ(order[i]))
            if (!seen[t]) { seen[t] = true; order.push_back(t); }

    std::vector<StateId> rest;
    for (StateId s = 0; s < l.num_states(); ++s)
        if (!seen[s]) rest.push_back(s);
    std::sort(rest.begin(), rest.end(), [&](StateId x, StateId y) {
        return l.state_name(x) < l.state_name(y);
    });
    order.insert(order.end(), rest.begin(), rest.end());

    std::set<StateId> isolated;
    for (StateId s = 0; s < l.num_states(); ++s) isolated.insert(s);
    isolated.erase(l.init());
    for (StateId s = 0; s < l.num_states(); ++s)
        for (const auto& [a, t] : l.succ(s)) {
            isolated.erase(s);
            isolated.erase(t);
        }

    std::ostringstream out;
    out << "alphabet:";
    for (const auto& a : l.alphabet()) out << ' ' << a.token();
    out << '\n';
    if (!isolated.empty()) {
        std::vector<std::string> names;
        for (StateId s : isolated) names.push_back(l.state_name(s));
        std::sort(names.begin(), names.end());
        out << "states:";
        for (const auto& n : names) out << ' ' << n;
        out << '\n';
    }
    out << "init: " << l.state_name(l.init()) << '\n';
    out << "trans:\n";
    for (StateId s : order)
        for (const auto& [a, t] : l.succ(s))
            out << l.state_name(s) << ' ' << a.token() << ' ' << l.state_name(t) << '\n';
    return out.str();
}

Lts load_lts_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LtsError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_lts(buf.str());
    } catch (const LtsError& e) {
        throw LtsError(path + ": " + e.what());
    }
}

}  // namespace ltseq
