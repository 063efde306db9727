#include "ltseq/expr.hpp"

#include "ltseq/testers.hpp"

namespace ltseq {

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw LtsError("expression error at offset " + std::to_string(pos) + ": " + msg);
    }

    void skip_ws() {
        while (pos < text.size() &&
               (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                text[pos] == '\r'))
            ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) { ++pos; return true; }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string token() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size()) {
            char c = text[pos];
            bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                      (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '@';
            if (!ok) break;
            ++pos;
        }
        if (pos == start) fail("expected a token");
        return text.substr(start, pos - start);
    }

    Action act() {
        std::string t = token();
        if (!is_valid_token(t)) fail("bad action token '" + t + "'");
        return Action(t);
    }

    std::set<Action> aset() {
        expect('{');
        std::set<Action> out;
        skip_ws();
        if (eat('}')) return out;
        out.insert(act());
        while (eat(',')) out.insert(act());
        expect('}');
        return out;
    }

    Trace trace_list() {
        expect('[');
        Trace out;
        skip_ws();
        if (eat(']')) return out;
        out.push_back(act());
        while (eat(',')) out.push_back(act());
        expect(']');
        return out;
    }

    RenameRelation pairs() {
        expect('{');
        std::vector<std::pair<Action, Action>> ps;
        skip_ws();
        if (eat('}')) return RenameRelation(std::move(ps));
        auto one = [&] {
            Action from = act();
            expect('-');
            expect('>');
            Action to = act();
            ps.emplace_back(from, to);
        };
        one();
        while (eat(',')) one();
        expect('}');
        return RenameRelation(std::move(ps));
    }

    int integer() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) fail("expected an integer");
        return std::stoi(text.substr(start, pos - start));
    }

    std::unique_ptr<ProcessExpr> expr() {
        auto e = std::make_unique<ProcessExpr>();
        std::string head = token();
        skip_ws();
        bool call = pos < text.size() && text[pos] == '(';
        using K = ProcessExpr::Kind;

        if (!call) {
            if (head == "lc") { e->kind = K::lc; return e; }
            e->kind = K::name;
            e->name = head;
            return e;
        }

        expect('(');
        if (head == "stop" || head == "run" || head == "rd" || head == "rdl") {
            e->kind = head == "stop" ? K::stop
                    : head == "run"  ? K::run
                    : head == "rd"   ? K::rd
                                     : K::rdl;
            e->actions = aset();
            expect(')');
            return e;
        }
        if (head == "prefix") {
            e->kind = K::prefix;
            e->action = act();
            expect(',');
            e->arg1 = expr();
            expect(')');
            return e;
        }
        if (head == "hide") {
            e->kind = K::hide;
            e->actions = aset();
            expect(',');
            e->arg1 = expr();
            expect(')');
            return e;
        }
        if (head == "rename") {
            e->kind = K::rename;
            e->phi = pairs();
            expect(',');
            e->arg1 = expr();
            expect(')');
            return e;
        }
        if (head == "par" || head == "ichoice") {
            e->kind = head == "par" ? K::par : K::ichoice;
            e->arg1 = expr();
            expect(',');
            e->arg2 = expr();
            expect(')');
            return e;
        }
        if (head == "tag" || head == "untag") {
            e->kind = head == "tag" ? K::tag : K::untag;
            e->tag_index = integer();
            expect(',');
            e->arg1 = expr();
            expect(')');
            return e;
        }
        if (head == "tester_sf" || head == "tester_tr") {
            e->kind = head == "tester_sf" ? K::tester_sf : K::tester_tr;
            e->trace = trace_list();
            expect(',');
            e->actions = aset();
            expect(',');
            e->actions2 = aset();
            expect(')');
            return e;
        }
        if (head == "tester_loop") {
            e->kind = K::tester_loop;
            e->trace = trace_list();
            expect(',');
            e->action = act();
            expect(',');
            e->actions2 = aset();
            expect(')');
            return e;
        }
        fail("unknown operator '" + head + "'");
    }
};

}  // namespace

std::unique_ptr<ProcessExpr> parse_pexp(const std::string& text) {
    Parser p{text};
    auto e = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return e;
}

Env env_from_map(std::map<std::string, Lts> bindings) {
    auto shared = std::make_shared<std::map<std::string, Lts>>(std::move(bindings));
    return [shared](const std::string& name) -> Lts {
        auto it = shared->find(name);
        if (it == shared->end()) throw LtsError("unresolved name '" + name + "'");
        return it->second;
    };
}

Lts eval_expr(const ProcessExpr& e, const Env& env) {
    using K = ProcessExpr::Kind;
    switch (e.kind) {
        case K::name: return reachable_part(env(e.name));
        case K::stop: return make_constant(ConstantKind::stop, e.actions);
        case K::run: return make_constant(ConstantKind::run, e.actions);
        case K::rd: return make_constant(ConstantKind::rd, e.actions);
        case K::rdl: return make_constant(ConstantKind::rdl, e.actions);
        case K::lc: return make_constant(ConstantKind::lc, {});
        case K::prefix:
            return prefix(e.action, eval_expr(*e.arg1, env));
        case K::hide:
            return hide(e.actions, eval_expr(*e.arg1, env));
        case K::rename:
            return reachable_part(rename(e.phi, eval_expr(*e.arg1, env)));
        case K::par:
            return parallel(eval_expr(*e.arg1, env), eval_expr(*e.arg2, env));
        case K::ichoice:
            return internal_choice(eval_expr(*e.arg1, env), eval_expr(*e.arg2, env));
        case K::tag:
            return retag(TagDirection::up, e.tag_index, eval_expr(*e.arg1, env));
        case K::untag:
            return retag(TagDirection::down, e.tag_index, eval_expr(*e.arg1, env));
        case K::tester_sf:
            return tester_sf({e.trace, e.actions, e.actions2});
        case K::tester_tr:
            return tester_tr(e.trace, e.actions, e.actions2);
        case K::tester_loop:
            return tester_trace_loop(e.trace, e.action, e.actions2);
    }
    throw LtsError("unreachable");
}

}  // namespace ltseq
