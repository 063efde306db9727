#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>

#include "ltseq/ops.hpp"

namespace ltseq {

// Abstract syntax for process expressions:
//
//   expr   := NAME | const | "prefix(" ACT "," expr ")" | "hide(" aset "," expr ")"
//           | "rename(" pairs "," expr ")" | "par(" expr "," expr ")"
//           | "ichoice(" expr "," expr ")" | "tag(" INT "," expr ")"
//           | "untag(" INT "," expr ")"
//           | "tester_sf(" trace "," aset "," aset ")"
//           | "tester_tr(" trace "," aset "," aset ")"
//           | "tester_loop(" trace "," ACT "," aset ")"
//   const  := ("stop"|"run"|"rd"|"rdl") "(" aset ")" | "lc"
//   aset   := "{" [ACT ("," ACT)*] "}"
//   pairs  := "{" [ACT "->" ACT ("," ACT "->" ACT)*] "}"
//   trace  := "[" [ACT ("," ACT)*] "]"
struct ProcessExpr {
    enum class Kind {
        name, stop, run, rd, rdl, lc,
        prefix, hide, rename, par, ichoice, tag, untag,
        tester_sf, tester_tr, tester_loop,
    };
    Kind kind;
    std::string name;                              // Kind::name
    std::set<Action> actions;                      // constants / hide
    std::set<Action> actions2;                     // tester ambient alphabet
    Trace trace;                                   // testers
    Action action;                                 // prefix / tester_loop
    RenameRelation phi;                            // rename
    int tag_index = 0;                             // tag / untag
    std::unique_ptr<ProcessExpr> arg1, arg2;
};

std::unique_ptr<ProcessExpr> parse_pexp(const std::string& text);

// Resolves NAME leaves; typically backed by --let bindings plus .lts files.
using Env = std::function<Lts(const std::string&)>;

Env env_from_map(std::map<std::string, Lts> bindings);

// Bottom-up evaluation; the result of every step is reachable-trimmed.
Lts eval_expr(const ProcessExpr& e, const Env& env);

}  // namespace ltseq
