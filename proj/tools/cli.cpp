#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ltseq/bisim.hpp"
#include "ltseq/congruence.hpp"
#include "ltseq/expr.hpp"
#include "ltseq/lts_io.hpp"
#include "ltseq/oracle.hpp"

namespace ltseq::cli {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LtsError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_out(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw LtsError("cannot write " + out_path);
        f << text;
    }
}

Env make_env(const std::vector<std::string>& lets, const std::string& base_dir) {
    std::map<std::string, Lts> bound;
    for (const auto& spec : lets) {
        auto eq = spec.find('=');
        if (eq == std::string::npos)
            throw LtsError("--let expects name=file.lts, got " + spec);
        bound.emplace(spec.substr(0, eq), load_lts_file(spec.substr(eq + 1)));
    }
    return [bound, base_dir](const std::string& name) -> Lts {
        auto it = bound.find(name);
        if (it != bound.end()) return it->second;
        for (const std::string& cand :
             {name, name + ".lts", base_dir + "/" + name, base_dir + "/" + name + ".lts"}) {
            std::ifstream probe(cand);
            if (probe) return load_lts_file(cand);
        }
        throw LtsError("unresolved name '" + name + "'");
    };
}

json witness_json(const Witness& w) {
    json j;
    switch (w.kind) {
        case WitnessKind::alphabet: j["kind"] = "alphabet"; break;
        case WitnessKind::trace_membership: j["kind"] = "trace"; break;
        case WitnessKind::bit: j["kind"] = "bit"; break;
        case WitnessKind::refusal: j["kind"] = "refusal"; break;
    }
    if (w.component) j["component"] = component_name(*w.component);
    j["trace"] = json::array();
    for (const auto& a : w.trace) j["trace"].push_back(a.token());
    j["detail"] = w.detail;
    return j;
}

json verdict_json(const Verdict& v) {
    json j;
    j["id"] = v.cong;
    j["name"] = congruence_by_id(v.cong).name;
    j["equal"] = v.equal;
    if (v.witness) j["witness"] = witness_json(*v.witness);
    return j;
}

std::string verdict_text(const Verdict& v) {
    std::ostringstream line;
    line << v.cong << ' ' << congruence_by_id(v.cong).name << ' '
         << (v.equal ? "EQUAL" : "DIFFER");
    if (v.witness) {
        line << " [";
        if (v.witness->component) line << component_name(*v.witness->component) << " at ";
        line << show_trace(v.witness->trace) << ": " << v.witness->detail << ']';
    }
    return line.str();
}

ComponentId component_by_name(const std::string& name) {
    static const std::map<std::string, ComponentId> names = {
        {"tr", ComponentId::TR},     {"dl", ComponentId::DL},
        {"div", ComponentId::DIV},   {"mind", ComponentId::MIND},
        {"extt", ComponentId::EXTT}, {"ant", ComponentId::ANT},
        {"cdiv", ComponentId::CDIV}, {"sf", ComponentId::SF},
        {"nf", ComponentId::NF},     {"snf", ComponentId::SNF},
        {"anf", ComponentId::ANF},   {"sanf", ComponentId::SANF},
        {"cfail", ComponentId::CFAIL},
    };
    auto it = names.find(name);
    if (it == names.end()) throw LtsError("unknown component " + name);
    return it->second;
}

int cmd_validate(const std::string& file, std::ostream& out) {
    Lts l = load_lts_file(file);
    out << "ok: " << l.num_states() << " states, " << l.alphabet().size()
        << " actions, " << l.num_transitions() << " transitions\n";
    return 0;
}

int cmd_eval(const std::string& file, const std::string& inline_expr,
             const std::vector<std::string>& lets, const std::string& out_path,
             std::ostream& out) {
    std::string text;
    std::string base_dir = ".";
    if (!inline_expr.empty()) {
        text = inline_expr;
    } else {
        text = slurp(file);
        auto slash = file.rfind('/');
        if (slash != std::string::npos) base_dir = file.substr(0, slash);
    }
    auto expr = parse_pexp(text);
    Lts result = eval_expr(*expr, make_env(lets, base_dir));
    write_out(render_lts(result), out_path, out);
    return 0;
}

int cmd_normalize(const std::string& file, bool history, bool no_quotient,
                  const std::string& format, const std::string& out_path,
                  std::ostream& out) {
    Lts l = load_lts_file(file);
    if (!no_quotient) l = bisim_quotient(l);
    NormalForm nf = normalize(l, history);
    if (format == "dot")
        write_out(nf_to_dot(nf), out_path, out);
    else
        write_out(nf_to_json(nf, &l), out_path, out);
    return 0;
}

int cmd_sem(const std::string& file, const std::string& component, int depth,
            bool no_quotient, const std::string& format, const std::string& out_path,
            std::ostream& out) {
    ComponentId c = component_by_name(component);
    Lts l = load_lts_file(file);
    if (!no_quotient) l = bisim_quotient(l);
    NormalForm nf = normalize(l, true);
    auto view = component_view(c, nf);

    if (format == "dot") {
        write_out(nf_to_dot(nf), out_path, out);
        return 0;
    }

    // Enumerate the view per trace up to the depth bound.
    std::vector<std::string> tokens;
    for (const auto& a : nf.alphabet) tokens.push_back(a.token());
    std::ostringstream text;
    json traces = json::array();
    struct Item { Trace trace; uint32_t state; };
    std::vector<Item> queue{{Trace{}, nf.initial}};
    for (size_t i = 0; i < queue.size(); ++i) {
        auto [trace, q] = queue[i];
        if (component_is_failure(c)) {
            if (!view.families[q].empty()) {
                text << show_trace(trace) << " : "
                     << show_antichain(view.families[q], tokens) << '\n';
                json row;
                row["trace"] = json::array();
                for (const auto& a : trace) row["trace"].push_back(a.token());
                row["refusals"] = json::array();
                for (const auto& m : view.families[q].sets()) {
                    json set = json::array();
                    for (uint32_t ai : m) set.push_back(tokens[ai]);
                    row["refusals"].push_back(set);
                }
                traces.push_back(row);
            }
        } else if (view.bits[q]) {
            text << show_trace(trace) << '\n';
            json row = json::array();
            for (const auto& a : trace) row.push_back(a.token());
            traces.push_back(row);
        }
        if (static_cast<int>(trace.size()) == depth) continue;
        for (const auto& [ai, t] : nf.states[q].succ) {
            Trace ext = trace;
            ext.push_back(nf.alphabet[ai]);
            queue.push_back({std::move(ext), t});
        }
    }
    if (format == "json") {
        json doc;
        doc["component"] = component_name(c);
        doc["depth"] = depth;
        doc["traces"] = traces;
        write_out(doc.dump(2) + "\n", out_path, out);
    } else {
        write_out(text.str(), out_path, out);
    }
    return 0;
}

int cmd_eq(const std::string& cong, const std::string& f1, const std::string& f2,
           const std::string& format, std::ostream& out) {
    auto id = congruence_id_by_name(cong);
    if (!id) throw LtsError("unknown congruence " + cong);
    Verdict v = equivalent(*id, load_lts_file(f1), load_lts_file(f2));
    if (format == "text") {
        out << verdict_text(v) << '\n';
    } else {
        json doc = verdict_json(v);
        doc["files"] = {f1, f2};
        out << doc.dump(2) << '\n';
    }
    return v.equal ? 0 : 1;
}

int cmd_distinguish(const std::string& f1, const std::string& f2,
                    const std::string& format, std::ostream& out) {
    Lts a = load_lts_file(f1), b = load_lts_file(f2);
    auto table = verdict_table(a, b);
    auto mins = minimal_distinguishing(a, b);
    auto maxs = maximal_equating(a, b);
    if (format == "text") {
        for (const auto& v : table) out << verdict_text(v) << '\n';
        out << "minimal distinguishing:";
        for (int c : mins) out << ' ' << congruence_by_id(c).name;
        out << "\nmaximal equating:";
        for (int c : maxs) out << ' ' << congruence_by_id(c).name;
        out << '\n';
    } else {
        json doc;
        doc["files"] = {f1, f2};
        doc["verdicts"] = json::array();
        for (const auto& v : table) doc["verdicts"].push_back(verdict_json(v));
        doc["minimal_distinguishing"] = json::array();
        for (int c : mins) doc["minimal_distinguishing"].push_back(congruence_by_id(c).name);
        doc["maximal_equating"] = json::array();
        for (int c : maxs) doc["maximal_equating"].push_back(congruence_by_id(c).name);
        out << doc.dump(2) << '\n';
    }
    return 0;
}

int cmd_lattice(bool dot, const std::string& implies_pair, std::ostream& out) {
    if (!implies_pair.empty()) {
        auto comma = implies_pair.find(',');
        if (comma == std::string::npos)
            throw LtsError("--implies expects c1,c2");
        auto c1 = congruence_id_by_name(implies_pair.substr(0, comma));
        auto c2 = congruence_id_by_name(implies_pair.substr(comma + 1));
        if (!c1 || !c2) throw LtsError("unknown congruence in --implies");
        bool holds = implies(*c1, *c2);
        out << (holds ? "true" : "false") << '\n';
        return holds ? 0 : 1;
    }
    auto edges = hasse_edges();
    if (dot) {
        out << "digraph congruences {\n  rankdir=BT;\n";
        for (const auto& c : catalogue())
            out << "  n" << c.id << " [label=\"" << c.id << " " << c.name << "\"];\n";
        for (const auto& [w, s] : edges)
            out << "  n" << w << " -> n" << s << ";\n";
        out << "}\n";
    } else {
        for (const auto& c : catalogue()) {
            out << c.id << ' ' << c.name << " {";
            bool first = true;
            for (ComponentId comp : c.signature) {
                if (!first) out << ',';
                first = false;
                out << component_name(comp);
            }
            out << "}\n";
        }
        out << "edges (weaker -> stronger):\n";
        for (const auto& [w, s] : edges)
            out << "  " << congruence_by_id(w).name << " -> "
                << congruence_by_id(s).name << '\n';
    }
    return 0;
}

int cmd_bisim(const std::string& f1, const std::string& f2, bool show_relation,
              std::ostream& out) {
    auto r = bisimilar(load_lts_file(f1), load_lts_file(f2));
    out << (r.equal ? "bisimilar" : "not bisimilar") << '\n';
    if (r.equal && show_relation)
        for (const auto& [a, b] : r.relation) out << a << " ~ " << b << '\n';
    return r.equal ? 0 : 1;
}

int cmd_minimize(const std::string& file, const std::string& out_path,
                 std::ostream& out) {
    write_out(render_lts(bisim_quotient(load_lts_file(file))), out_path, out);
    return 0;
}

int cmd_random(const GenParams& p, const std::string& out_path, std::ostream& out) {
    write_out(render_lts(random_lts(p)), out_path, out);
    return 0;
}

int cmd_crosscheck(const std::string& file, int depth, std::ostream& out) {
    Lts l = load_lts_file(file);
    auto report = crosscheck(l, depth);
    if (report.pass) {
        auto lassos = bounded_limit_check(l, depth);
        if (lassos.pass) {
            out << "pass: " << report.traces_checked << " traces, "
                << lassos.lassos << " lassos checked\n";
            return 0;
        }
        json doc;
        doc["pass"] = false;
        doc["lasso"] = lassos.counterexample;
        out << doc.dump(2) << '\n';
        return 1;
    }
    json doc;
    doc["pass"] = false;
    doc["trace"] = json::array();
    for (const auto& a : report.mismatch->trace) doc["trace"].push_back(a.token());
    doc["component"] = component_name(report.mismatch->component);
    doc["symbolic"] = report.mismatch->symbolic;
    doc["oracle"] = report.mismatch->oracle;
    out << doc.dump(2) << '\n';
    return 1;
}

}  // namespace

int dispatch(const std::vector<std::string>& argv, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"finite-LTS semantics and linear-time congruence checker"};
    app.require_subcommand(1);

    std::string file, file2, inline_expr, out_path, cong, component, implies_pair;
    std::string format = "text";
    std::vector<std::string> lets;
    bool history = false, no_quotient = false, dot = false, relation = false;
    int depth = 6;
    GenParams gen;

    auto* validate = app.add_subcommand("validate", "parse and validate an .lts file");
    validate->add_option("file", file)->required();

    auto* eval = app.add_subcommand("eval", "evaluate a process expression");
    eval->add_option("file", file);
    eval->add_option("-e,--expr", inline_expr);
    eval->add_option("--let", lets);
    eval->add_option("--out", out_path);

    auto* normalize = app.add_subcommand("normalize", "annotated determinization");
    normalize->add_option("file", file)->required();
    normalize->add_flag("--history", history);
    normalize->add_flag("--no-quotient", no_quotient);
    normalize->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
    normalize->add_option("--out", out_path);

    auto* sem = app.add_subcommand("sem", "dump one semantic component");
    sem->add_option("file", file)->required();
    sem->add_option("-c,--component", component)->required();
    sem->add_option("--depth", depth);
    sem->add_flag("--no-quotient", no_quotient);
    sem->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot"}));
    sem->add_option("--out", out_path);

    auto* eq = app.add_subcommand("eq", "equivalence under one congruence");
    eq->add_option("--cong", cong)->required();
    eq->add_option("file1", file)->required();
    eq->add_option("file2", file2)->required();
    eq->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* distinguish = app.add_subcommand("distinguish", "verdicts under all 20 congruences");
    distinguish->add_option("file1", file)->required();
    distinguish->add_option("file2", file2)->required();
    distinguish->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* lattice = app.add_subcommand("lattice", "the congruence lattice");
    lattice->add_flag("--dot", dot);
    lattice->add_option("--implies", implies_pair);

    auto* bisim = app.add_subcommand("bisim", "strong bisimilarity");
    bisim->add_option("file1", file)->required();
    bisim->add_option("file2", file2)->required();
    bisim->add_flag("--relation", relation);

    auto* minimize = app.add_subcommand("minimize", "bisimulation quotient");
    minimize->add_option("file", file)->required();
    minimize->add_option("--out", out_path);

    auto* random = app.add_subcommand("random", "seeded random LTS");
    random->add_option("--states", gen.states);
    random->add_option("--actions", gen.alphabet_size);
    random->add_option("--density", gen.density);
    random->add_option("--tau-prob", gen.tau_prob);
    random->add_option("--seed", gen.seed);
    random->add_option("--out", out_path);

    auto* cross = app.add_subcommand("crosscheck", "views against the brute-force oracle");
    cross->add_option("file", file)->required();
    cross->add_option("--depth", depth);

    std::vector<std::string> args = argv;
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(file, out);
        if (eval->parsed()) {
            if (file.empty() && inline_expr.empty())
                throw LtsError("eval needs a .pexp file or --expr");
            return cmd_eval(file, inline_expr, lets, out_path, out);
        }
        if (normalize->parsed())
            return cmd_normalize(file, history, no_quotient,
                                 format == "text" ? "json" : format, out_path, out);
        if (sem->parsed())
            return cmd_sem(file, component, depth, no_quotient, format, out_path, out);
        if (eq->parsed())
            return cmd_eq(cong, file, file2,
                          eq->count("--format") ? format : "json", out);
        if (distinguish->parsed()) return cmd_distinguish(file, file2, format, out);
        if (lattice->parsed()) return cmd_lattice(dot, implies_pair, out);
        if (bisim->parsed()) return cmd_bisim(file, file2, relation, out);
        if (minimize->parsed()) return cmd_minimize(file, out_path, out);
        if (random->parsed()) return cmd_random(gen, out_path, out);
        if (cross->parsed()) return cmd_crosscheck(file, depth, out);
    } catch (const LtsError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "usage error: no command\n";
    return 2;
}

}  // namespace ltseq::cli
