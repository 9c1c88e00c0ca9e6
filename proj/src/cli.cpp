#include "balcheck/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "balcheck/corpus.hpp"
#include "balcheck/dyck.hpp"
#include "balcheck/io.hpp"
#include "balcheck/recognition.hpp"

namespace balcheck::cli {

using nlohmann::json;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw Failure("cannot read " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

json cert_json(const std::optional<OddCycleCertificate>& c) {
    if (!c) return nullptr;
    return {{"order", c->order()}, {"rows", c->rows}, {"cols", c->cols}};
}

json multisun_json(const Multisun& m) {
    json j{{"order", m.order()}, {"rim", m.rim()}, {"cliques", m.cliques()}};
    j["hub"] = m.hub() ? json(*m.hub()) : json(nullptr);
    return j;
}

json verdict_json(const Verdict& v) {
    json j{{"holds", v.holds}, {"method", to_string(v.method)}, {"detail", v.detail},
           {"certificate", cert_json(v.certificate)}};
    j["odd_hole"] = v.odd_hole ? json(v.odd_hole->vertices) : json(nullptr);
    if (v.hole_rows) j["hole_rows"] = *v.hole_rows;
    if (v.sunoid)
        j["sunoid"] = {{"vertices", v.sunoid->vertices},
                       {"word", render_word(v.sunoid->word)},
                       {"multisun", multisun_json(v.sunoid->multisun)}};
    else
        j["sunoid"] = nullptr;
    return j;
}

std::string cert_text(const std::optional<OddCycleCertificate>& c) {
    if (!c) return {};
    std::ostringstream s;
    s << "certificate order " << c->order() << " rows";
    for (auto r : c->rows) s << ' ' << r;
    s << " cols";
    for (auto x : c->cols) s << ' ' << x;
    return s.str();
}

void print_verdict(std::ostream& out, const Verdict& v, const std::string& yes, const std::string& no) {
    out << (v.holds ? yes : no) << " (" << to_string(v.method) << "): " << v.detail << '\n';
    if (v.odd_hole) {
        out << "odd hole";
        for (auto x : v.odd_hole->vertices) out << ' ' << x;
        out << '\n';
    }
    if (v.sunoid) {
        out << "sunoid";
        for (auto x : v.sunoid->vertices) out << ' ' << x;
        out << "\nword " << render_word(v.sunoid->word) << '\n';
    }
    if (v.certificate) out << cert_text(v.certificate) << '\n';
}

std::vector<Method> methods_of(const std::string& name) {
    if (name == "oracle") return {Method::Oracle};
    if (name == "algorithm") return {Method::Algorithm};
    if (name == "characterization") return {Method::Characterization};
    return {Method::Oracle, Method::Algorithm, Method::Characterization};
}

// one verdict per method; disagreement is an error
int decide(std::ostream& out, bool as_json, const std::string& command, const std::string& method,
           const std::function<Verdict(Method)>& f, const std::string& yes, const std::string& no) {
    std::vector<Verdict> vs;
    for (auto m : methods_of(method)) vs.push_back(f(m));
    bool agree = std::all_of(vs.begin(), vs.end(), [&](const Verdict& v) { return v.holds == vs[0].holds; });
    if (as_json) {
        json j{{"schema", 1}, {"command", command}, {"agree", agree}, {"verdict", vs[0].holds}};
        j["reports"] = json::array();
        for (const auto& v : vs) j["reports"].push_back(verdict_json(v));
        out << j.dump(2) << '\n';
    } else {
        for (const auto& v : vs) print_verdict(out, v, yes, no);
    }
    if (!agree) throw Failure("methods disagree");
    return vs[0].holds ? 0 : 1;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::string nconditions_text(const NConditionReport& r) {
    std::ostringstream s;
    for (std::size_t i = 0; i < 5; ++i) {
        const auto& c = r.conditions[i];
        s << "N-" << i + 1 << ' ' << to_string(c.status);
        if (!c.detail.empty()) s << ": " << c.detail;
        s << '\n';
    }
    return s.str();
}

json nconditions_json(const NConditionReport& r) {
    json cs = json::array();
    for (const auto& c : r.conditions) {
        json j{{"status", to_string(c.status)}, {"detail", c.detail}, {"cliques", c.cliques}};
        j["path"] = c.path ? json(c.path->vertices) : json(nullptr);
        cs.push_back(j);
    }
    return cs;
}

Verdict matrix_verdict(const ZeroOneMatrix& a, Method m) {
    if (m != Method::Oracle || is_linear(a)) return balanced_linear(a, m);
    Verdict v;
    v.certificate = min_odd_cycle(a);
    v.holds = !v.certificate;
    v.detail = v.holds ? "no odd cycle submatrix" : "odd cycle submatrix";
    return v;
}

Multisun require_multisun(const Graph& g) {
    auto rec = recognize_multisun(g);
    if (!rec) throw Failure("not a multisun: " + to_string(rec.defect) + " " + rec.detail);
    return *rec.multisun;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"balancedness of diamond-free graphs and linear matrices"};
    app.require_subcommand(1);
    bool as_json = false, as_dot = false;
    app.add_flag("--json", as_json, "machine-readable report");
    app.add_flag("--dot", as_dot, "Graphviz output where a graph is produced");

    std::string path, word, method = "oracle", drop, weights;
    std::size_t n = 0, order = 0, count = 20, max_order = 13;
    std::uint64_t seed = 1;
    std::string kind = "graph";
    std::function<int()> action;

    auto method_option = [&](CLI::App* c) {
        c->add_option("--method", method, "oracle, algorithm, characterization or both")
            ->check(CLI::IsMember({"oracle", "algorithm", "characterization", "both"}));
    };
    auto file_arg = [&](CLI::App* c) { c->add_option("file", path, "input file or -")->required(); };
    auto word_arg = [&](CLI::App* c) { c->add_option("word", word, "word, e.g. *a3.b2.a")->required(); };

    auto* graph = app.add_subcommand("graph", "diamond-free graph checks")->require_subcommand(1);
    auto* matrix = app.add_subcommand("matrix", "0/1 matrix checks")->require_subcommand(1);
    auto* multisun = app.add_subcommand("multisun", "multisun structure")->require_subcommand(1);
    auto* wordc = app.add_subcommand("word", "cyclic words")->require_subcommand(1);
    auto* dyck = app.add_subcommand("dyck", "Dyck paths")->require_subcommand(1);
    auto* enumerate = app.add_subcommand("enumerate", "enumeration")->require_subcommand(1);
    auto* corpus = app.add_subcommand("corpus", "random instances")->require_subcommand(1);

    auto load_graph = [&] { return parse_graph(read_input(path)); };

    {
        auto* c = graph->add_subcommand("check-balanced", "is the clique matrix balanced");
        file_arg(c);
        method_option(c);
        c->callback([&] {
            action = [&] {
                Graph g = load_graph();
                if (as_dot) out << render_dot(g);
                return decide(out, as_json, "graph check-balanced", method,
                              [&](Method m) { return balanced_df(g, m); }, "balanced", "unbalanced");
            };
        });
    }
    {
        auto* c = graph->add_subcommand("witness", "odd hole or sunoid in an unbalanced graph");
        file_arg(c);
        c->callback([&] {
            action = [&] {
                Graph g = load_graph();
                if (is_balanced(clique_matrix(g))) {
                    if (!is_diamond_free(g)) throw Failure("graph has a diamond");
                    if (as_json) out << json{{"schema", 1}, {"command", "graph witness"}, {"verdict", false}}.dump(2) << '\n';
                    else out << "balanced: no witness\n";
                    return 1;
                }
                Verdict v = find_unbalanced_witness(g);
                if (as_dot) {
                    if (v.sunoid) out << render_dot(v.sunoid->multisun.graph(), &v.sunoid->multisun);
                    else out << render_dot(Graph::cycle(v.odd_hole->length()));
                } else if (as_json) {
                    out << json{{"schema", 1}, {"command", "graph witness"}, {"verdict", true},
                                {"report", verdict_json(v)}}.dump(2) << '\n';
                } else {
                    print_verdict(out, v, "witness", "none");
                }
                return 0;
            };
        });
    }
    {
        auto* c = graph->add_subcommand("clique-perfect", "tau_c = alpha_c on every induced subgraph");
        file_arg(c);
        c->callback([&] {
            action = [&] {
                auto r = is_clique_perfect(load_graph());
                if (as_json) {
                    json j{{"schema", 1}, {"command", "graph clique-perfect"}, {"verdict", r.clique_perfect},
                           {"tau_c", r.tau_c}, {"alpha_c", r.alpha_c}};
                    if (!r.clique_perfect)
                        j["failing"] = {{"vertices", r.failing}, {"tau_c", r.failing_tau}, {"alpha_c", r.failing_alpha}};
                    out << j.dump(2) << '\n';
                } else {
                    out << (r.clique_perfect ? "clique-perfect" : "not clique-perfect") << "\ntau_c "
                        << r.tau_c << "\nalpha_c " << r.alpha_c << '\n';
                    if (!r.clique_perfect) {
                        out << "failing subgraph";
                        for (auto v : r.failing) out << ' ' << v;
                        out << " with tau_c " << r.failing_tau << " alpha_c " << r.failing_alpha << '\n';
                    }
                }
                return r.clique_perfect ? 0 : 1;
            };
        });
    }
    {
        auto* c = graph->add_subcommand("min-unbalanced", "is the graph minimally unbalanced");
        file_arg(c);
        c->add_option("--method", method, "oracle, characterization or both")
            ->check(CLI::IsMember({"oracle", "characterization", "both"}));
        c->callback([&] {
            action = [&] {
                Graph g = load_graph();
                std::vector<Verdict> vs;
                if (method != "characterization") {
                    Verdict v;
                    v.method = Method::Oracle;
                    v.holds = is_minimally_unbalanced_oracle(g);
                    v.detail = v.holds ? "unbalanced, every vertex deletion balanced" : "not minimal or balanced";
                    vs.push_back(v);
                }
                if (method != "oracle") vs.push_back(is_minimally_unbalanced_df(g));
                bool agree = vs.size() == 1 || vs[0].holds == vs[1].holds;
                if (as_json) {
                    json j{{"schema", 1}, {"command", "graph min-unbalanced"}, {"agree", agree}, {"verdict", vs[0].holds}};
                    j["reports"] = json::array();
                    for (const auto& v : vs) j["reports"].push_back(verdict_json(v));
                    out << j.dump(2) << '\n';
                } else {
                    for (const auto& v : vs) print_verdict(out, v, "minimally unbalanced", "not minimally unbalanced");
                }
                if (!agree) throw Failure("methods disagree");
                return vs[0].holds ? 0 : 1;
            };
        });
    }
    {
        auto* c = matrix->add_subcommand("check", "is the matrix balanced");
        file_arg(c);
        method_option(c);
        c->callback([&] {
            action = [&] {
                auto a = parse_matrix(read_input(path));
                if (!is_linear(a)) {
                    if (method != "oracle" && method != "both")
                        throw Failure("only the oracle handles non-linear matrices");
                    method = "oracle";
                }
                return decide(out, as_json, "matrix check", method,
                              [&](Method m) { return matrix_verdict(a, m); },
                              "balanced", "unbalanced");
            };
        });
    }
    {
        auto* c = matrix->add_subcommand("upmatrix", "rows not dominated by another row");
        file_arg(c);
        c->callback([&] {
            action = [&] {
                auto up = up_matrix(parse_matrix(read_input(path)));
                if (as_json)
                    out << json{{"schema", 1}, {"command", "matrix upmatrix"}, {"rows", up.rows},
                                {"matrix", split(render_matrix(up.matrix), '\n')}}.dump(2) << '\n';
                else
                    out << render_matrix(up.matrix);
                return 0;
            };
        });
    }
    {
        auto* c = matrix->add_subcommand("intersection", "column intersection graph");
        file_arg(c);
        c->callback([&] {
            action = [&] {
                Graph g = intersection_graph(parse_matrix(read_input(path)));
                if (as_dot) out << render_dot(g);
                else if (as_json)
                    out << json{{"schema", 1}, {"command", "matrix intersection"}, {"order", g.order()},
                                {"edges", g.edges()}}.dump(2) << '\n';
                else out << render_graph(g);
                return 0;
            };
        });
    }
    {
        auto* c = multisun->add_subcommand("recognize", "rim and inscribed cliques");
        file_arg(c);
        c->callback([&] {
            action = [&] {
                Graph g = load_graph();
                auto rec = recognize_multisun(g);
                if (as_dot) {
                    out << render_dot(g, rec ? &*rec.multisun : nullptr);
                } else if (as_json) {
                    json j{{"schema", 1}, {"command", "multisun recognize"}, {"verdict", bool(rec)},
                           {"defect", to_string(rec.defect)}, {"detail", rec.detail}};
                    if (rec) j["multisun"] = multisun_json(*rec.multisun);
                    out << j.dump(2) << '\n';
                } else if (rec) {
                    const auto& m = *rec.multisun;
                    out << "multisun of order " << m.order() << " with " << m.clique_count() << " inscribed cliques\nrim";
                    for (auto v : m.rim()) out << ' ' << v;
                    for (const auto& k : m.cliques()) {
                        out << "\nclique";
                        for (auto v : k) out << ' ' << v;
                    }
                    if (m.hub()) out << "\nhub " << *m.hub();
                    out << '\n';
                } else {
                    out << "not a multisun: " << to_string(rec.defect) << ' ' << rec.detail << '\n';
                }
                return rec ? 0 : 1;
            };
        });
    }
    {
        auto* c = multisun->add_subcommand("nconditions", "the five parity and hub conditions");
        file_arg(c);
        c->callback([&] {
            action = [&] {
                auto r = check_n_conditions(require_multisun(load_graph()));
                if (as_json)
                    out << json{{"schema", 1}, {"command", "multisun nconditions"}, {"verdict", r.all_pass()},
                                {"conditions", nconditions_json(r)}}.dump(2) << '\n';
                else
                    out << nconditions_text(r);
                return r.all_pass() ? 0 : 1;
            };
        });
    }
    {
        auto* c = multisun->add_subcommand("encode", "rim word and s-word");
        file_arg(c);
        c->callback([&] {
            action = [&] {
                Multisun m = require_multisun(load_graph());
                auto literal = rim_word(m);
                auto sw = s_word_of_multisun(m);
                bool sun = sw && is_sunword(*sw);
                if (as_json) {
                    json j{{"schema", 1}, {"command", "multisun encode"}, {"rim_word", render_word(literal)},
                           {"sunword", sun}};
                    j["s_word"] = sw ? json(render_word(*sw)) : json(nullptr);
                    out << j.dump(2) << '\n';
                } else {
                    out << "rim word " << render_word(literal) << '\n';
                    if (sw) out << "s-word " << render_word(*sw) << (sun ? " (sunword)" : " (not a sunword)") << '\n';
                    else out << "no s-word: N-conditions fail\n";
                }
                return sw ? 0 : 1;
            };
        });
    }
    {
        auto* c = multisun->add_subcommand("standardize", "shortest even contraction");
        file_arg(c);
        c->callback([&] {
            action = [&] {
                Multisun s = standardize(require_multisun(load_graph()));
                if (as_dot) out << render_dot(s.graph(), &s);
                else if (as_json)
                    out << json{{"schema", 1}, {"command", "multisun standardize"}, {"multisun", multisun_json(s)},
                                {"edges", s.graph().edges()}}.dump(2) << '\n';
                else out << render_graph(s.graph());
                return 0;
            };
        });
    }
    {
        auto* c = wordc->add_subcommand("check", "s-word and sunword tests");
        word_arg(c);
        c->callback([&] {
            action = [&] {
                auto cw = canonicalize(parse_word(word));
                auto r = check_sunword(cw);
                std::string status, reason;
                if (!r.sword.valid()) {
                    status = "not an s-word";
                    for (auto f : r.sword.failed) reason += (reason.empty() ? "" : ", ") + to_string(f);
                } else if (r.sunword) {
                    status = "sunword";
                } else {
                    status = "s-word, not a sunword";
                    if (!r.jump.order_defined) reason = "induced order undefined";
                    else if (r.jump.jump)
                        reason = std::string("jump ") + render_letter(r.jump.jump->from) + render_letter(r.jump.jump->to) +
                                 " at " + std::to_string(r.jump.jump->position);
                    else reason = "parity: " + r.parity.detail;
                }
                if (as_json)
                    out << json{{"schema", 1}, {"command", "word check"}, {"canonical", render_word(cw)},
                                {"status", status}, {"reason", reason}, {"verdict", r.sunword}}.dump(2) << '\n';
                else
                    out << render_word(cw) << '\n' << status << (reason.empty() ? "" : ": " + reason) << '\n';
                return r.sunword ? 0 : 1;
            };
        });
    }
    {
        auto* c = wordc->add_subcommand("realize", "standard multisun of an s-word");
        word_arg(c);
        c->callback([&] {
            action = [&] {
                Multisun m = standard_multisun(canonicalize(parse_word(word)));
                if (as_dot) out << render_dot(m.graph(), &m);
                else if (as_json)
                    out << json{{"schema", 1}, {"command", "word realize"}, {"multisun", multisun_json(m)},
                                {"edges", m.graph().edges()}}.dump(2) << '\n';
                else out << render_graph(m.graph());
                return 0;
            };
        });
    }
    {
        auto* c = wordc->add_subcommand("project", "turn proper letters into epsilon");
        word_arg(c);
        c->add_option("--drop", drop, "comma-separated letters")->required();
        c->callback([&] {
            action = [&] {
                std::vector<Letter> letters;
                for (const auto& x : split(drop, ','))
                    if (x.size() == 1 && x[0] >= 'a' && x[0] <= 'z') letters.push_back(Letter::proper(x[0] - 'a'));
                    else throw Failure("bad letter '" + x + "'");
                auto p = project(parse_word(word), letters);
                bool sun = is_sunword(p);
                if (as_json)
                    out << json{{"schema", 1}, {"command", "word project"}, {"word", render_word(p)},
                                {"sunword", sun}}.dump(2) << '\n';
                else out << render_word(p) << '\n';
                return 0;
            };
        });
    }
    {
        auto* c = wordc->add_subcommand("order", "letters by distance from the hub");
        word_arg(c);
        c->callback([&] {
            action = [&] {
                auto r = check_s_word(canonicalize(parse_word(word)));
                if (!r.valid()) throw Failure("not an s-word: " + to_string(r.failed.front()));
                auto o = induced_order(*r.sword);
                std::string chain;
                for (auto x : o.chain) chain += render_letter(x);
                std::string tie = o.tie ? std::string{render_letter(o.tie->first), render_letter(o.tie->second)} : "";
                if (as_json) {
                    json j{{"schema", 1}, {"command", "word order"}, {"chain", chain}, {"verdict", o.defined()}};
                    j["tie"] = o.tie ? json(tie) : json(nullptr);
                    out << j.dump(2) << '\n';
                } else {
                    out << (o.defined() ? chain : "undefined: tie between " + tie) << '\n';
                }
                return o.defined() ? 0 : 1;
            };
        });
    }
    {
        auto* c = dyck->add_subcommand("enumerate", "Dyck words of semilength n");
        c->add_option("-n", n, "semilength")->required();
        c->callback([&] {
            action = [&] {
                auto ws = enumerate_dyck(n);
                if (as_json) out << json{{"schema", 1}, {"command", "dyck enumerate"}, {"words", ws}}.dump(2) << '\n';
                else
                    for (const auto& w : ws) out << w << '\n';
                return 0;
            };
        });
    }
    {
        auto* c = dyck->add_subcommand("of-word", "evenly weighted Dyck path of a sunword");
        word_arg(c);
        c->callback([&] {
            action = [&] {
                auto p = sunword_to_dyck(canonicalize(parse_word(word)));
                if (as_json)
                    out << json{{"schema", 1}, {"command", "dyck of-word"}, {"dyck", p.word()},
                                {"ordinates", p.ordinates}, {"weights", p.weights}}.dump(2) << '\n';
                else {
                    out << p.word() << "\nweights";
                    for (auto w : p.weights) out << ' ' << w;
                    out << '\n';
                }
                return 0;
            };
        });
    }
    {
        auto* c = dyck->add_subcommand("to-word", "sunword of an evenly weighted Dyck path");
        c->add_option("dyck", word, "Dyck word over L, R")->required();
        c->add_option("--weights", weights, "comma-separated weights")->required();
        c->callback([&] {
            action = [&] {
                WeightedDyckPath p{word_to_path(word), {}};
                for (const auto& x : split(weights, ',')) p.weights.push_back(std::stoul(x));
                auto cw = dyck_to_sunword(p);
                if (as_json)
                    out << json{{"schema", 1}, {"command", "dyck to-word"}, {"word", render_word(cw)}}.dump(2) << '\n';
                else out << render_word(cw) << '\n';
                return 0;
            };
        });
    }
    {
        auto* c = enumerate->add_subcommand("min-unbalanced", "minimally unbalanced diamond-free graphs");
        c->add_option("--order", order, "largest order")->required()->check(CLI::Range(5, 40));
        c->callback([&] {
            action = [&] {
                auto all = enumerate_min_unbalanced(order);
                json list = json::array();
                for (std::size_t i = 0; i < all.size(); ++i) {
                    const auto& e = all[i];
                    std::string name = e.multisun ? "sunoid " + render_word(*e.word) : "C" + std::to_string(e.graph.order());
                    if (as_json) {
                        json j{{"name", name}, {"order", e.graph.order()}, {"edges", e.graph.edges()}};
                        if (e.multisun) j["cliques"] = e.multisun->cliques();
                        list.push_back(j);
                    } else if (as_dot) {
                        out << "// " << name << '\n' << render_dot(e.graph, e.multisun ? &*e.multisun : nullptr);
                    } else {
                        out << "# " << name << '\n' << render_graph(e.graph);
                    }
                }
                if (as_json)
                    out << json{{"schema", 1}, {"command", "enumerate min-unbalanced"}, {"graphs", list}}.dump(2) << '\n';
                return 0;
            };
        });
    }
    {
        auto* c = corpus->add_subcommand("generate", "seeded random instances");
        c->add_option("--seed", seed, "random seed")->required();
        c->add_option("--count", count, "number of instances");
        c->add_option("--kind", kind, "graph or multisun")->check(CLI::IsMember({"graph", "multisun"}));
        c->add_option("--max-order", max_order, "largest order of random graphs")->check(CLI::Range(5, 40));
        c->callback([&] {
            action = [&] {
                std::vector<Graph> gs;
                if (kind == "graph") gs = random_diamond_free_corpus(count, max_order, seed);
                else
                    for (const auto& m : random_multisuns(count, seed)) gs.push_back(m.graph());
                json list = json::array();
                for (const auto& g : gs) {
                    if (as_json) list.push_back({{"order", g.order()}, {"edges", g.edges()}});
                    else out << "# seed " << seed << '\n' << render_graph(g);
                }
                if (as_json)
                    out << json{{"schema", 1}, {"command", "corpus generate"}, {"graphs", list}}.dump(2) << '\n';
                return 0;
            };
        });
    }

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    try {
        return action();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace balcheck::cli
