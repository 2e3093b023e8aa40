#include "lspace/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lspace/algebra.hpp"
#include "lspace/covers.hpp"
#include "lspace/dual.hpp"
#include "lspace/error.hpp"
#include "lspace/labelled_space.hpp"
#include "lspace/path_rep.hpp"
#include "lspace/report.hpp"
#include "lspace/shift.hpp"
#include "lspace/verify.hpp"

namespace lspace::cli {

  using nlohmann::json;

  namespace {

    bool has_suffix(std::string const& s, std::string const& suffix) {
      return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
    }

    // What a command produced: the same data as a document and as text.
    struct Output {
      json        doc;
      std::string text;
      int         code = exit_pass;
    };

    json names(LabelledGraph const& g, std::vector<VertexId> const& vs) {
      json out = json::array();
      for (VertexId v : vs) {
        out.push_back(g.vertex_name(v));
      }
      return out;
    }

    json names(LabelledGraph const& g, VertexSet const& s) {
      json out = json::array();
      for (VertexId v : s.members()) {
        out.push_back(g.vertex_name(v));
      }
      return out;
    }

    json graph_json(LabelledGraph const& g) {
      json edges = json::array();
      for (auto const& e : g.edges()) {
        edges.push_back({{"id", e.id},
                         {"src", g.vertex_name(e.src)},
                         {"dst", g.vertex_name(e.dst)},
                         {"label", g.symbol(e.label)}});
      }
      return {{"format", 1}, {"alphabet", g.alphabet()}, {"vertices", g.vertex_names()}, {"edges", edges}};
    }

    Output graph_output(LabelledGraph const& g) {
      return {{{"graph", graph_json(g)}}, emit_labelled_graph(g)};
    }

    Output report_output(CheckReport const& r) {
      return {{{"report", to_json(r)}}, to_text(r), r.passed() ? exit_pass : exit_failed};
    }

    std::string join(std::vector<std::string> const& xs, std::string const& sep = " ") {
      std::string out;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? sep : "") + xs[i];
      }
      return out;
    }

    std::string morphism_text(LabelledGraph const& g1, LabelledGraph const& g2, GraphMorphism const& m) {
      std::ostringstream out;
      for (VertexId v = 0; v < g1.num_vertices(); ++v) {
        out << "  vertex " << g1.vertex_name(v) << " -> " << g2.vertex_name(m.vertex_map[v]) << '\n';
      }
      for (EdgeId e = 0; e < g1.num_edges(); ++e) {
        out << "  edge " << g1.edge(e).id << " -> " << g2.edge(m.edge_map[e]).id << '\n';
      }
      return out.str();
    }

    json morphism_json(LabelledGraph const& g1, LabelledGraph const& g2, GraphMorphism const& m) {
      json vs = json::object();
      json es = json::object();
      for (VertexId v = 0; v < g1.num_vertices(); ++v) {
        vs[g1.vertex_name(v)] = g2.vertex_name(m.vertex_map[v]);
      }
      for (EdgeId e = 0; e < g1.num_edges(); ++e) {
        es[g1.edge(e).id] = g2.edge(m.edge_map[e]).id;
      }
      return {{"vertices", vs}, {"edges", es}};
    }

    Output morphism_output(char const* what, LabelledGraph const& g1, LabelledGraph const& g2,
                           std::optional<GraphMorphism> const& m) {
      Output o;
      o.doc[what] = m.has_value();
      if (m) {
        o.doc["morphism"] = morphism_json(g1, g2, *m);
        o.text            = std::string(what) + ": yes\n" + morphism_text(g1, g2, *m);
      } else {
        o.text = std::string(what) + ": no\n";
        o.code = exit_failed;
      }
      return o;
    }

    struct Options {
      std::string format     = "text";
      std::string seed_order = "canonical";

      std::vector<std::string> paths;
      std::string              family = "e0";
      std::string              kind   = "krieger";
      std::string              suite  = "all";
      std::size_t              length = 3;
      std::size_t              depth  = 2;
      std::size_t              big_l  = 6;
      std::size_t              big_k  = 2;
      std::string              other;
    };

    FamilySeed family_of(Options const& o) {
      auto seed = parse_family_seed(o.family);
      if (!seed || *seed == FamilySeed::custom) {
        throw CLI::ValidationError("--family", "expected e0 or e0-");
      }
      return *seed;
    }

    LabelledGraph load(Options const& o, std::size_t i, std::ostream& err) {
      std::vector<std::string> warnings;
      auto                     g = load_graph_argument(o.paths.at(i), &warnings);
      for (auto const& w : warnings) {
        err << "warning: " << o.paths[i] << ": " << w << '\n';
      }
      return g;
    }

    Output cmd_check(Options const& o, std::ostream& err) {
      auto const g  = load(o, 0, err);
      auto const st = structure_report(g);
      auto const sp = LabelledSpace::standard(g, family_of(o));
      auto const pr = predicates_report(sp);

      json comps = json::array();
      for (auto const& c : st.components) {
        comps.push_back(names(g, c));
      }
      json dups = json::array();
      for (auto const& d : st.parallel_duplicates) {
        json ids = json::array();
        for (EdgeId e : d) {
          ids.push_back(g.edge(e).id);
        }
        dups.push_back(ids);
      }
      json singular = json::array();
      for (auto const& s : pr.singular_sets) {
        singular.push_back(names(g, s));
      }
      Output out;
      out.doc["structure"] = {{"vertices", g.num_vertices()},
                              {"edges", g.num_edges()},
                              {"alphabet", g.alphabet()},
                              {"sources", names(g, st.sources)},
                              {"sinks", names(g, st.sinks)},
                              {"components", comps},
                              {"parallel_duplicates", dups},
                              {"irreducible", st.irreducible},
                              {"essential", st.essential}};
      json preds = {{"family", to_string(sp.family().seed())},
                    {"family_size", sp.family().size()},
                    {"left_resolving", pr.left_resolving},
                    {"weakly_left_resolving", pr.weakly_left_resolving},
                    {"label_finite", pr.label_finite},
                    {"set_finite", pr.set_finite},
                    {"singular_sets", singular},
                    {"unresolved_vertices", names(g, pr.unresolved_vertices)}};
      if (pr.violation) {
        preds["violation"] = {{"A", names(g, pr.violation->a)},
                              {"B", names(g, pr.violation->b)},
                              {"word", g.format_word(pr.violation->word)}};
      }
      out.doc["predicates"] = preds;

      std::ostringstream t;
      auto               yes = [](bool b) { return b ? "yes" : "no"; };
      auto               list = [&](json const& xs) {
        std::vector<std::string> parts;
        for (auto const& x : xs) {
          parts.push_back(x.is_array() ? "{" + join(x.get<std::vector<std::string>>(), ",") + "}"
                                       : x.get<std::string>());
        }
        return parts.empty() ? std::string("none") : join(parts);
      };
      t << "vertices " << g.num_vertices() << ", edges " << g.num_edges() << ", alphabet " << join(g.alphabet())
        << '\n';
      t << "sources: " << list(out.doc["structure"]["sources"]) << '\n';
      t << "sinks: " << list(out.doc["structure"]["sinks"]) << '\n';
      t << "components: " << list(comps) << '\n';
      t << "parallel duplicates: " << list(dups) << '\n';
      t << "irreducible: " << yes(st.irreducible) << '\n';
      t << "essential: " << yes(st.essential) << '\n';
      t << "family " << to_string(sp.family().seed()) << ": " << sp.family().size() << " sets\n";
      t << "left-resolving: " << yes(pr.left_resolving) << '\n';
      t << "weakly left-resolving: " << yes(pr.weakly_left_resolving) << '\n';
      t << "label-finite: " << yes(pr.label_finite) << '\n';
      t << "set-finite: " << yes(pr.set_finite) << '\n';
      t << "singular sets: " << list(singular) << '\n';
      t << "unresolved vertices: " << list(preds["unresolved_vertices"]) << '\n';
      if (pr.violation) {
        t << "violation: A=" << g.format_set(pr.violation->a) << " B=" << g.format_set(pr.violation->b)
          << " word=" << g.format_word(pr.violation->word) << '\n';
      }
      out.text = t.str();
      return out;
    }

    Output cmd_closure(Options const& o, std::ostream& err) {
      auto const g      = load(o, 0, err);
      auto const family = compute_family(g, family_of(o));
      json       sets   = json::array();
      for (auto const& s : family.sets()) {
        sets.push_back(names(g, s));
      }
      return {{{"family", to_string(family.seed())}, {"sets", sets}}, format_family(g, family)};
    }

    Output cmd_cover(Options const& o, std::ostream& err) {
      auto const g = load(o, 0, err);
      if (o.kind == "krieger") {
        return graph_output(left_krieger_cover(g));
      }
      if (o.kind == "predecessor") {
        return graph_output(predecessor_graph(g));
      }
      return graph_output(minimal_left_resolving(g));
    }

    Output cmd_language(Options const& o, std::ostream& err) {
      auto const               g = load(o, 0, err);
      std::vector<std::string> words;
      std::string              text;
      for (auto const& w : factor_language(g, o.length)) {
        words.push_back(g.format_word(w));
        text += words.back() + '\n';
      }
      return {{{"length", o.length}, {"count", words.size()}, {"words", words}}, text};
    }

    Output cmd_same_language(Options const& o, std::ostream& err) {
      bool const same = same_factor_language(load(o, 0, err), load(o, 1, err));
      return {{{"same_language", same}}, std::string("same language: ") + (same ? "yes" : "no") + '\n',
              same ? exit_pass : exit_failed};
    }

    Output cmd_from_ultragraph(Options const& o) {
      return graph_output(ultragraph_to_labelled(load_ultragraph(o.paths.at(0))));
    }

    Output cmd_to_ultragraph(Options const& o, std::ostream& err) {
      auto const u     = labelled_to_ultragraph(load(o, 0, err));
      json       edges = json::array();
      for (auto const& e : u.edges) {
        edges.push_back({{"id", e.id}, {"source", e.source}, {"range", e.range}});
      }
      return {{{"ultragraph", {{"format", 1}, {"vertices", u.vertices}, {"edges", edges}}}}, emit_ultragraph(u)};
    }

    Output cmd_verify(Options const& o, std::ostream& err) {
      auto const suite = parse_suite(o.suite);
      if (!suite) {
        throw CLI::ValidationError("--suite", "unknown suite " + o.suite);
      }
      Algebra const alg(LabelledSpace::standard(load(o, 0, err), family_of(o)));
      return report_output(verify_axioms(alg, o.depth, *suite));
    }

    Output cmd_oracle(Options const& o, std::ostream& err) {
      auto const sp = LabelledSpace::standard(load(o, 0, err), family_of(o));
      return report_output(check_band_relations(sp, o.big_l, o.big_k));
    }

    Output cmd_element(Options const& o, std::ostream& err) {
      Algebra const alg(LabelledSpace::standard(load(o, 0, err), family_of(o)));
      Element const x = parse_element(alg, o.paths.at(1));
      Output        out;
      auto const    deg = degree(x);
      out.doc["element"] = format_element(alg, x);
      out.doc["degree"]  = deg ? json(*deg) : json(nullptr);
      out.text = "element: " + format_element(alg, x) + "\ndegree: " + (deg ? std::to_string(*deg) : "mixed") + '\n';
      if (o.other.empty()) {
        return out;
      }
      Element const y = parse_element(alg, o.other);
      auto const    v = alg.compare_at_depth(x, y, o.depth);
      out.doc["other"]    = format_element(alg, y);
      out.doc["symbolic"] = to_string(v);
      out.text += "other: " + format_element(alg, y) + "\nsymbolic: " + to_string(v) + '\n';
      out.code = v == Verdict::equal ? exit_pass : exit_failed;
      if (is_left_resolving(alg.graph())) {
        TruncatedRep const rep(alg.space(), o.big_l);
        bool const         same = oracle_equal(rep, x, y, o.depth);
        out.doc["oracle"]       = same ? "equal" : "different";
        out.text += std::string("oracle: ") + (same ? "equal" : "different") + '\n';
      }
      return out;
    }

  }  // namespace

  LabelledGraph load_graph_argument(std::string const& path, std::vector<std::string>* warnings) {
    if (has_suffix(path, ".pat")) {
      return presentation_from_forbidden(load_patterns(path));
    }
    if (has_suffix(path, ".ug")) {
      return ultragraph_to_labelled(load_ultragraph(path));
    }
    return load_labelled_graph(path, warnings);
  }

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Labelled graphs, labelled spaces and their algebras", "lspace"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--seed-order", o.seed_order, "Order of seeds and outputs")->check(CLI::IsMember({"canonical"}));

    std::function<Output()> action;
    auto command = [&](char const* name, char const* help, std::size_t inputs, auto fn) {
      auto* sub = app.add_subcommand(name, help);
      sub->add_option("inputs", o.paths, "Input files")->required()->expected(static_cast<int>(inputs));
      sub->callback([&action, fn, &err] { action = [fn, &err] { return fn(err); }; });
      return sub;
    };
    auto const& opts = o;
    auto family_flag = [&](CLI::App* sub) {
      sub->add_option("--family", o.family, "Accommodating family")->check(CLI::IsMember({"e0", "e0-"}));
    };

    family_flag(command("check", "Structure and resolving predicates", 1,
                        [&](std::ostream& e) { return cmd_check(opts, e); }));
    family_flag(command("closure", "Accommodating family", 1, [&](std::ostream& e) { return cmd_closure(opts, e); }));
    command("cover", "Left-Krieger cover, predecessor graph or minimal left-resolving presentation", 1,
            [&](std::ostream& e) { return cmd_cover(opts, e); })
        ->add_option("--kind", o.kind, "Cover kind")
        ->check(CLI::IsMember({"krieger", "predecessor", "minimal"}));
    command("dual", "Dual labelled graph", 1,
            [&](std::ostream& e) { return graph_output(dual_labelled_graph(load(opts, 0, e))); });
    command("dual-identities", "Follower, relative-range and source identities of the dual", 1,
            [&](std::ostream& e) { return report_output(check_dual_identities(load(opts, 0, e))); });
    command("iso", "Labelled-graph isomorphism", 2, [&](std::ostream& e) {
      auto g1 = load(opts, 0, e);
      auto g2 = load(opts, 1, e);
      return morphism_output("isomorphic", g1, g2, labelled_graph_isomorphic(g1, g2));
    });
    command("embed", "Labelled-graph embedding of the first graph into the second", 2, [&](std::ostream& e) {
      auto g1 = load(opts, 0, e);
      auto g2 = load(opts, 1, e);
      return morphism_output("embeds", g1, g2, find_labelled_embedding(g1, g2));
    });
    command("language", "Factor language of one length", 1, [&](std::ostream& e) { return cmd_language(opts, e); })
        ->add_option("--length", o.length, "Word length")
        ->required();
    command("same-language", "Compare factor languages", 2,
            [&](std::ostream& e) { return cmd_same_language(opts, e); });
    command("from-forbidden", "Presentation of a shift given by forbidden patterns", 1,
            [&](std::ostream&) { return graph_output(presentation_from_forbidden(load_patterns(opts.paths.at(0)))); });
    command("from-ultragraph", "Labelled graph of an ultragraph", 1,
            [&](std::ostream&) { return cmd_from_ultragraph(opts); });
    command("to-ultragraph", "Ultragraph of a labelled graph", 1,
            [&](std::ostream& e) { return cmd_to_ultragraph(opts, e); });

    auto* verify = command("verify", "Check the defining relations symbolically", 1,
                           [&](std::ostream& e) { return cmd_verify(opts, e); });
    family_flag(verify);
    verify->add_option("--depth", o.depth, "Comparison depth K");
    verify->add_option("--suite", o.suite, "Which checks to run")
        ->check(CLI::IsMember({"axioms", "matsumoto", "unit", "dual", "graph", "all"}));

    auto* oracle = command("oracle", "Check the relations in the truncated path representation", 1,
                           [&](std::ostream& e) { return cmd_oracle(opts, e); });
    family_flag(oracle);
    oracle->add_option("--L", o.big_l, "Longest basis path");
    oracle->add_option("--K", o.big_k, "Margin kept clear of the truncation");

    // The literal is the second positional argument.
    auto* element = command("element", "Normalise an element literal and optionally compare it with another", 2,
                            [&](std::ostream& e) { return cmd_element(opts, e); });
    family_flag(element);
    element->add_option("--equal", o.other, "Second element literal");
    element->add_option("--depth", o.depth, "Comparison depth K");
    element->add_option("--L", o.big_l, "Longest basis path for the oracle");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      std::ostringstream help;
      int const          code = app.exit(e, help, err);
      out << help.str();
      return code == 0 ? exit_pass : exit_usage;
    }

    try {
      Output const result = action();
      if (o.format == "machine") {
        out << result.doc.dump(2) << '\n';
      } else {
        out << result.text;
      }
      return result.code;
    } catch (CLI::Error const& e) {
      err << "error: " << e.what() << '\n';
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
    }
    return exit_usage;
  }

}  // namespace lspace::cli
