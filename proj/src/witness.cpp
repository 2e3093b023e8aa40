#include <map>
#include <memory>

#include "lspace/dual.hpp"
#include "lspace/error.hpp"
#include "lspace/verify.hpp"

namespace lspace {

  std::string to_string(Suite s) {
    switch (s) {
      case Suite::axioms:
        return "axioms";
      case Suite::matsumoto:
        return "matsumoto";
      case Suite::unit:
        return "unit";
      case Suite::dual:
        return "dual";
      case Suite::graph:
        return "graph";
      case Suite::all:
        return "all";
    }
    return "all";
  }

  std::optional<Suite> parse_suite(std::string_view token) {
    for (Suite s : {Suite::axioms, Suite::matsumoto, Suite::unit, Suite::dual, Suite::graph, Suite::all}) {
      if (token == to_string(s)) {
        return s;
      }
    }
    return std::nullopt;
  }

  namespace {
    void compare(Algebra const& alg, Element const& x, Element const& y, std::size_t k, CheckSection& sec,
                 std::string const& what) {
      switch (alg.compare_at_depth(x, y, k)) {
        case Verdict::equal:
          sec.pass();
          break;
        case Verdict::different:
          sec.fail(what + ": " + format_element(alg, x) + " vs " + format_element(alg, y));
          break;
        case Verdict::indeterminate:
          sec.undecided();
          break;
      }
    }

    bool emits(LabelledGraph const& g, VertexSet const& a, SymbolId c) {
      bool found = false;
      a.for_each([&](VertexId v) {
        for (EdgeId e : g.out_edges(v)) {
          found = found || g.edge(e).label == c;
        }
      });
      return found;
    }

    VertexSet step(LabelledSpace const& space, VertexSet const& a, SymbolId c) {
      auto const& m = space.monoid();
      return m.element(m.generator(c)).image(a);
    }

    FamilySeed standard_seed(FamilySeed seed) {
      return seed == FamilySeed::custom ? FamilySeed::e0 : seed;
    }
  }  // namespace

  void check_representation(Algebra const& target, Representation const& rep, std::size_t k,
                            std::string const& prefix, CheckReport& out) {
    LabelledSpace const& space = *rep.space;
    LabelledGraph const& g     = space.graph();
    auto const&          sets  = space.family().sets();

    auto& proj = out.section(prefix + "(i)");
    if (rep.p_on_any_set && sets.size() > exhaustive_family_limit) {
      std::vector<VertexSet> atoms;
      {
        std::map<std::vector<bool>, VertexSet> by_membership;
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
          std::vector<bool> sig;
          for (auto const& a : sets) {
            sig.push_back(a.contains(v));
          }
          by_membership.try_emplace(sig, g.num_vertices()).first->second.insert(v);
        }
        for (auto& [sig, atom] : by_membership) {
          atoms.push_back(std::move(atom));
        }
      }
      std::vector<Element> images;
      for (auto const& x : atoms) {
        images.push_back(rep.p(x));
      }
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        for (std::size_t j = 0; j < atoms.size(); ++j) {
          compare(target, target.multiply(images[i], images[j]), i == j ? images[i] : Element(), k, proj,
                  "p_X p_Y on atoms X=" + g.format_set(atoms[i]) + " Y=" + g.format_set(atoms[j]));
        }
      }
      for (auto const& a : sets) {
        Element sum;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
          if (atoms[i].is_subset_of(a)) {
            sum += images[i];
          }
        }
        compare(target, rep.p(a), sum, k, proj, "p_A = Σ p_X over atoms, A=" + g.format_set(a));
      }
    } else {
      for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i; j < sets.size(); ++j) {
          auto const&       a     = sets[i];
          auto const&       b     = sets[j];
          std::string const where = "A=" + g.format_set(a) + " B=" + g.format_set(b);
          Element const     pa = rep.p(a), pb = rep.p(b), pab = rep.p(a & b);
          compare(target, target.multiply(pa, pb), pab, k, proj, "p_A p_B = p_{A∩B}, " + where);
          compare(target, target.multiply(pb, pa), pab, k, proj, "p_B p_A = p_{A∩B}, " + where);
          compare(target, rep.p(a | b) + pab, pa + pb, k, proj, "p_{A∪B} + p_{A∩B} = p_A + p_B, " + where);
        }
      }
    }

    auto& commute = out.section(prefix + "(ii)");
    for (auto const& a : sets) {
      for (SymbolId c = 0; c < g.alphabet_size(); ++c) {
        compare(target, target.multiply(rep.p(a), rep.s(c)), target.multiply(rep.s(c), rep.p(step(space, a, c))), k,
                commute, "p_A s_a = s_a p_{r(A,a)}, A=" + g.format_set(a) + " a=" + g.symbol(c));
      }
    }

    auto& isometry = out.section(prefix + "(iii)");
    for (SymbolId a = 0; a < g.alphabet_size(); ++a) {
      Element const sa_star = adjoint(rep.s(a));
      for (SymbolId b = 0; b < g.alphabet_size(); ++b) {
        Element const lhs = target.multiply(sa_star, rep.s(b));
        if (a == b) {
          compare(target, lhs, rep.p(step(space, g.all_vertices(), a)), k, isometry,
                  "s_a* s_a = p_{r(a)}, a=" + g.symbol(a));
        } else {
          compare(target, lhs, Element(), k, isometry, "s_a* s_b = 0, a=" + g.symbol(a) + " b=" + g.symbol(b));
        }
      }
    }

    auto& sum = out.section(prefix + "(iv)");
    for (auto const& a : sets) {
      Element rhs;
      bool    any = false;
      for (SymbolId c = 0; c < g.alphabet_size(); ++c) {
        if (emits(g, a, c)) {
          any = true;
          rhs += target.multiply({rep.s(c), rep.p(step(space, a, c)), adjoint(rep.s(c))});
        }
      }
      if (any) {
        compare(target, rep.p(a), rhs, k, sum, "p_A = Σ s_a p_{r(A,a)} s_a*, A=" + g.format_set(a));
      }
    }
  }

  std::vector<std::string> dual_witness_hypotheses(LabelledGraph const& g) {
    std::vector<std::string> out;
    if (!is_left_resolving(g)) {
      out.push_back("the graph is not left-resolving");
    }
    if (has_sinks(g)) {
      out.push_back("the graph has a sink");
    }
    for (auto const& a : g.alphabet()) {
      if (a.find('.') != std::string::npos) {
        out.push_back("symbol '" + a + "' contains '.'");
      }
    }
    return out;
  }

  std::vector<std::string> graph_witness_hypotheses(LabelledGraph const& g, FamilySeed seed) {
    std::vector<std::string> out;
    if (!is_left_resolving(g)) {
      out.push_back("the graph is not left-resolving");
    }
    auto const family = compute_family(g, standard_seed(seed));
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      VertexSet const single = VertexSet::singleton(g.num_vertices(), v);
      if (!family.contains(single)) {
        out.push_back(g.format_set(single) + " is not in the " + to_string(standard_seed(seed)) + " family");
      }
    }
    return out;
  }

  CheckReport dual_witness_check(LabelledGraph const& g, std::size_t k, FamilySeed seed) {
    CheckReport report;
    report.title = "dual witness (" + to_string(standard_seed(seed)) + ")";
    report.precondition_failures = dual_witness_hypotheses(g);
    if (!report.precondition_failures.empty()) {
      return report;
    }
    Algebra const       base(LabelledSpace::standard(g, standard_seed(seed)));
    LabelledGraph const dual = dual_labelled_graph(g);
    LabelledSpace const dual_space = LabelledSpace::standard(dual, standard_seed(seed));

    std::vector<Word> pair_of(dual.alphabet_size());
    for (SymbolId x = 0; x < dual.alphabet_size(); ++x) {
      auto const& token = dual.symbol(x);
      auto const  dot   = token.find('.');
      pair_of[x] = Word{*g.find_symbol(token.substr(0, dot)), *g.find_symbol(token.substr(dot + 1))};
    }

    std::vector<Element> t;
    for (Word const& ab : pair_of) {
      t.push_back(base.multiply({base.s(Word{ab[0]}), base.s(Word{ab[1]}), base.s_star(Word{ab[1]})}));
    }

    auto& sets_ok = report.section("dual Q sets");
    auto  cache   = std::make_shared<std::map<VertexSet, Element>>();
    auto  q       = [&, cache](VertexSet const& b) -> Element {
      if (auto it = cache->find(b); it != cache->end()) {
        return it->second;
      }
      Element out;
      for (SymbolId x = 0; x < dual.alphabet_size(); ++x) {
        if (!emits(dual, b, x)) {
          continue;
        }
        // Ends of the ab-paths whose first edge lies in B.
        VertexSet const set = dual_base_ranges(g, dual, step(dual_space, b, x));
        if (set.empty()) {
          continue;
        }
        if (!base.space().family().contains(set)) {
          sets_ok.fail("X(B,ab) = " + g.format_set(set) + " is not in the family, B=" + dual.format_set(b));
          continue;
        }
        out += base.monomial(pair_of[x], set, pair_of[x]);
      }
      cache->emplace(b, out);
      return out;
    };

    Representation rep{&dual_space, [&](SymbolId x) { return t[x]; }, q, true};
    check_representation(base, rep, k, "dual ", report);

    auto& gens = report.section("dual s_a");
    for (SymbolId a = 0; a < g.alphabet_size(); ++a) {
      VertexSet const ra = base.range(Word{a});
      Element         rhs;
      for (SymbolId b = 0; b < g.alphabet_size(); ++b) {
        if (!emits(g, ra, b)) {
          continue;
        }
        auto const x = dual_symbol(g, dual, a, b);
        rhs += base.multiply(t[*x], q(word_ranges(dual, Word{*x})));
      }
      compare(base, base.s(Word{a}), rhs, k, gens, "s_a = Σ_b T_ab Q_{r̂(ab)}, a=" + g.symbol(a));
    }

    auto& projs = report.section("dual p_A");
    for (auto const& a : base.space().family().sets()) {
      if (a.empty()) {
        continue;
      }
      VertexSet const pre = dual_source_preimage(g, dual, a);
      if (!dual_space.family().contains(pre)) {
        projs.fail("s⁻¹(A) = " + dual.format_set(pre) + " is not in the dual family, A=" + g.format_set(a));
        continue;
      }
      compare(base, base.p(a), q(pre), k, projs, "p_A = Q_{s⁻¹(A)}, A=" + g.format_set(a));
    }
    if (sets_ok.checked == 0) {
      sets_ok.pass();
    }
    return report;
  }

  CheckReport graph_witness_check(LabelledGraph const& g, std::size_t k, FamilySeed seed) {
    CheckReport report;
    report.title = "graph witness (" + to_string(standard_seed(seed)) + ")";
    report.precondition_failures = graph_witness_hypotheses(g, seed);
    if (!report.precondition_failures.empty()) {
      return report;
    }
    LabelledSpace const space = LabelledSpace::standard(g, standard_seed(seed));
    LabelledGraph const trivial = trivial_labelling(g);
    Algebra const       target(LabelledSpace::standard(trivial, FamilySeed::e0));

    auto edge_symbol = [&](EdgeId e) { return *trivial.find_symbol(g.edge(e).id); };
    auto vertex      = [&](VertexId v) { return target.p(VertexSet::singleton(g.num_vertices(), v)); };

    std::vector<Element> t(g.alphabet_size());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      t[g.edge(e).label] += target.s(Word{edge_symbol(e)});
    }
    auto q = [&](VertexSet const& a) {
      Element out;
      a.for_each([&](VertexId v) { out += vertex(v); });
      return out;
    };

    Representation rep{&space, [&](SymbolId a) { return t[a]; }, q, true};
    check_representation(target, rep, k, "graph ", report);

    auto& edges = report.section("graph s_e");
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      Edge const& ed = g.edge(e);
      compare(target, target.s(Word{edge_symbol(e)}),
              target.multiply(t[ed.label], q(VertexSet::singleton(g.num_vertices(), ed.dst))), k, edges,
              "s_e = T_{π(e)} Q_{r(e)}, e=" + ed.id);
    }
    auto& verts = report.section("graph p_v");
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      VertexSet const single = VertexSet::singleton(g.num_vertices(), v);
      compare(target, vertex(v), q(single), k, verts, "p_v = Q_{v}, v=" + g.vertex_name(v));
    }
    return report;
  }

  CheckReport verify_axioms(Algebra const& alg, std::size_t k, Suite which) {
    CheckReport          report;
    LabelledGraph const& g = alg.graph();
    report.title           = "verify (" + to_string(which) + ", depth " + std::to_string(k) + ")";
    if (!alg.weakly_left_resolving()) {
      report.precondition_failures.push_back("the space is not weakly left-resolving");
      return report;
    }
    bool const all = which == Suite::all;

    if (all || which == Suite::axioms) {
      Representation rep{&alg.space(), [&](SymbolId a) { return alg.s(Word{a}); },
                         [&](VertexSet const& a) { return alg.p(a); }};
      check_representation(alg, rep, k, "", report);
    }

    if (all || which == Suite::matsumoto) {
      auto&             sec = report.section("matsumoto");
      std::vector<Word> words;
      for (std::size_t n = 1; n <= 2; ++n) {
        auto w = words_of_length(g, n);
        words.insert(words.end(), w.begin(), w.end());
      }
      for (Word const& a : words) {
        for (Word const& b : words) {
          Word const ab = a + b;
          if (!alg.is_path(ab)) {
            continue;
          }
          compare(alg, alg.multiply({alg.s_star(a), alg.s(a), alg.s(b)}),
                  alg.multiply({alg.s(b), alg.s_star(ab), alg.s(ab)}), k, sec,
                  "s_α* s_α s_β = s_β s_αβ* s_αβ, α=" + g.format_word(a) + " β=" + g.format_word(b));
        }
      }
    }

    if (all || which == Suite::unit) {
      if (has_sinks(g)) {
        if (all) {
          report.notes.push_back("unit suite skipped: the graph has a sink");
        } else {
          report.precondition_failures.push_back("the unit needs a graph without sinks");
        }
      } else {
        auto&   sec = report.section("unit");
        Element u;
        for (SymbolId a = 0; a < g.alphabet_size(); ++a) {
          u += alg.multiply(alg.s(Word{a}), alg.s_star(Word{a}));
        }
        std::vector<std::pair<std::string, Element>> gens;
        for (SymbolId a = 0; a < g.alphabet_size(); ++a) {
          gens.emplace_back("s_" + g.symbol(a), alg.s(Word{a}));
          gens.emplace_back("s_" + g.symbol(a) + "*", alg.s_star(Word{a}));
        }
        for (auto const& a : alg.space().family().sets()) {
          if (!a.empty()) {
            gens.emplace_back("p_" + g.format_set(a), alg.p(a));
          }
        }
        for (auto const& [name, x] : gens) {
          compare(alg, alg.multiply(u, x), x, k, sec, "u·" + name + " = " + name);
          compare(alg, alg.multiply(x, u), x, k, sec, name + "·u = " + name);
        }
      }
    }

    FamilySeed const seed = standard_seed(alg.space().family().seed());
    if (all || which == Suite::dual) {
      auto hyp = dual_witness_hypotheses(g);
      if (all && !hyp.empty()) {
        report.notes.push_back("dual suite skipped: " + hyp.front());
      } else {
        report.merge(dual_witness_check(g, k, seed));
      }
    }
    if (all || which == Suite::graph) {
      auto hyp = graph_witness_hypotheses(g, seed);
      if (all && !hyp.empty()) {
        report.notes.push_back("graph suite skipped: " + hyp.front());
      } else {
        report.merge(graph_witness_check(g, k, seed));
      }
    }
    return report;
  }

}  // namespace lspace
