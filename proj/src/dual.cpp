#include "lspace/dual.hpp"

#include "lspace/error.hpp"
#include "lspace/labelled_space.hpp"

namespace lspace {

  LabelledGraph dual_labelled_graph(LabelledGraph const& g) {
    if (has_sinks(g)) {
      throw PreconditionError("the dual graph needs a graph without sinks");
    }
    for (auto const& a : g.alphabet()) {
      if (a.find('.') != std::string::npos) {
        throw PreconditionError("symbol '" + a + "' contains '.', which dual labels use as a separator");
      }
    }
    std::vector<std::string> vertices;
    for (auto const& e : g.edges()) {
      vertices.push_back(e.id);
    }
    std::vector<EdgeSpec> edges;
    for (auto const& e : g.edges()) {
      for (EdgeId f : g.out_edges(e.dst)) {
        Edge const& ef = g.edge(f);
        edges.push_back({e.id + "." + ef.id, e.id, ef.id, g.symbol(e.label) + "." + g.symbol(ef.label)});
      }
    }
    return LabelledGraph::build(vertices, edges);
  }

  std::optional<SymbolId> dual_symbol(LabelledGraph const& g, LabelledGraph const& dual, SymbolId a, SymbolId b) {
    return dual.find_symbol(g.symbol(a) + "." + g.symbol(b));
  }

  namespace {
    // Base edge behind each dual vertex.
    std::vector<EdgeId> base_edges(LabelledGraph const& g, LabelledGraph const& dual) {
      std::vector<EdgeId> out;
      for (auto const& name : dual.vertex_names()) {
        auto e = g.find_edge(name);
        if (!e) {
          throw PreconditionError("dual vertex '" + name + "' is not an edge of the base graph");
        }
        out.push_back(*e);
      }
      return out;
    }

    // L¹_A: the symbols emitted from some vertex of A.
    bool emits(LabelledGraph const& g, VertexSet const& a, SymbolId c) {
      bool found = false;
      a.for_each([&](VertexId v) {
        for (EdgeId e : g.out_edges(v)) {
          found = found || g.edge(e).label == c;
        }
      });
      return found;
    }
  }  // namespace

  VertexSet dual_source_preimage(LabelledGraph const& g, LabelledGraph const& dual, VertexSet const& a) {
    auto const base = base_edges(g, dual);
    VertexSet  out(dual.num_vertices());
    for (VertexId x = 0; x < base.size(); ++x) {
      if (a.contains(g.edge(base[x]).src)) {
        out.insert(x);
      }
    }
    return out;
  }

  VertexSet dual_base_sources(LabelledGraph const& g, LabelledGraph const& dual, VertexSet const& b) {
    auto const base = base_edges(g, dual);
    VertexSet  out(g.num_vertices());
    b.for_each([&](VertexId x) { out.insert(g.edge(base[x]).src); });
    return out;
  }

  VertexSet dual_base_ranges(LabelledGraph const& g, LabelledGraph const& dual, VertexSet const& b) {
    auto const base = base_edges(g, dual);
    VertexSet  out(g.num_vertices());
    b.for_each([&](VertexId x) { out.insert(g.edge(base[x]).dst); });
    return out;
  }

  CheckReport check_dual_identities(LabelledGraph const& g, LabelledGraph const& dual) {
    CheckReport report;
    report.title = "dual identities";
    try {
      base_edges(g, dual);
    } catch (PreconditionError const& e) {
      report.precondition_failures.push_back(e.what());
      return report;
    }

    auto& follower = report.section("follower");
    auto& ranges   = report.section("relative-range");
    for (Word const& ab : words_of_length(g, 2)) {
      SymbolId const  a = ab[0], b = ab[1];
      auto const      hat_ab   = dual_symbol(g, dual, a, b);
      VertexSet const r_ab     = word_ranges(g, ab);
      VertexSet const hat_r_ab = hat_ab ? word_ranges(dual, Word{*hat_ab}) : dual.no_vertices();
      VertexSet const base     = dual_base_sources(g, dual, hat_r_ab);
      for (SymbolId c = 0; c < g.alphabet_size(); ++c) {
        std::string const where = "ab=" + g.format_word(ab) + " c=" + g.symbol(c);
        auto const        hat_bc = dual_symbol(g, dual, b, c);
        bool const        lhs    = emits(g, r_ab, c);
        bool const        rhs    = hat_bc && emits(dual, hat_r_ab, *hat_bc);
        follower.expect(lhs == rhs, where + (lhs ? " (missing on the dual side)" : " (extra on the dual side)"));

        VertexSet const left  = relative_range(g, r_ab, Word{c});
        VertexSet const right = relative_range(g, base, Word{b, c});
        ranges.expect(left == right, where + ": " + g.format_set(left) + " vs " + g.format_set(right));
      }
    }

    // Left side: some path labelled ab starts in A.
    auto& sources = report.section("sources");
    auto const family = compute_family(g, FamilySeed::e0);
    for (auto const& set : family.sets()) {
      VertexSet const pre = dual_source_preimage(g, dual, set);
      for (Word const& ab : words_of_length(g, 2)) {
        bool const lhs    = word_sources(g, ab).intersects(set);
        auto const hat_ab = dual_symbol(g, dual, ab[0], ab[1]);
        bool const rhs    = hat_ab && emits(dual, pre, *hat_ab);
        sources.expect(lhs == rhs, "A=" + g.format_set(set) + " ab=" + g.format_word(ab));
      }
    }
    return report;
  }

  CheckReport check_dual_identities(LabelledGraph const& g) {
    return check_dual_identities(g, dual_labelled_graph(g));
  }

}  // namespace lspace
