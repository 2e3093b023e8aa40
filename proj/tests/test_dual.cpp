#include <doctest.h>

#include "common.hpp"
#include "lspace/dual.hpp"
#include "lspace/error.hpp"
#include "lspace/verify.hpp"
#include "oracles.hpp"

using namespace lspace;

namespace {

  // The base word a1 b1 b2 … bn of a dual label sequence (a1.b1)(a2.b2)…(an.bn),
  // or empty when consecutive letters do not overlap.
  oracle::Word collapse(LabelledGraph const& g, LabelledGraph const& dual, oracle::Word const& w) {
    oracle::Word out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto const& name = dual.symbol(w[i]);
      auto const  dot  = name.find('.');
      auto const  a    = *g.find_symbol(name.substr(0, dot));
      auto const  b    = *g.find_symbol(name.substr(dot + 1));
      if (i == 0) {
        out.push_back(a);
      } else if (out.back() != a) {
        return {};
      }
      out.push_back(b);
    }
    return out;
  }

  std::vector<LabelledGraph> sinkless() {
    return {testing::e1(), testing::e2(), testing::e3(), testing::loop(), testing::z_krieger(),
            testing::z_presentation()};
  }

}  // namespace

TEST_CASE("dual graph structure") {
  auto const& g = testing::e1();
  auto const  d = dual_labelled_graph(g);
  CHECK(d.num_vertices() == g.num_edges());
  CHECK(d.num_edges() == oracle::paths(g, 2).size());
  for (auto const& e : d.edges()) {
    auto const& first  = g.edge(*g.find_edge(d.vertex_name(e.src)));
    auto const& second = g.edge(*g.find_edge(d.vertex_name(e.dst)));
    CHECK(first.dst == second.src);
    CHECK(d.symbol(e.label) == g.symbol(first.label) + "." + g.symbol(second.label));
  }
  CHECK(dual_symbol(g, d, 0, 0).has_value());
  auto const& z  = testing::z_krieger();
  auto const  zd = dual_labelled_graph(z);
  auto const  l2 = oracle::language(z, 2);
  for (SymbolId a = 0; a < z.alphabet_size(); ++a) {
    for (SymbolId b = 0; b < z.alphabet_size(); ++b) {
      CHECK(dual_symbol(z, zd, a, b).has_value() == (l2.count({a, b}) == 1));
    }
  }
}

TEST_CASE("dual languages shift by one") {
  for (auto const& g : sinkless()) {
    auto const d = dual_labelled_graph(g);
    for (std::size_t n = 1; n <= 5; ++n) {
      std::set<oracle::Word> image;
      for (auto const& w : oracle::language(d, n)) {
        auto const c = collapse(g, d, w);
        REQUIRE_FALSE(c.empty());
        CHECK(image.insert(c).second);
      }
      CHECK(image == oracle::language(g, n + 1));
    }
  }
}

TEST_CASE("dual identities have no counterexamples") {
  for (auto const& g : sinkless()) {
    auto const r = check_dual_identities(g);
    CHECK(r.passed());
    CHECK(r.failure_count() == 0);
    for (auto const* name : {"follower", "relative-range", "sources"}) {
      REQUIRE(r.find(name) != nullptr);
      CHECK(r.find(name)->checked > 0);
    }
  }
}

TEST_CASE("a damaged dual is caught") {
  auto const& g = testing::e1();
  auto const  d = dual_labelled_graph(g);
  std::vector<std::string> names;
  for (VertexId v = 0; v < d.num_vertices(); ++v) {
    names.push_back(d.vertex_name(v));
  }
  std::vector<EdgeSpec> es;
  for (EdgeId e = 1; e < d.num_edges(); ++e) {
    auto const& x = d.edge(e);
    es.push_back({x.id, d.vertex_name(x.src), d.vertex_name(x.dst), d.symbol(x.label)});
  }
  auto const damaged = LabelledGraph::build(names, es);
  CHECK_FALSE(check_dual_identities(g, damaged).passed());
}

TEST_CASE("dual sets match brute force") {
  auto const& g = testing::e2();
  auto const  d = dual_labelled_graph(g);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    VertexSet a = g.no_vertices();
    a.insert(v);
    auto const pre = dual_source_preimage(g, d, a);
    for (VertexId x = 0; x < d.num_vertices(); ++x) {
      CHECK(pre.contains(x) == (g.edge(*g.find_edge(d.vertex_name(x))).src == v));
    }
    CHECK(dual_base_sources(g, d, pre) == ((oracle::has_out_edge(g, v)) ? a : g.no_vertices()));
  }
}

TEST_CASE("dual preconditions") {
  auto const sink = parse_labelled_graph("vertex a\nvertex b\nedge x a a 0\nedge y a b 1\n");
  CHECK_THROWS_AS(dual_labelled_graph(sink), PreconditionError);
  auto const dotted = parse_labelled_graph("vertex a\nedge x a a p.q\n");
  CHECK_THROWS_AS(dual_labelled_graph(dotted), PreconditionError);
  CHECK_FALSE(dual_witness_hypotheses(sink).empty());
}

TEST_CASE("dual witness elements satisfy the dual relations") {
  for (auto const* g : {&testing::e1(), &testing::e2()}) {
    auto const r = dual_witness_check(*g, 2);
    CHECK(r.passed());
    CHECK(r.precondition_failures.empty());
    CHECK(r.sections.size() >= 4);
  }
  CHECK(dual_witness_check(testing::e1(), 2, FamilySeed::e0_minus).passed());
}
