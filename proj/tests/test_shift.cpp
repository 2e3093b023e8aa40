#include <doctest.h>

#include <functional>
#include <random>
#include <regex>

#include "common.hpp"
#include "lspace/error.hpp"
#include "oracles.hpp"

using namespace lspace;
using testing::e1;
using testing::e2;
using testing::e3;

namespace {

  // w ∈ ℒ iff reading w from the full vertex set leaves something.
  bool in_language(LabelledGraph const& g, oracle::Word const& w) {
    oracle::Set t = oracle::all_vertices(g);
    for (auto c : w) {
      t = oracle::one_step(g, t, c);
      if (t.empty()) {
        return false;
      }
    }
    return true;
  }

  // One character per symbol, so patterns become regular expressions.
  std::string pattern_regex(PatternSet const& ps, Pattern const& p) {
    auto ch = [&](std::string const& s) {
      auto i = std::find(ps.alphabet.begin(), ps.alphabet.end(), s) - ps.alphabet.begin();
      return std::string(1, char('a' + i));
    };
    std::string re;
    for (auto const& item : p.items) {
      std::string run;
      for (auto const& s : item.symbols) {
        run += ch(s);
      }
      re += item.starred ? "(" + run + ")*" : run;
    }
    return re;
  }

  // Words of length n over the alphabet that extend by m symbols on each
  // side to a finite word with no forbidden factor.
  std::set<std::string> extendable_words(PatternSet const& ps, std::size_t n, std::size_t m) {
    std::string alternatives;
    for (auto const& p : ps.patterns) {
      alternatives += (alternatives.empty() ? "" : "|") + pattern_regex(ps, p);
    }
    std::regex const bad(alternatives);
    auto clean = [&](std::string const& s) { return !std::regex_search(s, bad); };
    std::size_t const k = ps.alphabet.size();

    std::set<std::string> out;
    std::function<bool(std::string const&, std::size_t, std::size_t)> extend =
        [&](std::string const& s, std::size_t left, std::size_t right) {
          if (!clean(s)) {
            return false;
          }
          if (left == 0 && right == 0) {
            return true;
          }
          for (std::size_t c = 0; c < k; ++c) {
            std::string const t = right > 0 ? s + char('a' + c) : char('a' + c) + s;
            if (extend(t, right > 0 ? left : left - 1, right > 0 ? right - 1 : 0)) {
              return true;
            }
          }
          return false;
        };
    std::function<void(std::string const&)> grow = [&](std::string const& s) {
      if (!clean(s)) {
        return;
      }
      if (s.size() == n) {
        if (extend(s, m, m)) {
          out.insert(s);
        }
        return;
      }
      for (std::size_t c = 0; c < k; ++c) {
        grow(s + char('a' + c));
      }
    };
    grow("");
    return out;
  }

  std::set<std::string> language_strings(LabelledGraph const& g, std::vector<std::string> const& alphabet,
                                         std::size_t n) {
    std::set<std::string> out;
    for (auto const& w : factor_language(g, n)) {
      std::string s;
      for (auto c : w) {
        s += char('a' + (std::find(alphabet.begin(), alphabet.end(), g.symbol(c)) - alphabet.begin()));
      }
      out.insert(s);
    }
    return out;
  }

  // Distinct sets {u ∈ ℒⁿ : u·x ∈ ℒ} over the words x of length m.
  std::size_t predecessor_classes(LabelledGraph const& g, std::size_t n, std::size_t m) {
    auto const                         prefixes = oracle::language(g, n);
    std::set<std::vector<oracle::Word>> classes;
    for (auto const& x : oracle::language(g, m)) {
      std::vector<oracle::Word> pred;
      for (auto const& u : prefixes) {
        oracle::Word ux = u;
        ux.insert(ux.end(), x.begin(), x.end());
        if (in_language(g, ux)) {
          pred.push_back(u);
        }
      }
      classes.insert(pred);
    }
    return classes.size();
  }

  // Distinct past sets, seen through words of length n, of the eventually
  // periodic right rays ν p^∞ with |ν|, |p| ≤ 3, each read to length m.
  std::size_t ray_past_classes(LabelledGraph const& g, std::size_t n, std::size_t m) {
    auto const             prefixes = oracle::language(g, n);
    std::vector<oracle::Word> short_words{{}};
    for (std::size_t k = 1; k <= 3; ++k) {
      for (auto const& w : oracle::language(g, k)) {
        short_words.push_back(w);
      }
    }
    std::set<std::vector<oracle::Word>> classes;
    for (auto const& nu : short_words) {
      for (auto const& p : short_words) {
        if (p.empty()) {
          continue;
        }
        oracle::Word x = nu;
        while (x.size() < m) {
          x.push_back(p[(x.size() - nu.size()) % p.size()]);
        }
        if (!in_language(g, x)) {
          continue;
        }
        std::vector<oracle::Word> past;
        for (auto const& u : prefixes) {
          oracle::Word ux = u;
          ux.insert(ux.end(), x.begin(), x.end());
          if (in_language(g, ux)) {
            past.push_back(u);
          }
        }
        classes.insert(past);
      }
    }
    return classes.size();
  }

}  // namespace

TEST_CASE("pattern files") {
  auto const ps = load_patterns(testing::corpus("z.pat"));
  CHECK(ps.alphabet == std::vector<std::string>{"1", "2", "3", "4"});
  REQUIRE(ps.patterns.size() == 4);
  CHECK(format_pattern(ps.patterns[0]) == "1 (2)* 1");
  CHECK(parse_patterns("alphabet a b\nforbid a(b)*a\n").patterns[0] == parse_patterns("alphabet a b\nforbid a ( b ) * a\n").patterns[0]);
  CHECK_THROWS_AS(parse_patterns("forbid a\n"), ParseError);
  CHECK_THROWS_AS(parse_patterns("alphabet a\nforbid b\n"), ParseError);
  CHECK_THROWS_AS(parse_patterns("alphabet a\nforbid (a\n"), ParseError);
  CHECK_THROWS_AS(parse_patterns("alphabet a\nforbid (a)\n"), ParseError);
  CHECK_THROWS_AS(presentation_from_forbidden(parse_patterns("alphabet a\nforbid a\n")), EmptyLanguageError);
  CHECK_THROWS_AS(presentation_from_forbidden(parse_patterns("alphabet a b\nforbid (a)*\n")), PreconditionError);
}

TEST_CASE("presentations of forbidden-pattern shifts have the right language") {
  auto const even = parse_patterns("alphabet 0 1\nforbid 1 0 (0 0)* 1\n");
  auto const g    = presentation_from_forbidden(even);
  CHECK(same_factor_language(g, e1()));
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(language_strings(g, even.alphabet, n) == extendable_words(even, n, 6));
  }

  auto const ps = load_patterns(testing::corpus("z.pat"));
  auto const z  = testing::z_presentation();
  CHECK(is_essential(z));
  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(language_strings(z, ps.alphabet, n) == extendable_words(ps, n, 5));
  }

  auto const golden = parse_patterns("alphabet a b\nforbid b b\n");
  auto const gm     = presentation_from_forbidden(golden);
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(language_strings(gm, golden.alphabet, n) == extendable_words(golden, n, 3));
  }
}

TEST_CASE("factor languages match path enumeration") {
  for (auto const* g : {&e1(), &e2(), &e3(), &testing::z_krieger()}) {
    for (std::size_t n = 1; n <= 6; ++n) {
      auto const words = factor_language(*g, n);
      std::set<oracle::Word> got;
      for (auto const& w : words) {
        got.insert(w.symbols());
      }
      CHECK(got.size() == words.size());
      CHECK(std::is_sorted(words.begin(), words.end(),
                           [](Word const& a, Word const& b) { return a.symbols() < b.symbols(); }));
      CHECK(got == oracle::language(*g, n));
    }
  }
  CHECK_THROWS_AS(factor_language(e1(), 0), PreconditionError);
  CHECK_THROWS_AS(factor_language(parse_labelled_graph("vertex a\nvertex b\nedge x a b 0\n"), 1), PreconditionError);
}

TEST_CASE("the three even-shift presentations share one language") {
  for (std::size_t n = 1; n <= 10; ++n) {
    auto const l1 = oracle::language(e1(), n);
    CHECK(oracle::language(e2(), n) == l1);
    CHECK(oracle::language(e3(), n) == l1);
  }
  CHECK(same_factor_language(e1(), e2()));
  CHECK(same_factor_language(e2(), e3()));
  CHECK_FALSE(same_factor_language(e1(), parse_labelled_graph("vertex u\nedge a u u 0\nedge b u u 1\n")));
  CHECK_THROWS_AS(same_factor_language(e1(), testing::loop()), PreconditionError);
  CHECK_FALSE(equal_factor_languages(e1(), testing::loop()));
}

TEST_CASE("minimised follower automata are canonical") {
  auto const a1 = minimize(follower_automaton(e1()));
  auto const a3 = minimize(follower_automaton(e3()));
  CHECK(a1.delta == a3.delta);
  CHECK(a1.states.size() <= follower_automaton(e1()).states.size());
}

TEST_CASE("left-Krieger cover of the even shift") {
  for (auto const* g : {&e1(), &e2(), &e3()}) {
    auto const k = left_krieger_cover(*g);
    CHECK(k.num_vertices() == 3);
    CHECK(k.num_edges() == 5);
    CHECK(oracle::isomorphic(k, e2()));
    CHECK(labelled_graph_isomorphic(k, e2()).has_value());
    CHECK(oracle::left_resolving(k));
    CHECK(same_factor_language(k, *g));
  }
}

TEST_CASE("predecessor graph of the even shift") {
  for (auto const* g : {&e1(), &e2(), &e3()}) {
    auto const p = predecessor_graph(*g);
    CHECK(oracle::isomorphic(p, e2()));
    CHECK(oracle::left_resolving(p));
  }
}

TEST_CASE("covers of the shift Z") {
  auto const& z = testing::z_presentation();
  auto const  k = left_krieger_cover(z);
  auto const  p = predecessor_graph(z);
  CHECK(oracle::left_resolving(k));
  CHECK(oracle::left_resolving(p));
  CHECK(same_factor_language(k, z));
  CHECK(same_factor_language(p, z));
  CHECK(find_labelled_embedding(k, p).has_value());
  CHECK(k.num_vertices() == ray_past_classes(z, 4, 12));
  CHECK(p.num_vertices() == predecessor_classes(z, 4, 6));
  CHECK(labelled_graph_isomorphic(left_krieger_cover(k), k).has_value());
}

TEST_CASE("covers preserve the language on random graphs") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::string> vs{"a", "b", "c", "d"};
    std::vector<EdgeSpec>    es;
    for (int i = 0; i < 7; ++i) {
      es.push_back({"e" + std::to_string(i), vs[rng() % 4], vs[rng() % 4], std::string(1, char('0' + rng() % 2))});
    }
    auto const g = trim_to_essential(LabelledGraph::build(vs, es));
    if (g.num_vertices() == 0) {
      continue;
    }
    CAPTURE(emit_labelled_graph(g));
    auto const k = left_krieger_cover(g);
    auto const p = predecessor_graph(g);
    CHECK(oracle::left_resolving(k));
    CHECK(oracle::left_resolving(p));
    CHECK(equal_factor_languages(k, g));
    CHECK(equal_factor_languages(p, g));
  }
}

TEST_CASE("minimal left-resolving presentation") {
  for (auto const* g : {&e1(), &e2(), &e3()}) {
    auto const m = minimal_left_resolving(*g);
    CHECK(oracle::isomorphic(m, e1()));
    CHECK(oracle::isomorphic(minimal_left_resolving(m), m));
  }
  auto const m = minimal_left_resolving(testing::z_presentation());
  CHECK(oracle::left_resolving(m));
  CHECK(same_factor_language(m, testing::z_presentation()));
  CHECK(m.num_vertices() <= testing::z_krieger().num_vertices());
  auto const two = parse_labelled_graph("vertex a\nvertex b\nedge x a a 0\nedge y b b 1\n");
  CHECK_THROWS_AS(minimal_left_resolving(two), PreconditionError);
}

TEST_CASE("ultragraphs") {
  auto const u = load_ultragraph(testing::corpus("fan.ug"));
  auto const g = ultragraph_to_labelled(u);
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 5);
  CHECK(oracle::left_resolving(g));
  CHECK(labelled_to_ultragraph(g) == u);
  CHECK(parse_ultragraph(emit_ultragraph(u)) == u);
  CHECK_THROWS_AS(labelled_to_ultragraph(e2()), PreconditionError);
  CHECK_THROWS_AS(parse_ultragraph("uvertex v\nuedge e v { }\n"), Error);
  CHECK_THROWS_AS(parse_ultragraph("uvertex v\nuedge e v { w }\n"), Error);

  std::mt19937 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    UltragraphSpec r;
    r.vertices = {"p", "q", "r"};
    for (int i = 0; i < 3; ++i) {
      UltraEdge e{"u" + std::to_string(i), r.vertices[rng() % 3], {}};
      for (auto const& v : r.vertices) {
        if (rng() % 2) {
          e.range.push_back(v);
        }
      }
      if (e.range.empty()) {
        e.range.push_back("p");
      }
      r.edges.push_back(e);
    }
    r = canonical_ultragraph(r);
    auto const lg = ultragraph_to_labelled(r);
    CHECK(oracle::left_resolving(lg));
    CHECK(labelled_to_ultragraph(lg) == r);
  }
}
