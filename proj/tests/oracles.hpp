#pragma once

// Brute-force reference computations. They read the raw edge list of a
// graph and use nothing else from the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "lspace/graph.hpp"

namespace oracle {

  using Set   = std::set<std::uint32_t>;
  using Word  = std::vector<std::uint32_t>;
  using Paths = std::vector<std::vector<std::uint32_t>>;

  inline Set to_set(lspace::VertexSet const& s) {
    auto m = s.members();
    return {m.begin(), m.end()};
  }

  inline lspace::VertexSet to_vertex_set(lspace::LabelledGraph const& g, Set const& s) {
    lspace::VertexSet out = g.no_vertices();
    for (auto v : s) {
      out.insert(v);
    }
    return out;
  }

  inline Set all_vertices(lspace::LabelledGraph const& g) {
    Set out;
    for (std::uint32_t v = 0; v < g.num_vertices(); ++v) {
      out.insert(v);
    }
    return out;
  }

  // Every edge sequence of length n in which consecutive edges meet.
  inline Paths paths(lspace::LabelledGraph const& g, std::size_t n) {
    Paths out;
    if (n == 0) {
      return out;
    }
    for (std::uint32_t e = 0; e < g.edges().size(); ++e) {
      out.push_back({e});
    }
    for (std::size_t k = 1; k < n; ++k) {
      Paths next;
      for (auto const& p : out) {
        for (std::uint32_t e = 0; e < g.edges().size(); ++e) {
          if (g.edges()[e].src == g.edges()[p.back()].dst) {
            auto q = p;
            q.push_back(e);
            next.push_back(std::move(q));
          }
        }
      }
      out = std::move(next);
    }
    return out;
  }

  inline Word label(lspace::LabelledGraph const& g, std::vector<std::uint32_t> const& path) {
    Word w;
    for (auto e : path) {
      w.push_back(g.edges()[e].label);
    }
    return w;
  }

  inline std::set<Word> language(lspace::LabelledGraph const& g, std::size_t n) {
    std::set<Word> out;
    for (auto const& p : paths(g, n)) {
      out.insert(label(g, p));
    }
    return out;
  }

  inline Set relative_range(lspace::LabelledGraph const& g, Set const& a, Word const& w) {
    Set out;
    for (auto const& p : paths(g, w.size())) {
      if (label(g, p) == w && a.count(g.edges()[p.front()].src)) {
        out.insert(g.edges()[p.back()].dst);
      }
    }
    return out;
  }

  inline Set sources_of(lspace::LabelledGraph const& g, Word const& w) {
    Set out;
    for (auto const& p : paths(g, w.size())) {
      if (label(g, p) == w) {
        out.insert(g.edges()[p.front()].src);
      }
    }
    return out;
  }

  inline Set one_step(lspace::LabelledGraph const& g, Set const& a, std::uint32_t c) {
    Set out;
    for (auto const& e : g.edges()) {
      if (e.label == c && a.count(e.src)) {
        out.insert(e.dst);
      }
    }
    return out;
  }

  inline Set one_step_back(lspace::LabelledGraph const& g, Set const& b, std::uint32_t c) {
    Set out;
    for (auto const& e : g.edges()) {
      if (e.label == c && b.count(e.dst)) {
        out.insert(e.src);
      }
    }
    return out;
  }

  inline bool has_in_edge(lspace::LabelledGraph const& g, std::uint32_t v) {
    return std::any_of(g.edges().begin(), g.edges().end(), [&](auto const& e) { return e.dst == v; });
  }
  inline bool has_out_edge(lspace::LabelledGraph const& g, std::uint32_t v) {
    return std::any_of(g.edges().begin(), g.edges().end(), [&](auto const& e) { return e.src == v; });
  }

  // Every non-empty r(α), found by breadth-first search from the
  // one-letter ranges; with sources, every non-empty s(α) as well.
  inline std::set<Set> ranges(lspace::LabelledGraph const& g, bool backwards) {
    std::set<Set>    seen;
    std::vector<Set> todo;
    Set const        all = all_vertices(g);
    for (std::uint32_t c = 0; c < g.alphabet_size(); ++c) {
      Set s = backwards ? one_step_back(g, all, c) : one_step(g, all, c);
      if (!s.empty() && seen.insert(s).second) {
        todo.push_back(s);
      }
    }
    while (!todo.empty()) {
      Set t = todo.back();
      todo.pop_back();
      for (std::uint32_t c = 0; c < g.alphabet_size(); ++c) {
        Set s = backwards ? one_step_back(g, t, c) : one_step(g, t, c);
        if (!s.empty() && seen.insert(s).second) {
          todo.push_back(s);
        }
      }
    }
    return seen;
  }

  // The smallest accommodating family containing the generators, computed
  // by saturation.
  inline std::set<Set> family(lspace::LabelledGraph const& g, bool with_sources) {
    std::set<Set> fam = ranges(g, false);
    for (std::uint32_t v = 0; v < g.num_vertices(); ++v) {
      bool const sink   = !has_out_edge(g, v);
      bool const source = !has_in_edge(g, v);
      if (sink || (with_sources && source)) {
        fam.insert(Set{v});
      }
    }
    if (with_sources) {
      auto s = ranges(g, true);
      fam.insert(s.begin(), s.end());
    }
    for (bool grew = true; grew;) {
      grew = false;
      std::vector<Set> now(fam.begin(), fam.end());
      for (auto const& a : now) {
        for (std::uint32_t c = 0; c < g.alphabet_size(); ++c) {
          if (std::any_of(g.edges().begin(), g.edges().end(), [&](auto const& e) { return e.label == c; })) {
            grew |= fam.insert(one_step(g, a, c)).second;
          }
        }
        for (auto const& b : now) {
          Set u = a, i;
          u.insert(b.begin(), b.end());
          std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(i, i.begin()));
          grew |= fam.insert(u).second;
          grew |= fam.insert(i).second;
        }
      }
    }
    return fam;
  }

  inline bool left_resolving(lspace::LabelledGraph const& g) {
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (auto const& e : g.edges()) {
      if (!seen.insert({e.dst, e.label}).second) {
        return false;
      }
    }
    return true;
  }

  // r(A,α) ∩ r(B,α) = r(A∩B,α) for the given sets and every word of length
  // at most n, following one letter at a time.
  inline bool weakly_left_resolving(lspace::LabelledGraph const& g, std::set<Set> const& sets, std::size_t n) {
    auto meet = [](Set const& a, Set const& b) {
      Set out;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.begin()));
      return out;
    };
    std::vector<Set> const family(sets.begin(), sets.end());
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        // Triples (r(A,α), r(B,α), r(A∩B,α)) for the words read so far.
        std::set<std::tuple<Set, Set, Set>> level{{family[i], family[j], meet(family[i], family[j])}};
        for (std::size_t k = 0; k < n && !level.empty(); ++k) {
          std::set<std::tuple<Set, Set, Set>> next;
          for (auto const& [a, b, ab] : level) {
            for (std::uint32_t c = 0; c < g.alphabet_size(); ++c) {
              Set ra = one_step(g, a, c), rb = one_step(g, b, c), rab = one_step(g, ab, c);
              if (meet(ra, rb) != rab) {
                return false;
              }
              if (!ra.empty() || !rb.empty()) {
                next.insert({ra, rb, rab});
              }
            }
          }
          level = std::move(next);
        }
      }
    }
    return true;
  }

  // Labelled-graph isomorphism by trying every vertex bijection.
  inline bool isomorphic(lspace::LabelledGraph const& g1, lspace::LabelledGraph const& g2) {
    if (g1.num_vertices() != g2.num_vertices() || g1.edges().size() != g2.edges().size()) {
      return false;
    }
    using Key = std::tuple<std::uint32_t, std::uint32_t, std::string>;
    std::multiset<Key> target;
    for (auto const& e : g2.edges()) {
      target.insert({e.src, e.dst, g2.symbol(e.label)});
    }
    std::vector<std::uint32_t> perm(g1.num_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::multiset<Key> image;
      for (auto const& e : g1.edges()) {
        image.insert({perm[e.src], perm[e.dst], g1.symbol(e.label)});
      }
      if (image == target) {
        return true;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  }

}  // namespace oracle
