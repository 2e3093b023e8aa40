#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "lspace/detail/scc.hpp"
#include "lspace/error.hpp"
#include "lspace/shift.hpp"

namespace lspace {

  void require_essential(LabelledGraph const& g, std::string_view what) {
    if (g.num_vertices() == 0) {
      throw PreconditionError(std::string(what) + " needs a non-empty graph");
    }
    if (!is_essential(g)) {
      throw PreconditionError(std::string(what) + " needs an essential graph (trim sources and sinks first)");
    }
  }

  std::vector<Word> factor_language(LabelledGraph const& g, std::size_t n) {
    if (!is_essential(g)) {
      throw PreconditionError("factor_language needs an essential graph (trim sources and sinks first)");
    }
    if (n == 0) {
      throw PreconditionError("factor_language needs a positive length");
    }
    return words_of_length(g, n);
  }

  FollowerAutomaton follower_automaton(LabelledGraph const& g) {
    FollowerAutomaton a;
    a.alphabet = g.alphabet();
    std::map<VertexSet, std::size_t> index;
    a.states.push_back(g.all_vertices());
    index[a.states[0]] = 0;
    for (std::size_t i = 0; i < a.states.size(); ++i) {
      std::vector<std::size_t> row(g.alphabet_size(), FollowerAutomaton::npos);
      for (SymbolId s = 0; s < g.alphabet_size(); ++s) {
        VertexSet next = relative_range(g, a.states[i], Word{s});
        if (next.empty()) {
          continue;
        }
        auto [it, fresh] = index.emplace(next, a.states.size());
        if (fresh) {
          a.states.push_back(std::move(next));
        }
        row[s] = it->second;
      }
      a.delta.push_back(std::move(row));
    }
    return a;
  }

  FollowerAutomaton minimize(FollowerAutomaton const& a) {
    constexpr std::size_t npos = FollowerAutomaton::npos;
    std::size_t const     n    = a.states.size();
    std::size_t const     k    = a.alphabet.size();

    std::vector<std::size_t> cls(n, 0);
    std::size_t              count = n == 0 ? 0 : 1;
    for (;;) {
      std::map<std::vector<std::size_t>, std::size_t> keys;
      std::vector<std::size_t>                        next(n);
      for (std::size_t q = 0; q < n; ++q) {
        std::vector<std::size_t> key{cls[q]};
        for (std::size_t s = 0; s < k; ++s) {
          key.push_back(a.delta[q][s] == npos ? npos : cls[a.delta[q][s]]);
        }
        next[q] = keys.emplace(key, keys.size()).first->second;
      }
      bool const stable = keys.size() == count;
      cls               = std::move(next);
      count             = keys.size();
      if (stable) {
        break;
      }
    }

    // Renumber classes breadth first from the start.
    FollowerAutomaton        m;
    m.alphabet = a.alphabet;
    if (n == 0) {
      return m;
    }
    std::vector<std::size_t> representative(count, npos), order(count, npos);
    for (std::size_t q = 0; q < n; ++q) {
      if (representative[cls[q]] == npos) {
        representative[cls[q]] = q;
      }
    }
    std::vector<std::size_t> queue{cls[0]};
    order[cls[0]] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      std::size_t const q = representative[queue[i]];
      for (std::size_t s = 0; s < k; ++s) {
        if (a.delta[q][s] != npos && order[cls[a.delta[q][s]]] == npos) {
          order[cls[a.delta[q][s]]] = queue.size();
          queue.push_back(cls[a.delta[q][s]]);
        }
      }
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
      std::size_t const        q = representative[queue[i]];
      std::vector<std::size_t> row(k, npos);
      for (std::size_t s = 0; s < k; ++s) {
        if (a.delta[q][s] != npos) {
          row[s] = order[cls[a.delta[q][s]]];
        }
      }
      m.states.push_back(a.states[q]);
      m.delta.push_back(std::move(row));
    }
    return m;
  }

  bool equal_factor_languages(LabelledGraph const& g1, LabelledGraph const& g2) {
    if (g1.alphabet() != g2.alphabet()) {
      return false;
    }
    return minimize(follower_automaton(g1)).delta == minimize(follower_automaton(g2)).delta;
  }

  bool same_factor_language(LabelledGraph const& g1, LabelledGraph const& g2) {
    require_essential(g1, "same_factor_language");
    require_essential(g2, "same_factor_language");
    if (g1.alphabet() != g2.alphabet()) {
      throw PreconditionError("the two presentations have different alphabets");
    }
    return equal_factor_languages(g1, g2);
  }

  bool presents_irreducible_shift(LabelledGraph const& g) {
    constexpr std::size_t npos = FollowerAutomaton::npos;
    FollowerAutomaton const m  = minimize(follower_automaton(g));
    std::size_t const       n  = m.states.size();
    if (n == 0) {
      return false;
    }

    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t q = 0; q < n; ++q) {
      std::vector<std::size_t> work{q};
      reach[q][q] = true;
      while (!work.empty()) {
        std::size_t p = work.back();
        work.pop_back();
        for (std::size_t r : m.delta[p]) {
          if (r != npos && !reach[q][r]) {
            reach[q][r] = true;
            work.push_back(r);
          }
        }
      }
    }

    // For each q: every word readable from the start must be readable from
    // some state reachable from q.
    for (std::size_t q = 0; q < n; ++q) {
      using Key = std::pair<std::size_t, std::vector<bool>>;
      std::set<Key>   seen;
      std::deque<Key> work;
      work.emplace_back(0, reach[q]);
      seen.insert(work.front());
      while (!work.empty()) {
        auto [s, set] = work.front();
        work.pop_front();
        for (std::size_t a = 0; a < m.alphabet.size(); ++a) {
          if (m.delta[s][a] == npos) {
            continue;
          }
          std::vector<bool> next(n, false);
          bool              any = false;
          for (std::size_t p = 0; p < n; ++p) {
            if (set[p] && m.delta[p][a] != npos) {
              next[m.delta[p][a]] = true;
              any                 = true;
            }
          }
          if (!any) {
            return false;
          }
          Key key{m.delta[s][a], std::move(next)};
          if (seen.insert(key).second) {
            work.push_back(std::move(key));
          }
        }
      }
    }
    return true;
  }

  namespace {
    enum class Side { right, left };

    std::vector<VertexSet> cyclic_sets(LabelledGraph const& g, RelationMonoid const& m, Side side) {
      std::vector<std::vector<std::size_t>> adj(m.size());
      for (std::size_t i = 0; i < m.size(); ++i) {
        for (SymbolId a = 0; a < g.alphabet_size(); ++a) {
          std::size_t const j = side == Side::right ? m.right_step(i, a) : m.left_step(i, a);
          if (j != RelationMonoid::npos) {
            adj[i].push_back(j);
          }
        }
      }
      auto const          scc = detail::tarjan_scc(adj);
      std::set<VertexSet> out;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (scc.cyclic[scc.component[i]]) {
          out.insert(side == Side::right ? m.element(i).domain() : m.element(i).range());
        }
      }
      return {out.begin(), out.end()};
    }
  }  // namespace

  std::vector<VertexSet> stable_sets(LabelledGraph const& g, RelationMonoid const& m) {
    require_essential(g, "stable_sets");
    return cyclic_sets(g, m, Side::right);
  }

  std::vector<VertexSet> stable_sets(LabelledGraph const& g) {
    return stable_sets(g, RelationMonoid::build(g));
  }

  std::vector<VertexSet> terminal_stable_sets(LabelledGraph const& g, RelationMonoid const& m) {
    require_essential(g, "terminal_stable_sets");
    return cyclic_sets(g, m, Side::left);
  }

}  // namespace lspace
