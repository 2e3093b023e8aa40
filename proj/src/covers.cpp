#include <algorithm>
#include <map>
#include <set>

#include "lspace/covers.hpp"
#include "lspace/detail/scc.hpp"
#include "lspace/error.hpp"
#include "lspace/labelled_space.hpp"
#include "lspace/shift.hpp"

namespace lspace {

  namespace {
    using Signature = std::vector<bool>;

    Signature meets(VertexSet const& a, std::vector<VertexSet> const& against) {
      Signature sig;
      for (auto const& b : against) {
        sig.push_back(a.intersects(b));
      }
      return sig;
    }

    // {v : some edge v -a-> w with w in target}
    VertexSet predecessors(LabelledGraph const& g, VertexSet const& target, SymbolId a) {
      VertexSet out(g.num_vertices());
      target.for_each([&](VertexId w) {
        for (EdgeId e : g.in_edges(w)) {
          if (g.edge(e).label == a) {
            out.insert(g.edge(e).src);
          }
        }
      });
      return out;
    }

    struct EdgeTriple {
      std::size_t src;
      std::size_t dst;
      SymbolId    label;

      auto operator<=>(EdgeTriple const&) const = default;
    };

    LabelledGraph assemble(LabelledGraph const& g, std::string const& prefix, std::size_t vertices,
                           std::set<EdgeTriple> const& edges) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < vertices; ++i) {
        names.push_back(prefix + std::to_string(i));
      }
      std::vector<EdgeSpec> specs;
      for (auto const& e : edges) {
        specs.push_back({"e" + std::to_string(specs.size()), names[e.src], names[e.dst], g.symbol(e.label)});
      }
      return LabelledGraph::build(names, specs);
    }
  }  // namespace

  LabelledGraph left_krieger_cover(LabelledGraph const& g) {
    require_essential(g, "left_krieger_cover");
    RelationMonoid const   m        = RelationMonoid::build(g);
    auto const             stable   = stable_sets(g, m);
    auto const             terminal = terminal_stable_sets(g, m);

    std::map<Signature, std::size_t> class_of_signature;
    std::map<VertexSet, std::size_t> class_of_set;
    std::vector<std::vector<VertexSet>> members;
    for (auto const& a : stable) {
      auto [it, fresh] = class_of_signature.emplace(meets(a, terminal), members.size());
      if (fresh) {
        members.emplace_back();
      }
      members[it->second].push_back(a);
      class_of_set[a] = it->second;
    }

    std::set<EdgeTriple> edges;
    for (std::size_t dst = 0; dst < members.size(); ++dst) {
      for (SymbolId a = 0; a < g.alphabet_size(); ++a) {
        std::optional<std::size_t> src;
        bool                       first = true;
        for (auto const& x : members[dst]) {
          VertexSet const pre = predecessors(g, x, a);
          std::optional<std::size_t> here;
          if (!pre.empty()) {
            auto it = class_of_set.find(pre);
            if (it == class_of_set.end()) {
              throw InternalError("predecessor set " + g.format_set(pre) + " is not a stable set");
            }
            here = it->second;
          }
          if (!first && here != src) {
            throw InternalError("past classes disagree on the " + g.symbol(a) + "-predecessor of a class");
          }
          src   = here;
          first = false;
        }
        if (src) {
          edges.insert({*src, dst, a});
        }
      }
    }
    return assemble(g, "K", members.size(), edges);
  }

  LabelledGraph predecessor_graph(LabelledGraph const& g) {
    require_essential(g, "predecessor_graph");
    RelationMonoid const m        = RelationMonoid::build(g);
    auto const           follower = follower_automaton(g);

    // Elements represented by infinitely many words: those reachable in the
    // right Cayley graph from an element that lies on a cycle.
    std::vector<std::vector<std::size_t>> adj(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (SymbolId a = 0; a < g.alphabet_size(); ++a) {
        if (std::size_t j = m.right_step(i, a); j != RelationMonoid::npos) {
          adj[i].push_back(j);
        }
      }
    }
    auto const        scc = detail::tarjan_scc(adj);
    std::vector<bool> pumped(m.size(), false);
    std::vector<std::size_t> work;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (scc.cyclic[scc.component[i]]) {
        pumped[i] = true;
        work.push_back(i);
      }
    }
    while (!work.empty()) {
      std::size_t i = work.back();
      work.pop_back();
      for (std::size_t j : adj[i]) {
        if (!pumped[j]) {
          pumped[j] = true;
          work.push_back(j);
        }
      }
    }

    std::map<Signature, std::size_t> class_of_signature;
    std::vector<std::size_t>         class_of(m.size());
    std::vector<bool>                infinite;
    for (std::size_t i = 0; i < m.size(); ++i) {
      auto [it, fresh] = class_of_signature.emplace(meets(m.element(i).domain(), follower.states), infinite.size());
      if (fresh) {
        infinite.push_back(false);
      }
      class_of[i] = it->second;
      if (pumped[i]) {
        infinite[it->second] = true;
      }
    }

    std::vector<std::size_t> vertex_of(infinite.size(), RelationMonoid::npos);
    std::size_t              vertices = 0;
    for (std::size_t c = 0; c < infinite.size(); ++c) {
      if (infinite[c]) {
        vertex_of[c] = vertices++;
      }
    }

    std::set<EdgeTriple> edges;
    for (std::size_t d = 0; d < infinite.size(); ++d) {
      if (!infinite[d]) {
        continue;
      }
      for (SymbolId a = 0; a < g.alphabet_size(); ++a) {
        std::optional<std::size_t> src;
        bool                       first = true;
        for (std::size_t i = 0; i < m.size(); ++i) {
          if (class_of[i] != d) {
            continue;
          }
          std::size_t const          j = m.left_step(i, a);
          std::optional<std::size_t> here;
          if (j != RelationMonoid::npos) {
            here = class_of[j];
          }
          if (!first && here != src) {
            throw InternalError("predecessor classes disagree on extension by " + g.symbol(a));
          }
          src   = here;
          first = false;
        }
        if (src && infinite[*src]) {
          edges.insert({vertex_of[*src], vertex_of[d], a});
        }
      }
    }
    return assemble(g, "P", vertices, edges);
  }

  LabelledGraph minimal_left_resolving(LabelledGraph const& g) {
    require_essential(g, "minimal_left_resolving");
    if (!presents_irreducible_shift(g)) {
      throw PreconditionError("the presented shift is not irreducible");
    }
    LabelledGraph const cover = left_krieger_cover(g);

    std::optional<LabelledGraph> best;
    for (auto const& comp : strongly_connected_components(cover)) {
      LabelledGraph piece = induced_subgraph(cover, VertexSet(cover.num_vertices(), comp));
      if (piece.num_edges() == 0 || !equal_factor_languages(piece, g)) {
        continue;
      }
      if (!best || piece.num_vertices() < best->num_vertices()) {
        best = std::move(piece);
      } else if (piece.num_vertices() == best->num_vertices() && !labelled_graph_isomorphic(piece, *best)) {
        throw InternalError("two non-isomorphic minimal left-resolving presentations");
      }
    }
    if (!best) {
      throw InternalError("no strongly connected piece of the cover presents the whole shift");
    }
    if (!is_left_resolving(*best) || strongly_connected_components(*best).size() != 1) {
      throw InternalError("minimal presentation is not left-resolving and irreducible");
    }
    return *best;
  }

}  // namespace lspace
