#include <algorithm>
#include <map>
#include <tuple>

#include "lspace/detail/scc.hpp"
#include "lspace/error.hpp"
#include "lspace/graph.hpp"

namespace lspace {

  namespace {
    std::vector<EdgeSpec> edge_specs(LabelledGraph const& g) {
      std::vector<EdgeSpec> specs;
      for (auto const& e : g.edges()) {
        specs.push_back({e.id, g.vertex_name(e.src), g.vertex_name(e.dst), g.symbol(e.label)});
      }
      return specs;
    }

    std::vector<std::vector<std::size_t>> adjacency(LabelledGraph const& g) {
      std::vector<std::vector<std::size_t>> adj(g.num_vertices());
      for (auto const& e : g.edges()) {
        adj[e.src].push_back(e.dst);
      }
      return adj;
    }
  }  // namespace

  LabelledGraph trivial_labelling(LabelledGraph const& g) {
    auto specs = edge_specs(g);
    for (auto& s : specs) {
      s.label = s.id;
    }
    return LabelledGraph::build(g.vertex_names(), specs);
  }

  std::vector<std::vector<VertexId>> strongly_connected_components(LabelledGraph const& g) {
    auto const                         scc = detail::tarjan_scc(adjacency(g));
    std::vector<std::vector<VertexId>> comps(scc.count);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      comps[scc.component[v]].push_back(v);
    }
    std::sort(comps.begin(), comps.end());
    return comps;
  }

  StructureReport structure_report(LabelledGraph const& g) {
    StructureReport rep;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (g.in_edges(v).empty()) {
        rep.sources.push_back(v);
      }
      if (g.out_edges(v).empty()) {
        rep.sinks.push_back(v);
      }
    }
    rep.components = strongly_connected_components(g);
    rep.irreducible = rep.components.size() == 1 && g.num_edges() > 0;
    rep.essential   = rep.sources.empty() && rep.sinks.empty();

    std::map<std::tuple<VertexId, VertexId, SymbolId>, std::vector<EdgeId>> groups;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      auto const& ed = g.edge(e);
      groups[{ed.src, ed.dst, ed.label}].push_back(e);
    }
    for (auto& [key, ids] : groups) {
      if (ids.size() > 1) {
        rep.parallel_duplicates.push_back(ids);
      }
    }
    return rep;
  }

  LabelledGraph induced_subgraph(LabelledGraph const& g, VertexSet const& keep) {
    std::vector<std::string> names;
    keep.for_each([&](VertexId v) { names.push_back(g.vertex_name(v)); });
    std::vector<EdgeSpec> specs;
    for (auto const& e : g.edges()) {
      if (keep.contains(e.src) && keep.contains(e.dst)) {
        specs.push_back({e.id, g.vertex_name(e.src), g.vertex_name(e.dst), g.symbol(e.label)});
      }
    }
    return LabelledGraph::build(names, specs);
  }

  LabelledGraph trim_to_essential(LabelledGraph const& g) {
    VertexSet   keep = g.all_vertices();
    std::vector<std::size_t> in_deg(g.num_vertices(), 0), out_deg(g.num_vertices(), 0);
    for (auto const& e : g.edges()) {
      ++out_deg[e.src];
      ++in_deg[e.dst];
    }
    std::vector<VertexId> work;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (in_deg[v] == 0 || out_deg[v] == 0) {
        work.push_back(v);
      }
    }
    while (!work.empty()) {
      VertexId v = work.back();
      work.pop_back();
      if (!keep.contains(v)) {
        continue;
      }
      keep.erase(v);
      for (EdgeId e : g.out_edges(v)) {
        VertexId w = g.edge(e).dst;
        if (keep.contains(w) && --in_deg[w] == 0) {
          work.push_back(w);
        }
      }
      for (EdgeId e : g.in_edges(v)) {
        VertexId u = g.edge(e).src;
        if (keep.contains(u) && --out_deg[u] == 0) {
          work.push_back(u);
        }
      }
    }
    return induced_subgraph(g, keep);
  }

  bool is_essential(LabelledGraph const& g) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (g.in_edges(v).empty() || g.out_edges(v).empty()) {
        return false;
      }
    }
    return true;
  }

  bool has_sinks(LabelledGraph const& g) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (g.out_edges(v).empty()) {
        return true;
      }
    }
    return false;
  }

  LabelledGraph reversed(LabelledGraph const& g) {
    auto specs = edge_specs(g);
    for (auto& s : specs) {
      std::swap(s.src, s.dst);
    }
    return LabelledGraph::build(g.vertex_names(), specs);
  }

  ////////////////////////////////////////////////////////////////////////
  // Backtracking search
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using EdgeKey = std::tuple<VertexId, VertexId, std::string>;

    // Edges grouped by (src, dst, label token), so that graphs over the same
    // alphabet with different symbol numberings compare correctly.
    std::map<EdgeKey, std::vector<EdgeId>> edge_groups(LabelledGraph const& g) {
      std::map<EdgeKey, std::vector<EdgeId>> groups;
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto const& ed = g.edge(e);
        groups[{ed.src, ed.dst, g.symbol(ed.label)}].push_back(e);
      }
      return groups;
    }

    // Per-vertex incoming and outgoing label multisets.
    struct Signature {
      std::vector<std::string> in_labels;
      std::vector<std::string> out_labels;

      bool operator==(Signature const&) const = default;
    };

    std::vector<Signature> signatures(LabelledGraph const& g) {
      std::vector<Signature> sig(g.num_vertices());
      for (auto const& e : g.edges()) {
        sig[e.dst].in_labels.push_back(g.symbol(e.label));
        sig[e.src].out_labels.push_back(g.symbol(e.label));
      }
      for (auto& s : sig) {
        std::sort(s.in_labels.begin(), s.in_labels.end());
        std::sort(s.out_labels.begin(), s.out_labels.end());
      }
      return sig;
    }

    // True when every element of small occurs in big at least as often.
    bool submultiset(std::vector<std::string> const& small, std::vector<std::string> const& big) {
      return std::includes(big.begin(), big.end(), small.begin(), small.end());
    }

    class Matcher {
     public:
      Matcher(LabelledGraph const& pattern, LabelledGraph const& target, bool exact)
          : pattern_(pattern),
            target_(target),
            exact_(exact),
            pgroups_(edge_groups(pattern)),
            tgroups_(edge_groups(target)),
            psig_(signatures(pattern)),
            tsig_(signatures(target)),
            map_(pattern.num_vertices(), 0),
            used_(target.num_vertices(), false) {
        for (auto const& [key, ids] : pgroups_) {
          auto [s, d, lbl] = key;
          incident_[std::max(s, d)].push_back(&key);
        }
      }

      std::optional<GraphMorphism> run() {
        if (!search(0)) {
          return std::nullopt;
        }
        GraphMorphism m;
        m.vertex_map = map_;
        m.edge_map.assign(pattern_.num_edges(), 0);
        for (auto const& [key, ids] : pgroups_) {
          auto const& [s, d, lbl] = key;
          auto const& images      = tgroups_.at({map_[s], map_[d], lbl});
          for (std::size_t i = 0; i < ids.size(); ++i) {
            m.edge_map[ids[i]] = images[i];
          }
        }
        return m;
      }

     private:
      bool compatible(VertexId pv, VertexId tv) const {
        if (exact_) {
          return psig_[pv] == tsig_[tv];
        }
        return submultiset(psig_[pv].in_labels, tsig_[tv].in_labels)
               && submultiset(psig_[pv].out_labels, tsig_[tv].out_labels);
      }

      // Checks every pattern edge group whose later endpoint is pv.
      bool consistent(VertexId pv) const {
        for (EdgeKey const* key : incident_.count(pv) ? incident_.at(pv) : empty_) {
          auto const& [s, d, lbl] = *key;
          std::size_t const need   = pgroups_.at(*key).size();
          auto it                  = tgroups_.find({map_[s], map_[d], lbl});
          std::size_t const have   = it == tgroups_.end() ? 0 : it->second.size();
          if (exact_ ? have != need : have < need) {
            return false;
          }
        }
        return true;
      }

      bool search(VertexId pv) {
        if (pv == pattern_.num_vertices()) {
          return true;
        }
        for (VertexId tv = 0; tv < target_.num_vertices(); ++tv) {
          if (used_[tv] || !compatible(pv, tv)) {
            continue;
          }
          map_[pv]  = tv;
          used_[tv] = true;
          if (consistent(pv) && search(pv + 1)) {
            return true;
          }
          used_[tv] = false;
        }
        return false;
      }

      LabelledGraph const&                   pattern_;
      LabelledGraph const&                   target_;
      bool                                   exact_;
      std::map<EdgeKey, std::vector<EdgeId>> pgroups_;
      std::map<EdgeKey, std::vector<EdgeId>> tgroups_;
      std::vector<Signature>                 psig_;
      std::vector<Signature>                 tsig_;
      std::map<VertexId, std::vector<EdgeKey const*>> incident_;
      std::vector<EdgeKey const*>            empty_;
      std::vector<VertexId>                  map_;
      std::vector<bool>                      used_;
    };

    void check_limit(LabelledGraph const& g, std::size_t limit) {
      if (g.num_vertices() > limit) {
        throw LimitError("graph has " + std::to_string(g.num_vertices())
                         + " vertices, above the search limit of " + std::to_string(limit));
      }
    }
  }  // namespace

  std::optional<GraphMorphism> labelled_graph_isomorphic(LabelledGraph const& g1,
                                                         LabelledGraph const& g2,
                                                         std::size_t          vertex_limit) {
    check_limit(g1, vertex_limit);
    check_limit(g2, vertex_limit);
    if (g1.num_vertices() != g2.num_vertices() || g1.num_edges() != g2.num_edges()
        || g1.alphabet() != g2.alphabet()) {
      return std::nullopt;
    }
    return Matcher(g1, g2, true).run();
  }

  std::optional<GraphMorphism> find_labelled_embedding(LabelledGraph const& sub,
                                                       LabelledGraph const& host,
                                                       std::size_t          vertex_limit) {
    check_limit(sub, vertex_limit);
    check_limit(host, vertex_limit);
    if (sub.num_vertices() > host.num_vertices() || sub.num_edges() > host.num_edges()) {
      return std::nullopt;
    }
    return Matcher(sub, host, false).run();
  }

}  // namespace lspace
