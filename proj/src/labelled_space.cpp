#include <algorithm>
#include <deque>
#include <unordered_set>

#include "lspace/error.hpp"
#include "lspace/labelled_space.hpp"

namespace lspace {

  std::string to_string(FamilySeed seed) {
    switch (seed) {
      case FamilySeed::e0:
        return "e0";
      case FamilySeed::e0_minus:
        return "e0-";
      case FamilySeed::custom:
        return "custom";
    }
    return "custom";
  }

  std::optional<FamilySeed> parse_family_seed(std::string_view token) {
    if (token == "e0") {
      return FamilySeed::e0;
    }
    if (token == "e0-" || token == "e0minus") {
      return FamilySeed::e0_minus;
    }
    if (token == "custom") {
      return FamilySeed::custom;
    }
    return std::nullopt;
  }

  AccommodatingFamily::AccommodatingFamily(FamilySeed seed, std::vector<VertexSet> sets)
      : seed_(seed), sets_(std::move(sets)) {
    std::sort(sets_.begin(), sets_.end());
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
  }

  bool AccommodatingFamily::contains(VertexSet const& a) const {
    return std::binary_search(sets_.begin(), sets_.end(), a);
  }

  std::vector<VertexSet> close_family(RelationMonoid const& m, std::vector<VertexSet> seed) {
    std::unordered_set<VertexSet, VertexSetHash> known;
    std::vector<VertexSet>                       members;
    std::deque<VertexSet>                        work;

    auto add = [&](VertexSet s) {
      if (known.insert(s).second) {
        work.push_back(std::move(s));
      }
    };
    for (auto& s : seed) {
      add(std::move(s));
    }
    while (!work.empty()) {
      VertexSet x = std::move(work.front());
      work.pop_front();
      for (std::size_t i = 0; i < m.size(); ++i) {
        add(m.element(i).image(x));
      }
      for (auto const& y : members) {
        add(x & y);
        add(x | y);
      }
      add(x & x);
      members.push_back(std::move(x));
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  AccommodatingFamily compute_family(LabelledGraph const& g, RelationMonoid const& m, FamilySeed which,
                                     std::vector<VertexSet> const& custom) {
    std::vector<VertexSet> seed = custom;
    if (which != FamilySeed::custom) {
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        bool const sink   = g.out_edges(v).empty();
        bool const source = g.in_edges(v).empty();
        if (sink || (which == FamilySeed::e0 && source)) {
          seed.push_back(VertexSet::singleton(g.num_vertices(), v));
        }
      }
      for (std::size_t i = 0; i < m.size(); ++i) {
        seed.push_back(m.element(i).range());
        if (which == FamilySeed::e0) {
          seed.push_back(m.element(i).domain());
        }
      }
    } else {
      for (std::size_t i = 0; i < m.size(); ++i) {
        seed.push_back(m.element(i).range());
      }
    }
    return AccommodatingFamily(which, close_family(m, std::move(seed)));
  }

  AccommodatingFamily compute_family(LabelledGraph const& g, FamilySeed which,
                                     std::vector<VertexSet> const& custom) {
    return compute_family(g, RelationMonoid::build(g), which, custom);
  }

  std::string accommodating_defect(LabelledGraph const& g, RelationMonoid const& m,
                                   std::vector<VertexSet> const& sets) {
    std::unordered_set<VertexSet, VertexSetHash> known(sets.begin(), sets.end());
    for (auto const& s : sets) {
      if (s.universe() != g.num_vertices()) {
        return "member " + g.format_set(s) + " is over a different vertex set";
      }
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (known.count(m.element(i).range()) == 0) {
        return "missing r(" + g.format_word(m.witness(i)) + ") = " + g.format_set(m.element(i).range());
      }
    }
    for (auto const& a : sets) {
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (auto r = m.element(i).image(a); known.count(r) == 0) {
          return "missing r(" + g.format_set(a) + ", " + g.format_word(m.witness(i)) + ") = " + g.format_set(r);
        }
      }
      for (auto const& b : sets) {
        if (known.count(a & b) == 0) {
          return "missing intersection " + g.format_set(a & b);
        }
        if (known.count(a | b) == 0) {
          return "missing union " + g.format_set(a | b);
        }
      }
    }
    return {};
  }

  std::string format_family(LabelledGraph const& g, AccommodatingFamily const& f) {
    std::string out;
    for (auto const& s : f.sets()) {
      out += "set {";
      s.for_each([&](VertexId v) { out += " " + g.vertex_name(v); });
      out += " }\n";
    }
    return out;
  }

  LabelledSpace::LabelledSpace(LabelledGraph graph, RelationMonoid monoid, AccommodatingFamily family)
      : graph_(std::move(graph)), monoid_(std::move(monoid)), family_(std::move(family)) {}

  LabelledSpace::LabelledSpace(LabelledGraph graph, AccommodatingFamily family)
      : graph_(std::move(graph)), monoid_(RelationMonoid::build(graph_)), family_(std::move(family)) {
    if (auto defect = accommodating_defect(graph_, monoid_, family_.sets()); !defect.empty()) {
      throw PreconditionError("family is not accommodating: " + defect);
    }
  }

  LabelledSpace LabelledSpace::standard(LabelledGraph graph, FamilySeed which) {
    RelationMonoid      m = RelationMonoid::build(graph);
    AccommodatingFamily f = compute_family(graph, m, which);
    return LabelledSpace(std::move(graph), std::move(m), std::move(f));
  }

  bool is_left_resolving(LabelledGraph const& g) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      std::vector<SymbolId> labels;
      for (EdgeId e : g.in_edges(v)) {
        labels.push_back(g.edge(e).label);
      }
      std::sort(labels.begin(), labels.end());
      if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
        return false;
      }
    }
    return true;
  }

  std::optional<WeakResolutionViolation> weak_resolution_violation(RelationMonoid const&         m,
                                                                   std::vector<VertexSet> const& sets) {
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = i + 1; j < sets.size(); ++j) {
        VertexSet const meet = sets[i] & sets[j];
        for (std::size_t k = 0; k < m.size(); ++k) {
          Relation const& r = m.element(k);
          if ((r.image(sets[i]) & r.image(sets[j])) != r.image(meet)) {
            return WeakResolutionViolation{sets[i], sets[j], m.witness(k)};
          }
        }
      }
    }
    return std::nullopt;
  }

  PredicateReport predicates_report(LabelledSpace const& space) {
    LabelledGraph const& g = space.graph();
    PredicateReport      rep;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      std::vector<SymbolId> labels;
      for (EdgeId e : g.in_edges(v)) {
        labels.push_back(g.edge(e).label);
      }
      std::sort(labels.begin(), labels.end());
      if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
        rep.unresolved_vertices.push_back(v);
      }
    }
    rep.left_resolving = rep.unresolved_vertices.empty();
    if (rep.left_resolving) {
      rep.weakly_left_resolving = true;
    } else {
      rep.violation             = weak_resolution_violation(space.monoid(), space.family().sets());
      rep.weakly_left_resolving = !rep.violation.has_value();
    }
    return rep;
  }

}  // namespace lspace
