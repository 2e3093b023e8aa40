#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lspace/graph.hpp"
#include "lspace/vertex_set.hpp"

namespace lspace {

  // A binary relation on the vertex set, stored row by row: row(v) is the
  // set of vertices related to v.
  class Relation {
   public:
    Relation() = default;
    explicit Relation(std::size_t universe);

    std::size_t universe() const noexcept {
      return rows_.size();
    }
    VertexSet const& row(VertexId v) const {
      return rows_.at(v);
    }
    void add(VertexId from, VertexId to);

    bool empty() const noexcept;
    VertexSet image(VertexSet const& a) const;
    VertexSet preimage(VertexSet const& b) const;
    VertexSet domain() const;
    VertexSet range() const;

    // This relation followed by next; R_α.then(R_β) == R_{αβ}.
    Relation then(Relation const& next) const;

    bool operator==(Relation const&) const = default;
    std::size_t hash() const noexcept;

   private:
    std::vector<VertexSet> rows_;
  };

  struct RelationHash {
    std::size_t operator()(Relation const& r) const noexcept {
      return r.hash();
    }
  };

  // R_α = {(s(λ), r(λ)) : π(λ) = α} for a single word.
  Relation word_relation(LabelledGraph const& g, Word const& w);

  inline constexpr std::size_t default_monoid_limit = 1'000'000;

  // All distinct non-empty relations R_α over the words α of the factor
  // language, each with its shortlex-least witness word.
  //
  // Elements are numbered in discovery order, so element i has a witness no
  // longer than element i + 1. The generators R_a come first in symbol order
  // (duplicates collapse onto the earlier symbol).
  class RelationMonoid {
   public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    RelationMonoid() = default;
    static RelationMonoid build(LabelledGraph const& g, std::size_t limit = default_monoid_limit);

    std::size_t size() const noexcept {
      return elements_.size();
    }
    std::size_t alphabet_size() const noexcept {
      return generators_.size();
    }
    Relation const& element(std::size_t i) const {
      return elements_.at(i);
    }
    Word const& witness(std::size_t i) const {
      return witnesses_.at(i);
    }
    std::size_t generator(SymbolId a) const {
      return generators_.at(a);
    }

    // Element for witness(i)·a, or npos when that word labels no path.
    std::size_t right_step(std::size_t i, SymbolId a) const {
      return right_.at(i * generators_.size() + a);
    }
    // Element for a·witness(i), or npos.
    std::size_t left_step(std::size_t i, SymbolId a) const {
      return left_.at(i * generators_.size() + a);
    }

    std::optional<std::size_t> find(Relation const& r) const;
    // Element of a non-empty word, or nullopt when the word labels no path.
    std::optional<std::size_t> of_word(Word const& w) const;

   private:
    std::vector<Relation>                                 elements_;
    std::vector<Word>                                     witnesses_;
    std::vector<std::size_t>                              generators_;
    std::vector<std::size_t>                              right_;
    std::vector<std::size_t>                              left_;
    std::unordered_map<Relation, std::size_t, RelationHash> index_;
  };

  // r(A, α). Throws PreconditionError for an empty word or an unknown symbol.
  VertexSet relative_range(LabelledGraph const& g, VertexSet const& a, Word const& alpha);

  // s_π(α) and r_π(α).
  VertexSet word_sources(LabelledGraph const& g, Word const& alpha);
  VertexSet word_ranges(LabelledGraph const& g, Word const& alpha);

  struct WordSetEntry {
    Word      word;
    VertexSet sources;
    VertexSet ranges;
  };

  struct WordSets {
    // Every word of ℒⁿ in lexicographic order.
    std::vector<WordSetEntry> words;
    // L^n_A: the words whose source set meets A, lexicographic.
    std::vector<Word> meeting;
  };

  WordSets word_sets(LabelledGraph const& g, VertexSet const& a, std::size_t n);

  // The words of length n labelling some path, lexicographic.
  std::vector<Word> words_of_length(LabelledGraph const& g, std::size_t n);

  ////////////////////////////////////////////////////////////////////////
  // Accommodating families
  ////////////////////////////////////////////////////////////////////////

  enum class FamilySeed { e0, e0_minus, custom };

  // "e0", "e0-" or "custom".
  std::string to_string(FamilySeed seed);
  std::optional<FamilySeed> parse_family_seed(std::string_view token);

  class AccommodatingFamily {
   public:
    AccommodatingFamily() = default;
    AccommodatingFamily(FamilySeed seed, std::vector<VertexSet> sets);

    FamilySeed seed() const noexcept {
      return seed_;
    }
    // Canonically sorted, duplicate free.
    std::vector<VertexSet> const& sets() const noexcept {
      return sets_;
    }
    std::size_t size() const noexcept {
      return sets_.size();
    }
    bool contains(VertexSet const& a) const;

    bool operator==(AccommodatingFamily const&) const = default;

   private:
    FamilySeed             seed_ = FamilySeed::custom;
    std::vector<VertexSet> sets_;
  };

  // The smallest family containing the seed together with every r_π(α)
  // (and, for ℰ⁰, every s_π(α) and the source singletons) that is closed
  // under relative ranges, pairwise unions and pairwise intersections.
  AccommodatingFamily compute_family(LabelledGraph const& g, FamilySeed which,
                                     std::vector<VertexSet> const& custom = {});
  AccommodatingFamily compute_family(LabelledGraph const& g, RelationMonoid const& m, FamilySeed which,
                                     std::vector<VertexSet> const& custom = {});

  // Closure of an arbitrary collection; no ranges are added.
  std::vector<VertexSet> close_family(RelationMonoid const& m, std::vector<VertexSet> seed);

  // Empty string when accommodating, otherwise a description of the defect.
  std::string accommodating_defect(LabelledGraph const& g, RelationMonoid const& m,
                                   std::vector<VertexSet> const& sets);

  // "set { u v }" lines in canonical order.
  std::string format_family(LabelledGraph const& g, AccommodatingFamily const& f);

  ////////////////////////////////////////////////////////////////////////
  // Labelled spaces
  ////////////////////////////////////////////////////////////////////////

  class LabelledSpace {
   public:
    // Throws PreconditionError when the family is not accommodating.
    LabelledSpace(LabelledGraph graph, AccommodatingFamily family);

    static LabelledSpace standard(LabelledGraph graph, FamilySeed which);

    LabelledGraph const& graph() const noexcept {
      return graph_;
    }
    AccommodatingFamily const& family() const noexcept {
      return family_;
    }
    RelationMonoid const& monoid() const noexcept {
      return monoid_;
    }

   private:
    LabelledSpace(LabelledGraph graph, RelationMonoid monoid, AccommodatingFamily family);

    LabelledGraph       graph_;
    RelationMonoid      monoid_;
    AccommodatingFamily family_;
  };

  // A witness against weak left-resolution:
  // r(A, α) ∩ r(B, α) ≠ r(A ∩ B, α).
  struct WeakResolutionViolation {
    VertexSet a;
    VertexSet b;
    Word      word;
  };

  struct PredicateReport {
    bool left_resolving        = false;
    bool weakly_left_resolving = false;
    // Always true for finite graphs.
    bool label_finite = true;
    bool set_finite   = true;
    std::vector<VertexSet> singular_sets;
    // Vertices receiving two edges with the same label.
    std::vector<VertexId>                  unresolved_vertices;
    std::optional<WeakResolutionViolation> violation;
  };

  bool is_left_resolving(LabelledGraph const& g);

  std::optional<WeakResolutionViolation> weak_resolution_violation(RelationMonoid const&         m,
                                                                   std::vector<VertexSet> const& sets);

  PredicateReport predicates_report(LabelledSpace const& space);

}  // namespace lspace
