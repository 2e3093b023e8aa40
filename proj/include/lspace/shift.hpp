#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lspace/graph.hpp"
#include "lspace/labelled_space.hpp"

namespace lspace {

  ////////////////////////////////////////////////////////////////////////
  // Forbidden patterns
  ////////////////////////////////////////////////////////////////////////

  // A literal symbol run, or a group (w)* matching any number of copies of w.
  struct PatternItem {
    std::vector<std::string> symbols;
    bool                     starred = false;

    bool operator==(PatternItem const&) const = default;
  };

  struct Pattern {
    std::vector<PatternItem> items;

    bool operator==(Pattern const&) const = default;
  };

  struct PatternSet {
    std::vector<std::string> alphabet;
    std::vector<Pattern>     patterns;
  };

  // Format: "alphabet a b ..." then "forbid <item> ..." lines, where an item
  // is a symbol or "( symbols ) *". Parentheses and stars need no spacing.
  PatternSet parse_patterns(std::istream& in);
  PatternSet parse_patterns(std::string_view text);
  PatternSet load_patterns(std::string const& path);

  std::string format_pattern(Pattern const& p);

  // A presentation of the shift of bi-infinite sequences in which no pattern
  // occurs. Vertices are the surviving states of the avoid automaton.
  // Throws EmptyLanguageError when no bi-infinite sequence survives.
  LabelledGraph presentation_from_forbidden(std::vector<std::string> const& alphabet,
                                            std::vector<Pattern> const&     patterns);
  LabelledGraph presentation_from_forbidden(PatternSet const& set);

  ////////////////////////////////////////////////////////////////////////
  // Languages
  ////////////////////////////////////////////////////////////////////////

  // ℒⁿ(E,π) in lexicographic order; the graph must be essential.
  std::vector<Word> factor_language(LabelledGraph const& g, std::size_t n);

  // Deterministic automaton of the factor language: state 0 is the full
  // vertex set and reading a moves T to r(T, a). Every state accepts.
  struct FollowerAutomaton {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::vector<std::string>              alphabet;
    std::vector<VertexSet>                states;
    // delta[q][a], or npos when a cannot be read.
    std::vector<std::vector<std::size_t>> delta;
  };

  FollowerAutomaton follower_automaton(LabelledGraph const& g);

  // Minimal partial DFA for the same language; state 0 is the start and
  // states are numbered in breadth-first order from it, so two minimal
  // automata of one language are identical.
  FollowerAutomaton minimize(FollowerAutomaton const& a);

  // Throws PreconditionError on an alphabet mismatch or a non-essential
  // or empty input.
  bool same_factor_language(LabelledGraph const& g1, LabelledGraph const& g2);

  // Like same_factor_language, but a mismatched alphabet answers false.
  bool equal_factor_languages(LabelledGraph const& g1, LabelledGraph const& g2);

  // Whether for all words u, w of the language some v makes uvw a word.
  bool presents_irreducible_shift(LabelledGraph const& g);

  ////////////////////////////////////////////////////////////////////////
  // Ray analysis
  ////////////////////////////////////////////////////////////////////////

  // The sets I∞(x) of start vertices of right rays x, canonically sorted.
  std::vector<VertexSet> stable_sets(LabelledGraph const& g);
  std::vector<VertexSet> stable_sets(LabelledGraph const& g, RelationMonoid const& m);

  // The sets T∞(y) of end vertices of left rays y.
  std::vector<VertexSet> terminal_stable_sets(LabelledGraph const& g, RelationMonoid const& m);

  void require_essential(LabelledGraph const& g, std::string_view what);

}  // namespace lspace
