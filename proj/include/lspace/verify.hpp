#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "lspace/algebra.hpp"
#include "lspace/report.hpp"

namespace lspace {

  enum class Suite { axioms, matsumoto, unit, dual, graph, all };

  std::string          to_string(Suite s);
  std::optional<Suite> parse_suite(std::string_view token);

  // Candidate images of the generators of a labelled space, as elements of
  // some target algebra.
  struct Representation {
    LabelledSpace const*                       space = nullptr;
    std::function<Element(SymbolId)>           s;
    std::function<Element(VertexSet const&)>   p;
    // p also takes sets outside the family, such as single atoms.
    bool                                       p_on_any_set = false;
  };

  inline constexpr std::size_t exhaustive_family_limit = 64;

  // Relations (i) to (iv) for the images, each compared in the target at
  // depth k. Section names are "<prefix>(i)" and so on.
  //
  // For a family larger than exhaustive_family_limit with p_on_any_set, (i)
  // is checked as p_A = Σ_{atoms X ⊆ A} p_X for every A plus p_X p_Y = δ p_X
  // on atoms, which implies it.
  void check_representation(Algebra const& target, Representation const& rep, std::size_t k,
                            std::string const& prefix, CheckReport& out);

  // Sections "(i)" to "(iv)", "matsumoto" and "unit" for the chosen suite.
  // The unit suite needs a graph without sinks. Suite::all also runs the
  // dual and graph witness checks when their hypotheses hold.
  CheckReport verify_axioms(Algebra const& alg, std::size_t k, Suite which);

  // T_ab = s_a s_b s_b* and Q_B = Σ_{ab ∈ L̂¹_B} s_ab p_{X(B,ab)} s_ab* inside
  // the algebra of g, where X(B,ab) is the set of ends of the ab-paths whose
  // first edge lies in B. Checked against the axioms of the dual space,
  // together with s_a = Σ_b T_ab Q_{r̂(ab)} and p_A = Q_{s⁻¹(A)}.
  CheckReport dual_witness_check(LabelledGraph const& g, std::size_t k, FamilySeed seed = FamilySeed::e0);

  // T_a = Σ_{π(e)=a} s_e and Q_A = Σ_{v∈A} p_v inside the graph algebra of
  // g (its trivial labelling), checked against the axioms of (g, π, family),
  // together with s_e = T_{π(e)} Q_{r(e)} and p_v = Q_{v}.
  CheckReport graph_witness_check(LabelledGraph const& g, std::size_t k, FamilySeed seed = FamilySeed::e0);

  // Hypothesis failures of the two witness checks; empty when they apply.
  std::vector<std::string> dual_witness_hypotheses(LabelledGraph const& g);
  std::vector<std::string> graph_witness_hypotheses(LabelledGraph const& g, FamilySeed seed);

}  // namespace lspace
