#pragma once

#include <optional>

#include "lspace/graph.hpp"
#include "lspace/report.hpp"

namespace lspace {

  // The dual labelled graph: one vertex per edge of g (named by the edge id)
  // and one edge e.f from e to f for every path ef of length two, labelled
  // "a.b" where a and b are the labels of e and f.
  //
  // Throws PreconditionError when g has a sink or a symbol containing '.'.
  LabelledGraph dual_labelled_graph(LabelledGraph const& g);

  // The dual symbol "a.b", if some path of g is labelled ab.
  std::optional<SymbolId> dual_symbol(LabelledGraph const& g, LabelledGraph const& dual, SymbolId a, SymbolId b);

  // The dual vertex set s⁻¹(A): every edge of g whose source lies in A.
  VertexSet dual_source_preimage(LabelledGraph const& g, LabelledGraph const& dual, VertexSet const& a);

  // The base vertices s(B) and r(B) of a set of dual vertices.
  VertexSet dual_base_sources(LabelledGraph const& g, LabelledGraph const& dual, VertexSet const& b);
  VertexSet dual_base_ranges(LabelledGraph const& g, LabelledGraph const& dual, VertexSet const& b);

  // Checks, for every ab in the two-letter language, every symbol c and
  // every A in the standard family of g:
  //   "follower"       c ∈ L¹_{r(ab)}  iff  bc ∈ L̂¹_{r̂(ab)}
  //   "relative-range" r(r(ab), c) = r(s(r̂(ab)), bc)
  //   "sources"        some path labelled ab starts in A  iff  ab ∈ L̂¹_{s⁻¹(A)}
  //
  // The dual is taken as given, so a damaged dual shows up as counterexamples.
  CheckReport check_dual_identities(LabelledGraph const& g, LabelledGraph const& dual);
  CheckReport check_dual_identities(LabelledGraph const& g);

}  // namespace lspace
