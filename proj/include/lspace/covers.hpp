#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lspace/graph.hpp"

namespace lspace {

  // Vertices are past-equivalence classes of right rays, named K0, K1, ...
  // in canonical order of their smallest stable set; an edge labelled a runs
  // from the class of a·x to the class of x.
  LabelledGraph left_krieger_cover(LabelledGraph const& g);

  // Vertices are the predecessor classes of words that contain infinitely
  // many words, named P0, P1, ... by their shortlex-least member; an edge
  // labelled a runs from [a·ν] to [ν].
  LabelledGraph predecessor_graph(LabelledGraph const& g);

  // The smallest full-language strongly connected piece of the left-Krieger
  // cover. Throws PreconditionError when the presented shift is reducible.
  LabelledGraph minimal_left_resolving(LabelledGraph const& g);

  ////////////////////////////////////////////////////////////////////////
  // Ultragraphs
  ////////////////////////////////////////////////////////////////////////

  struct UltraEdge {
    std::string              id;
    std::string              source;
    std::vector<std::string> range;

    bool operator==(UltraEdge const&) const = default;
  };

  // Canonical form: vertices sorted, edges sorted by id, ranges sorted.
  struct UltragraphSpec {
    std::vector<std::string> vertices;
    std::vector<UltraEdge>   edges;

    bool operator==(UltragraphSpec const&) const = default;
  };

  // Sorts everything and validates ids, endpoints and non-empty ranges.
  UltragraphSpec canonical_ultragraph(UltragraphSpec u);

  // Format: "uvertex <id>" and "uedge <id> <src> { <v> ... }" lines.
  UltragraphSpec parse_ultragraph(std::istream& in);
  UltragraphSpec parse_ultragraph(std::string_view text);
  UltragraphSpec load_ultragraph(std::string const& path);
  std::string    emit_ultragraph(UltragraphSpec const& u);

  // One labelled edge id:w, labelled id, for each ultra-edge id and each w
  // in its range.
  LabelledGraph ultragraph_to_labelled(UltragraphSpec const& u);

  // Needs a left-resolving graph in which every symbol has a single source
  // vertex; throws PreconditionError otherwise.
  UltragraphSpec labelled_to_ultragraph(LabelledGraph const& g);

}  // namespace lspace
