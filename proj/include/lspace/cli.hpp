#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lspace/graph.hpp"

namespace lspace::cli {

  inline constexpr int exit_pass   = 0;
  inline constexpr int exit_failed = 1;
  inline constexpr int exit_usage  = 2;

  // Reads a graph argument: *.pat files are forbidden-pattern sets and are
  // presented first, *.ug files are ultragraphs, anything else is a labelled
  // graph file.
  LabelledGraph load_graph_argument(std::string const& path, std::vector<std::string>* warnings = nullptr);

  // args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace lspace::cli
