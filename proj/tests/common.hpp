#pragma once

#include <string>

#include "lspace/covers.hpp"
#include "lspace/graph.hpp"
#include "lspace/shift.hpp"

namespace testing {

  inline std::string corpus(std::string const& name) {
    return std::string(LSPACE_CORPUS_DIR) + "/" + name;
  }

  inline lspace::LabelledGraph load(std::string const& name) {
    return lspace::load_labelled_graph(corpus(name));
  }

  inline lspace::LabelledGraph const& e1() {
    static auto const g = load("even_E1.lg");
    return g;
  }
  inline lspace::LabelledGraph const& e2() {
    static auto const g = load("even_E2.lg");
    return g;
  }
  inline lspace::LabelledGraph const& e3() {
    static auto const g = load("even_E3.lg");
    return g;
  }
  inline lspace::LabelledGraph const& loop() {
    static auto const g = load("loop.lg");
    return g;
  }
  inline lspace::LabelledGraph const& z_presentation() {
    static auto const g = lspace::presentation_from_forbidden(lspace::load_patterns(corpus("z.pat")));
    return g;
  }
  inline lspace::LabelledGraph const& z_krieger() {
    static auto const g = lspace::left_krieger_cover(z_presentation());
    return g;
  }

}  // namespace testing
