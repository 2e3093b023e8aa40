#include <doctest.h>

#include "properties.hpp"

TEST_CASE("symbolic equality agrees with the band oracle") {
  std::uint32_t seed = 100;
  for (auto const& [name, space] : props::left_resolving_spaces()) {
    CAPTURE(name);
    auto const a = props::oracle_agreement(space, 500, seed++);
    for (auto const& ex : a.examples) {
      MESSAGE(ex);
    }
    CHECK(a.disagree == 0);
    CHECK(a.equal >= 100);
    CHECK(a.different >= 100);
  }
}

// The Z cover takes seconds here; the acceptance run covers it.
TEST_CASE("band relations have no violations on the small corpus spaces") {
  for (auto const& [name, space] : props::left_resolving_spaces()) {
    if (name.rfind("Z", 0) == 0) {
      continue;
    }
    CAPTURE(name);
    auto const r = lspace::check_band_relations(space, 6, 2);
    CHECK(r.passed());
    CHECK(r.precondition_failures.empty());
  }
}

TEST_CASE("associativity, involution and degree on random monomials") {
  std::uint32_t seed = 200;
  for (auto const& [name, space] : props::algebra_spaces()) {
    CAPTURE(name);
    auto const l = props::algebra_laws(space, 1000, seed++);
    CHECK(l.associativity == 0);
    CHECK(l.involution == 0);
    CHECK(l.degree == 0);
    CHECK(l.nonzero >= 100);
  }
}
