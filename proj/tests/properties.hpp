#pragma once

// Randomised agreement and algebraic-law runs shared by the unit tests and
// the acceptance binary.

#include <string>
#include <vector>

#include "common.hpp"
#include "generators.hpp"
#include "lspace/path_rep.hpp"

namespace props {

  using namespace lspace;

  struct NamedSpace {
    std::string   name;
    LabelledSpace space;
  };

  // Corpus spaces on which the path representation is defined.
  inline std::vector<NamedSpace> left_resolving_spaces() {
    std::vector<NamedSpace> out;
    out.push_back({"E1/e0", LabelledSpace::standard(testing::e1(), FamilySeed::e0)});
    out.push_back({"E1/e0-", LabelledSpace::standard(testing::e1(), FamilySeed::e0_minus)});
    out.push_back({"E2/e0", LabelledSpace::standard(testing::e2(), FamilySeed::e0)});
    out.push_back({"E2/e0-", LabelledSpace::standard(testing::e2(), FamilySeed::e0_minus)});
    out.push_back({"loop/e0", LabelledSpace::standard(testing::loop(), FamilySeed::e0)});
    out.push_back({"Z-krieger/e0", LabelledSpace::standard(testing::z_krieger(), FamilySeed::e0)});
    return out;
  }

  // Spaces on which multiplication is defined.
  inline std::vector<NamedSpace> algebra_spaces() {
    auto out = left_resolving_spaces();
    out.push_back({"E3/e0-", LabelledSpace::standard(testing::e3(), FamilySeed::e0_minus)});
    return out;
  }

  struct Agreement {
    std::size_t pairs     = 0;
    std::size_t equal     = 0;
    std::size_t different = 0;
    std::size_t disagree  = 0;
    std::vector<std::string> examples;
  };

  // Pairs (x, y) where y is a value-preserving rewrite of x, a perturbed
  // rewrite, or an unrelated element, compared symbolically at depth k and
  // by the band oracle at length l.
  inline Agreement oracle_agreement(LabelledSpace const& space, std::size_t pairs, std::uint32_t seed,
                                    std::size_t l = 6, std::size_t k = 2) {
    Algebra const      alg(space);
    TruncatedRep const rep(space, l);
    gen::ElementGen    g(alg, seed);
    Agreement          out;
    while (out.pairs < pairs) {
      Element const x = g.element();
      Element       y;
      switch (out.pairs % 4) {
        case 0:
        case 1:
          y = g.rewrite(x);
          break;
        case 2:
          y = g.rewrite(x) + g.coefficient() * g.monomial();
          break;
        default:
          y = g.element();
          break;
      }
      ++out.pairs;
      bool const symbolic = alg.equal_at_depth(x, y, k);
      bool const concrete = oracle_equal(rep, x, y, k);
      ++(symbolic ? out.equal : out.different);
      if (symbolic != concrete) {
        ++out.disagree;
        if (out.examples.size() < 5) {
          out.examples.push_back(format_element(alg, x) + "  vs  " + format_element(alg, y));
        }
      }
    }
    return out;
  }

  struct Laws {
    std::size_t triples        = 0;
    std::size_t nonzero        = 0;
    std::size_t associativity  = 0;
    std::size_t involution     = 0;
    std::size_t degree         = 0;
  };

  // Failure counts for (xy)z = x(yz), (xy)* = y*x* and deg(xy) = deg x +
  // deg y on random monomial triples.
  inline Laws algebra_laws(LabelledSpace const& space, std::size_t triples, std::uint32_t seed) {
    Algebra const   alg(space);
    gen::ElementGen g(alg, seed);
    Laws            out;
    auto same = [&](Element const& a, Element const& b) {
      return alg.compare_at_depth(a, b, 0) == Verdict::equal;
    };
    for (; out.triples < triples; ++out.triples) {
      Element const x = g.monomial(), y = g.monomial(), z = g.monomial();
      Element const xy = alg.multiply(x, y), yz = alg.multiply(y, z);
      out.associativity += !same(alg.multiply(xy, z), alg.multiply(x, yz));
      out.involution += !same(adjoint(xy), alg.multiply(adjoint(y), adjoint(x)));
      out.involution += !same(adjoint(alg.multiply(xy, z)), alg.multiply({adjoint(z), adjoint(y), adjoint(x)}));
      if (!xy.is_zero()) {
        ++out.nonzero;
        out.degree += degree(xy) != *degree(x) + *degree(y);
      }
    }
    return out;
  }

}  // namespace props
