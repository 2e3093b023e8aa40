#pragma once

// Random monomials and elements, and rewrites that keep an element's value.

#include <random>
#include <vector>

#include "lspace/algebra.hpp"
#include "oracles.hpp"

namespace gen {

  using namespace lspace;

  class ElementGen {
   public:
    ElementGen(Algebra const& alg, std::uint32_t seed, std::size_t max_word = 2) : alg_(alg), rng_(seed) {
      words_.push_back(Word{});
      for (std::size_t n = 1; n <= max_word; ++n) {
        for (auto const& w : words_of_length(alg.graph(), n)) {
          words_.push_back(w);
        }
      }
      for (auto const& a : alg.space().family().sets()) {
        if (!a.empty()) {
          sets_.push_back(a);
        }
      }
    }

    std::mt19937& rng() {
      return rng_;
    }

    // A non-zero s_α p_A s_β*.
    Element monomial() {
      for (;;) {
        Element m = alg_.monomial(pick(words_), pick(sets_), pick(words_));
        if (!m.is_zero()) {
          return m;
        }
      }
    }

    Rational coefficient() {
      static constexpr int choices[] = {1, 1, 1, -1, 2, -2, 3};
      Rational c(choices[rng_() % std::size(choices)]);
      return rng_() % 5 == 0 ? c / 2 : c;
    }

    // Non-zero as a combination.
    Element element(std::size_t max_terms = 3) {
      for (;;) {
        Element x;
        std::size_t const n = 1 + rng_() % max_terms;
        for (std::size_t i = 0; i < n; ++i) {
          x += coefficient() * monomial();
        }
        if (!x.is_zero()) {
          return x;
        }
      }
    }

    // p_A = Σ_a s_a p_{r(A,a)} s_a* applied inside one term, using ranges
    // computed from the edge list. Needs a graph without sinks.
    Element expand_one(Element const& x) {
      auto const& terms = x.terms();
      auto        it    = std::next(terms.begin(), rng_() % terms.size());
      Element     out   = x;
      out.add(it->first, -it->second);
      Monomial const& m = it->first;
      for (SymbolId a = 0; a < alg_.graph().alphabet_size(); ++a) {
        oracle::Set const next = oracle::one_step(alg_.graph(), oracle::to_set(m.set), a);
        if (next.empty()) {
          continue;
        }
        Word alpha = m.alpha, beta = m.beta;
        alpha.push_back(a);
        beta.push_back(a);
        out += it->second * alg_.monomial(alpha, oracle::to_vertex_set(alg_.graph(), next), beta);
      }
      return out;
    }

    // p_A = p_{A∩B} + p_{A∪B} − p_B inside one term.
    Element split_one(Element const& x) {
      auto const&     terms = x.terms();
      auto            it    = std::next(terms.begin(), rng_() % terms.size());
      Monomial const& m     = it->first;
      VertexSet const b     = pick(sets_);
      Element         out   = x;
      out.add(m, -it->second);
      out += it->second * alg_.monomial(m.alpha, m.set & b, m.beta);
      out += it->second * alg_.monomial(m.alpha, m.set | b, m.beta);
      out -= it->second * alg_.monomial(m.alpha, b, m.beta);
      return out;
    }

    // An element with the same value as x, built by one or two rewrites.
    Element rewrite(Element const& x) {
      Element y = rng_() % 2 ? expand_one(x) : split_one(x);
      if (y.is_zero()) {
        return y;
      }
      if (rng_() % 3 == 0) {
        y = split_one(y);
      }
      return y;
    }

    // True when every word of x has length at most n.
    static bool short_words(Element const& x, std::size_t n) {
      for (auto const& [m, c] : x.terms()) {
        if (m.alpha.size() > n || m.beta.size() > n) {
          return false;
        }
      }
      return true;
    }

   private:
    template <class T>
    T const& pick(std::vector<T> const& xs) {
      return xs[rng_() % xs.size()];
    }

    Algebra const&         alg_;
    std::mt19937           rng_;
    std::vector<Word>      words_;
    std::vector<VertexSet> sets_;
  };

}  // namespace gen
