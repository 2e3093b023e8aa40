#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lspace/graph.hpp"
#include "lspace/labelled_space.hpp"

namespace lspace {

  using Rational = boost::multiprecision::cpp_rational;

  // s_α p_A s_β*. Either word may be empty; A is kept inside r(α) ∩ r(β).
  struct Monomial {
    Word      alpha;
    VertexSet set;
    Word      beta;

    auto operator<=>(Monomial const&) const = default;
  };

  // A finite rational combination of monomials. Zero coefficients are never
  // stored, so two equal combinations compare equal.
  class Element {
   public:
    using Terms = std::map<Monomial, Rational>;

    Element() = default;
    explicit Element(Monomial m, Rational c = 1);

    Terms const& terms() const noexcept {
      return terms_;
    }
    bool is_zero() const noexcept {
      return terms_.empty();
    }
    std::size_t size() const noexcept {
      return terms_.size();
    }

    void add(Monomial const& m, Rational const& c);

    Element& operator+=(Element const& other);
    Element& operator-=(Element const& other);
    Element& operator*=(Rational const& c);

    friend Element operator+(Element x, Element const& y) {
      return x += y;
    }
    friend Element operator-(Element x, Element const& y) {
      return x -= y;
    }
    friend Element operator*(Rational const& c, Element x) {
      return x *= c;
    }
    friend Element operator-(Element x) {
      return x *= Rational(-1);
    }

    bool operator==(Element const&) const = default;

   private:
    Terms terms_;
  };

  // |α| − |β| when every term agrees, nullopt for mixed degrees. Zero has
  // degree 0.
  std::optional<long> degree(Element const& x);

  Element adjoint(Element const& x);

  inline constexpr std::size_t default_max_depth = 8;

  struct Expansion {
    Element     value;
    // Terms left alone because their set contains a sink.
    std::size_t unexpanded = 0;
  };

  enum class Verdict { equal, different, indeterminate };

  std::string to_string(Verdict v);

  // Symbolic spanning-monomial calculus of a labelled space.
  class Algebra {
   public:
    explicit Algebra(LabelledSpace space, std::size_t max_depth = default_max_depth);

    LabelledSpace const& space() const noexcept {
      return space_;
    }
    LabelledGraph const& graph() const noexcept {
      return space_.graph();
    }
    std::size_t max_depth() const noexcept {
      return max_depth_;
    }
    bool weakly_left_resolving() const noexcept {
      return weakly_left_resolving_;
    }

    // r(α), with r(ε) = E⁰; empty when α labels no path.
    VertexSet range(Word const& alpha) const;
    // r(A, α), with r(A, ε) = A.
    VertexSet relative_range(VertexSet const& a, Word const& alpha) const;
    bool is_path(Word const& alpha) const;

    // Throws PreconditionError when A is outside the family or a non-empty
    // word labels no path. Returns zero when A ∩ r(α) ∩ r(β) is empty.
    Element monomial(Word const& alpha, VertexSet const& a, Word const& beta) const;
    Element s(Word const& alpha) const;
    Element s_star(Word const& beta) const;
    Element p(VertexSet const& a) const;

    // Throws PreconditionError on a space that is not weakly left-resolving.
    Element multiply(Element const& x, Element const& y) const;
    Element multiply(std::vector<Element> const& factors) const;

    // Rewrites with p_A = Σ_a s_a p_{r(A,a)} s_a* until min(|α|,|β|) ≥ k for
    // every term. Throws LimitError when k exceeds max_depth().
    Expansion expand_to_depth(Element const& x, std::size_t k) const;

    // Brings both sides to a common depth of at least k, splits every set
    // into atoms of the Boolean algebra generated by the family and compares
    // coefficients.
    Verdict compare_at_depth(Element const& x, Element const& y, std::size_t k) const;
    // Throws PreconditionError when the comparison is indeterminate.
    bool equal_at_depth(Element const& x, Element const& y, std::size_t k) const;

    // Atoms of the Boolean algebra generated by the family, in canonical
    // order. Vertices in no family set belong to no atom.
    std::vector<VertexSet> const& atoms() const noexcept {
      return atoms_;
    }

   private:
    std::optional<Monomial> times(Monomial const& x, Monomial const& y) const;
    bool                    normalize(Monomial& m) const;
    Element                 atomic(Element const& x) const;
    void                    require_depth(std::size_t k) const;

    LabelledSpace          space_;
    std::size_t            max_depth_;
    bool                   weakly_left_resolving_ = false;
    std::vector<VertexSet> atoms_;
    VertexSet              sinks_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Element literals
  ////////////////////////////////////////////////////////////////////////

  // Grammar:
  //   element := "0" | ["-"] term (("+" | "-") term)*
  //   term    := [rational] factor+
  //   factor  := "s(" word ")" | "s*(" word ")" | "p{" vertex ("," vertex)* "}"
  // Words use the graph's parse_word syntax. A term of the shape
  // s(α) p{A} s*(β), with each factor optional, is read as that monomial;
  // any other factor sequence is multiplied out.
  Element parse_element(Algebra const& alg, std::string_view text);

  // Canonical form, e.g. "s(0)p{u,v}s*(0) + 2 s(1)p{u}s*(1)"; zero is "0".
  std::string format_element(Algebra const& alg, Element const& x);
  std::string format_monomial(Algebra const& alg, Monomial const& m);

}  // namespace lspace
