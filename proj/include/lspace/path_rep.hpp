#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "lspace/algebra.hpp"
#include "lspace/labelled_space.hpp"
#include "lspace/report.hpp"

namespace lspace {

  // A sparse column vector over the path basis.
  using Vector = std::map<std::size_t, Rational>;

  // A linear map on the span of the path basis, stored by columns.
  class Operator {
   public:
    Operator() = default;
    explicit Operator(std::size_t dimension) : columns_(dimension) {}

    std::size_t dimension() const noexcept {
      return columns_.size();
    }
    Vector const& column(std::size_t j) const {
      return columns_.at(j);
    }
    void add(std::size_t row, std::size_t col, Rational const& c);

    Operator& operator+=(Operator const& other);
    Operator& operator-=(Operator const& other);
    friend Operator operator+(Operator x, Operator const& y) {
      return x += y;
    }
    friend Operator operator-(Operator x, Operator const& y) {
      return x -= y;
    }

    Operator transpose() const;

    bool operator==(Operator const&) const = default;

   private:
    std::vector<Vector> columns_;
  };

  // a ∘ b.
  Operator compose(Operator const& a, Operator const& b);

  // The representation on all paths of length at most L:
  //   S_a e_λ = e_{eλ} for the unique a-labelled edge e into s(λ), when it
  //             exists and |λ| < L, and 0 otherwise;
  //   P_A e_λ = e_λ when s(λ) ∈ A, and 0 otherwise.
  // Length-0 paths are the vertices. The basis is ordered by length, then by
  // edge sequence.
  class TruncatedRep {
   public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    // Throws PreconditionError when the graph is not left-resolving.
    TruncatedRep(LabelledSpace const& space, std::size_t max_length);

    LabelledGraph const& graph() const noexcept {
      return graph_;
    }
    std::size_t max_length() const noexcept {
      return max_length_;
    }
    std::size_t size() const noexcept {
      return paths_.size();
    }
    Path const& path(std::size_t i) const {
      return paths_.at(i);
    }
    std::optional<std::size_t> index(Path const& p) const;

    // Basis index of S_a e_i, or npos.
    std::size_t prepend(SymbolId a, std::size_t i) const {
      return prepend_.at(i * graph_.alphabet_size() + a);
    }
    // Basis index of S_a* e_i, or npos.
    std::size_t strip(SymbolId a, std::size_t i) const;

    Operator s(SymbolId a) const;
    Operator s_star(SymbolId a) const;
    Operator p(VertexSet const& a) const;

    // Columns whose path length lies in [lo, hi].
    std::vector<std::size_t> band(std::size_t lo, std::size_t hi) const;

   private:
    LabelledGraph                      graph_;
    std::size_t                        max_length_;
    std::vector<Path>                  paths_;
    std::map<std::pair<VertexId, std::vector<EdgeId>>, std::size_t> index_;
    std::vector<std::size_t>           prepend_;
    std::vector<std::size_t>           tail_;
  };

  // Basis index of S_α P_A S_β* e_i, or npos.
  std::size_t image(TruncatedRep const& rep, Monomial const& m, std::size_t i);

  // Substitutes S_a, S_a* and P_A for s_a, s_a* and p_A in every term.
  // Throws LimitError when a word is longer than L.
  Operator operator_of_element(TruncatedRep const& rep, Element const& x);

  // True when every listed column of the operator is zero.
  bool vanishes_on(Operator const& op, std::vector<std::size_t> const& columns);

  // Inputs of length in [w + max(K, w), L], where w is the longest word in x
  // or y. Throws PreconditionError when that band is empty.
  std::pair<std::size_t, std::size_t> oracle_band(TruncatedRep const& rep, Element const& x, Element const& y,
                                                  std::size_t k);

  // x − y and its adjoint both vanish on the oracle band.
  bool oracle_equal(TruncatedRep const& rep, Element const& x, Element const& y, std::size_t k);

  // Relations (i) to (iii) on paths of length at most L − K, relation (iv)
  // on lengths 1 to L − K, and the product formula for monomials with words
  // of length at most one on lengths [n, L − n], n the total word length.
  CheckReport check_band_relations(LabelledSpace const& space, std::size_t max_length, std::size_t k);

}  // namespace lspace
