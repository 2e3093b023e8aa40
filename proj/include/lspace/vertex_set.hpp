#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace lspace {

  using VertexId = std::uint32_t;

  // A subset of the vertices {0, ..., universe - 1} of a graph.
  //
  // Stored as a bitset; iteration and members() always yield vertices in
  // increasing order, so two equal sets print identically. The canonical
  // order (operator<=>) sorts by cardinality first and then lexicographically
  // by the sorted member list, which puts the empty set first and the full
  // vertex set last.
  class VertexSet {
   public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    VertexSet(std::size_t universe, std::initializer_list<VertexId> members);
    VertexSet(std::size_t universe, std::vector<VertexId> const& members);

    static VertexSet full(std::size_t universe);
    static VertexSet singleton(std::size_t universe, VertexId v);

    std::size_t universe() const noexcept {
      return universe_;
    }
    std::size_t size() const noexcept;
    bool empty() const noexcept;
    bool contains(VertexId v) const noexcept;
    bool intersects(VertexSet const& other) const noexcept;
    bool is_subset_of(VertexSet const& other) const noexcept;

    void insert(VertexId v);
    void erase(VertexId v);

    VertexSet& operator|=(VertexSet const& other);
    VertexSet& operator&=(VertexSet const& other);
    VertexSet& operator-=(VertexSet const& other);

    friend VertexSet operator|(VertexSet lhs, VertexSet const& rhs) {
      return lhs |= rhs;
    }
    friend VertexSet operator&(VertexSet lhs, VertexSet const& rhs) {
      return lhs &= rhs;
    }
    friend VertexSet operator-(VertexSet lhs, VertexSet const& rhs) {
      return lhs -= rhs;
    }

    std::vector<VertexId> members() const;

    template <typename F>
    void for_each(F&& f) const {
      for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits != 0) {
          int const b = __builtin_ctzll(bits);
          f(static_cast<VertexId>(w * 64 + static_cast<std::size_t>(b)));
          bits &= bits - 1;
        }
      }
    }

    bool operator==(VertexSet const& other) const noexcept {
      return universe_ == other.universe_ && words_ == other.words_;
    }
    std::strong_ordering operator<=>(VertexSet const& other) const;

    std::size_t hash() const noexcept;

   private:
    std::size_t                universe_ = 0;
    std::vector<std::uint64_t> words_;
  };

  struct VertexSetHash {
    std::size_t operator()(VertexSet const& s) const noexcept {
      return s.hash();
    }
  };

}  // namespace lspace
