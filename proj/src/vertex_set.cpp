#include "lspace/vertex_set.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace lspace {

  namespace {
    std::size_t word_count(std::size_t universe) {
      return (universe + 63) / 64;
    }
  }  // namespace

  VertexSet::VertexSet(std::size_t universe)
      : universe_(universe), words_(word_count(universe), 0) {}

  VertexSet::VertexSet(std::size_t universe, std::initializer_list<VertexId> members)
      : VertexSet(universe) {
    for (VertexId v : members) {
      insert(v);
    }
  }

  VertexSet::VertexSet(std::size_t universe, std::vector<VertexId> const& members)
      : VertexSet(universe) {
    for (VertexId v : members) {
      insert(v);
    }
  }

  VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    for (VertexId v = 0; v < universe; ++v) {
      s.insert(v);
    }
    return s;
  }

  VertexSet VertexSet::singleton(std::size_t universe, VertexId v) {
    VertexSet s(universe);
    s.insert(v);
    return s;
  }

  std::size_t VertexSet::size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) {
      n += static_cast<std::size_t>(std::popcount(w));
    }
    return n;
  }

  bool VertexSet::empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  bool VertexSet::contains(VertexId v) const noexcept {
    if (v >= universe_) {
      return false;
    }
    return (words_[v / 64] >> (v % 64)) & 1U;
  }

  bool VertexSet::intersects(VertexSet const& other) const noexcept {
    std::size_t const n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if ((words_[i] & other.words_[i]) != 0) {
        return true;
      }
    }
    return false;
  }

  bool VertexSet::is_subset_of(VertexSet const& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t const o = i < other.words_.size() ? other.words_[i] : 0;
      if ((words_[i] & ~o) != 0) {
        return false;
      }
    }
    return true;
  }

  void VertexSet::insert(VertexId v) {
    if (v >= universe_) {
      throw std::out_of_range("vertex index outside the set's universe");
    }
    words_[v / 64] |= std::uint64_t{1} << (v % 64);
  }

  void VertexSet::erase(VertexId v) {
    if (v < universe_) {
      words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  VertexSet& VertexSet::operator|=(VertexSet const& other) {
    if (other.universe_ != universe_) {
      throw std::invalid_argument("vertex sets over different universes");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] |= other.words_[i];
    }
    return *this;
  }

  VertexSet& VertexSet::operator&=(VertexSet const& other) {
    if (other.universe_ != universe_) {
      throw std::invalid_argument("vertex sets over different universes");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] &= other.words_[i];
    }
    return *this;
  }

  VertexSet& VertexSet::operator-=(VertexSet const& other) {
    if (other.universe_ != universe_) {
      throw std::invalid_argument("vertex sets over different universes");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] &= ~other.words_[i];
    }
    return *this;
  }

  std::vector<VertexId> VertexSet::members() const {
    std::vector<VertexId> out;
    out.reserve(size());
    for_each([&out](VertexId v) { out.push_back(v); });
    return out;
  }

  std::strong_ordering VertexSet::operator<=>(VertexSet const& other) const {
    if (auto c = universe_ <=> other.universe_; c != 0) {
      return c;
    }
    if (auto c = size() <=> other.size(); c != 0) {
      return c;
    }
    auto const a = members();
    auto const b = other.members();
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
  }

  std::size_t VertexSet::hash() const noexcept {
    std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) {
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

}  // namespace lspace
