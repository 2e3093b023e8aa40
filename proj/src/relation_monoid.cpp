#include <deque>

#include "lspace/error.hpp"
#include "lspace/labelled_space.hpp"

namespace lspace {

  Relation::Relation(std::size_t universe) : rows_(universe, VertexSet(universe)) {}

  void Relation::add(VertexId from, VertexId to) {
    rows_.at(from).insert(to);
  }

  bool Relation::empty() const noexcept {
    for (auto const& r : rows_) {
      if (!r.empty()) {
        return false;
      }
    }
    return true;
  }

  VertexSet Relation::image(VertexSet const& a) const {
    VertexSet out(universe());
    a.for_each([&](VertexId v) { out |= rows_[v]; });
    return out;
  }

  VertexSet Relation::preimage(VertexSet const& b) const {
    VertexSet out(universe());
    for (VertexId v = 0; v < universe(); ++v) {
      if (rows_[v].intersects(b)) {
        out.insert(v);
      }
    }
    return out;
  }

  VertexSet Relation::domain() const {
    VertexSet out(universe());
    for (VertexId v = 0; v < universe(); ++v) {
      if (!rows_[v].empty()) {
        out.insert(v);
      }
    }
    return out;
  }

  VertexSet Relation::range() const {
    VertexSet out(universe());
    for (auto const& r : rows_) {
      out |= r;
    }
    return out;
  }

  Relation Relation::then(Relation const& next) const {
    Relation out(universe());
    for (VertexId v = 0; v < universe(); ++v) {
      out.rows_[v] = next.image(rows_[v]);
    }
    return out;
  }

  std::size_t Relation::hash() const noexcept {
    std::size_t h = rows_.size();
    for (auto const& r : rows_) {
      h ^= r.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  namespace {
    Relation symbol_relation(LabelledGraph const& g, SymbolId a) {
      Relation r(g.num_vertices());
      for (auto const& e : g.edges()) {
        if (e.label == a) {
          r.add(e.src, e.dst);
        }
      }
      return r;
    }

    void check_word(LabelledGraph const& g, Word const& w) {
      for (SymbolId a : w) {
        if (a >= g.alphabet_size()) {
          throw PreconditionError("symbol index " + std::to_string(a) + " is outside the alphabet");
        }
      }
    }
  }  // namespace

  Relation word_relation(LabelledGraph const& g, Word const& w) {
    check_word(g, w);
    Relation r(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      r.add(v, v);
    }
    for (SymbolId a : w) {
      r = r.then(symbol_relation(g, a));
    }
    return r;
  }

  RelationMonoid RelationMonoid::build(LabelledGraph const& g, std::size_t limit) {
    RelationMonoid m;
    std::size_t const k = g.alphabet_size();

    std::vector<Relation> gens;
    for (SymbolId a = 0; a < k; ++a) {
      gens.push_back(symbol_relation(g, a));
    }

    auto intern = [&](Relation r, Word w) -> std::size_t {
      if (r.empty()) {
        return npos;
      }
      auto [it, fresh] = m.index_.emplace(r, m.elements_.size());
      if (fresh) {
        if (m.elements_.size() >= limit) {
          throw LimitError("relation monoid exceeds " + std::to_string(limit) + " elements");
        }
        m.elements_.push_back(std::move(r));
        m.witnesses_.push_back(std::move(w));
      }
      return it->second;
    };

    for (SymbolId a = 0; a < k; ++a) {
      m.generators_.push_back(intern(gens[a], Word{a}));
    }

    // Breadth first: element i is expanded after every element found before
    // it, which keeps witnesses shortlex minimal.
    for (std::size_t i = 0; i < m.elements_.size(); ++i) {
      for (SymbolId a = 0; a < k; ++a) {
        Word w = m.witnesses_[i];
        w.push_back(a);
        std::size_t const j = intern(m.elements_[i].then(gens[a]), std::move(w));
        m.right_.push_back(j);
      }
    }

    m.left_.reserve(m.elements_.size() * k);
    for (std::size_t i = 0; i < m.elements_.size(); ++i) {
      for (SymbolId a = 0; a < k; ++a) {
        Relation r = gens[a].then(m.elements_[i]);
        if (r.empty()) {
          m.left_.push_back(npos);
        } else {
          m.left_.push_back(m.index_.at(r));
        }
      }
    }
    return m;
  }

  std::optional<std::size_t> RelationMonoid::find(Relation const& r) const {
    if (auto it = index_.find(r); it != index_.end()) {
      return it->second;
    }
    return std::nullopt;
  }

  std::optional<std::size_t> RelationMonoid::of_word(Word const& w) const {
    if (w.empty()) {
      throw PreconditionError("the empty word has no relation in the monoid");
    }
    std::size_t cur = generator(w[0]);
    for (std::size_t i = 1; i < w.size() && cur != npos; ++i) {
      cur = right_step(cur, w[i]);
    }
    if (cur == npos) {
      return std::nullopt;
    }
    return cur;
  }

  VertexSet relative_range(LabelledGraph const& g, VertexSet const& a, Word const& alpha) {
    if (alpha.empty()) {
      throw PreconditionError("relative range of the empty word");
    }
    check_word(g, alpha);
    VertexSet cur = a;
    for (SymbolId s : alpha) {
      VertexSet next(g.num_vertices());
      cur.for_each([&](VertexId v) {
        for (EdgeId e : g.out_edges(v)) {
          if (g.edge(e).label == s) {
            next.insert(g.edge(e).dst);
          }
        }
      });
      cur = std::move(next);
    }
    return cur;
  }

  VertexSet word_sources(LabelledGraph const& g, Word const& alpha) {
    return word_relation(g, alpha).domain();
  }

  VertexSet word_ranges(LabelledGraph const& g, Word const& alpha) {
    return word_relation(g, alpha).range();
  }

  std::vector<Word> words_of_length(LabelledGraph const& g, std::size_t n) {
    if (n == 0) {
      return {Word{}};
    }
    // Frontier of (word, set of path ends) pairs, extended symbol by symbol
    // in increasing order, so the output is lexicographic.
    std::vector<std::pair<Word, VertexSet>> frontier{{Word{}, g.all_vertices()}};
    for (std::size_t len = 0; len < n; ++len) {
      std::vector<std::pair<Word, VertexSet>> next;
      for (auto const& [w, ends] : frontier) {
        for (SymbolId a = 0; a < g.alphabet_size(); ++a) {
          VertexSet r = relative_range(g, ends, Word{a});
          if (!r.empty()) {
            next.emplace_back(w + Word{a}, std::move(r));
          }
        }
      }
      frontier = std::move(next);
    }
    std::vector<Word> out;
    for (auto& [w, ends] : frontier) {
      out.push_back(std::move(w));
    }
    return out;
  }

  WordSets word_sets(LabelledGraph const& g, VertexSet const& a, std::size_t n) {
    if (n == 0) {
      throw PreconditionError("word_sets needs a positive length");
    }
    WordSets out;
    for (auto const& w : words_of_length(g, n)) {
      Relation r = word_relation(g, w);
      WordSetEntry entry{w, r.domain(), r.range()};
      if (entry.sources.intersects(a)) {
        out.meeting.push_back(w);
      }
      out.words.push_back(std::move(entry));
    }
    return out;
  }

}  // namespace lspace
