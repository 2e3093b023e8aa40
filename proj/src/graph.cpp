#include "lspace/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lspace/error.hpp"

namespace lspace {

  bool Word::starts_with(Word const& prefix) const {
    return prefix.size() <= size()
           && std::equal(prefix.begin(), prefix.end(), symbols_.begin());
  }

  Word Word::drop(std::size_t n) const {
    if (n >= size()) {
      return Word{};
    }
    return Word(std::vector<SymbolId>(symbols_.begin() + static_cast<std::ptrdiff_t>(n), symbols_.end()));
  }

  Word Word::take(std::size_t n) const {
    n = std::min(n, size());
    return Word(std::vector<SymbolId>(symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(n)));
  }

  std::strong_ordering Word::operator<=>(Word const& other) const {
    if (auto c = size() <=> other.size(); c != 0) {
      return c;
    }
    return std::lexicographical_compare_three_way(
        symbols_.begin(), symbols_.end(), other.symbols_.begin(), other.symbols_.end());
  }

  LabelledGraph LabelledGraph::build(std::vector<std::string> const& vertices,
                                     std::vector<EdgeSpec> const&    edges,
                                     std::vector<std::string> const& declared_alphabet,
                                     std::vector<std::string>*       warnings) {
    LabelledGraph g;

    g.vertex_names_ = vertices;
    std::sort(g.vertex_names_.begin(), g.vertex_names_.end());
    if (auto it = std::adjacent_find(g.vertex_names_.begin(), g.vertex_names_.end());
        it != g.vertex_names_.end()) {
      throw Error("duplicate vertex id '" + *it + "'");
    }

    std::set<std::string> declared(declared_alphabet.begin(), declared_alphabet.end());
    std::set<std::string> used;
    for (auto const& e : edges) {
      if (!declared.empty() && declared.count(e.label) == 0) {
        throw Error("edge '" + e.id + "' has label '" + e.label + "' outside the declared alphabet");
      }
      used.insert(e.label);
    }
    for (auto const& a : declared) {
      if (used.count(a) == 0 && warnings != nullptr) {
        warnings->push_back("symbol '" + a + "' labels no edge; dropped from the alphabet");
      }
    }
    g.alphabet_.assign(used.begin(), used.end());

    std::vector<EdgeSpec> sorted = edges;
    std::sort(sorted.begin(), sorted.end(), [](auto const& x, auto const& y) { return x.id < y.id; });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      if (sorted[i].id == sorted[i - 1].id) {
        throw Error("duplicate edge id '" + sorted[i].id + "'");
      }
    }

    g.out_.assign(g.vertex_names_.size(), {});
    g.in_.assign(g.vertex_names_.size(), {});
    for (auto const& spec : sorted) {
      auto src = g.find_vertex(spec.src);
      auto dst = g.find_vertex(spec.dst);
      if (!src || !dst) {
        throw Error("edge '" + spec.id + "' has dangling endpoint '" + (src ? spec.dst : spec.src) + "'");
      }
      auto const id = static_cast<EdgeId>(g.edges_.size());
      g.edges_.push_back(Edge{spec.id, *src, *dst, *g.find_symbol(spec.label)});
      g.out_[*src].push_back(id);
      g.in_[*dst].push_back(id);
    }
    return g;
  }

  namespace {
    template <typename T>
    std::optional<std::uint32_t> find_sorted(std::vector<T> const& v, std::string_view key) {
      auto it = std::lower_bound(v.begin(), v.end(), key, [](auto const& x, std::string_view k) {
        return std::string_view(x) < k;
      });
      if (it == v.end() || std::string_view(*it) != key) {
        return std::nullopt;
      }
      return static_cast<std::uint32_t>(it - v.begin());
    }
  }  // namespace

  std::optional<VertexId> LabelledGraph::find_vertex(std::string_view name) const {
    return find_sorted(vertex_names_, name);
  }

  std::optional<SymbolId> LabelledGraph::find_symbol(std::string_view token) const {
    return find_sorted(alphabet_, token);
  }

  std::optional<EdgeId> LabelledGraph::find_edge(std::string_view id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id, [](Edge const& e, std::string_view k) {
      return std::string_view(e.id) < k;
    });
    if (it == edges_.end() || it->id != id) {
      return std::nullopt;
    }
    return static_cast<EdgeId>(it - edges_.begin());
  }

  Word LabelledGraph::parse_word(std::string_view text) const {
    Word w;
    auto tokens = tokenize_line(text);
    for (auto const& tok : tokens) {
      if (auto a = find_symbol(tok)) {
        w.push_back(*a);
        continue;
      }
      // Run-together form, only unambiguous when every symbol is one character.
      bool const single_chars = std::all_of(alphabet_.begin(), alphabet_.end(), [](auto const& s) {
        return s.size() == 1;
      });
      if (!single_chars) {
        throw Error("unknown symbol '" + tok + "'");
      }
      for (char c : tok) {
        auto a = find_symbol(std::string_view(&c, 1));
        if (!a) {
          throw Error("unknown symbol '" + std::string(1, c) + "'");
        }
        w.push_back(*a);
      }
    }
    return w;
  }

  std::string LabelledGraph::format_word(Word const& w, std::string_view separator) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) {
        out += separator;
      }
      out += symbol(w[i]);
    }
    return out;
  }

  std::string LabelledGraph::format_set(VertexSet const& s) const {
    std::string out = "{";
    bool        first = true;
    s.for_each([&](VertexId v) {
      out += first ? "" : ",";
      out += vertex_name(v);
      first = false;
    });
    return out + "}";
  }

  Word Path::label(LabelledGraph const& g) const {
    Word w;
    for (EdgeId e : edges) {
      w.push_back(g.edge(e).label);
    }
    return w;
  }

}  // namespace lspace
