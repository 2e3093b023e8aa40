#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lspace/vertex_set.hpp"

namespace lspace {

  using EdgeId   = std::uint32_t;
  using SymbolId = std::uint32_t;

  // A finite word over a graph's alphabet, stored as symbol indices.
  class Word {
   public:
    Word() = default;
    Word(std::initializer_list<SymbolId> symbols) : symbols_(symbols) {}
    explicit Word(std::vector<SymbolId> symbols) : symbols_(std::move(symbols)) {}

    std::size_t size() const noexcept {
      return symbols_.size();
    }
    bool empty() const noexcept {
      return symbols_.empty();
    }
    SymbolId operator[](std::size_t i) const {
      return symbols_[i];
    }
    auto begin() const noexcept {
      return symbols_.begin();
    }
    auto end() const noexcept {
      return symbols_.end();
    }
    std::vector<SymbolId> const& symbols() const noexcept {
      return symbols_;
    }

    void push_back(SymbolId a) {
      symbols_.push_back(a);
    }

    bool starts_with(Word const& prefix) const;
    // The suffix left after removing the first n symbols.
    Word drop(std::size_t n) const;
    Word take(std::size_t n) const;

    friend Word operator+(Word lhs, Word const& rhs) {
      lhs.symbols_.insert(lhs.symbols_.end(), rhs.symbols_.begin(), rhs.symbols_.end());
      return lhs;
    }

    bool operator==(Word const&) const = default;
    // Shorter words first, then lexicographic.
    std::strong_ordering operator<=>(Word const& other) const;

   private:
    std::vector<SymbolId> symbols_;
  };

  struct Edge {
    std::string id;
    VertexId    src;
    VertexId    dst;
    SymbolId    label;

    bool operator==(Edge const&) const = default;
  };

  // An edge as written in a file, before names are resolved.
  struct EdgeSpec {
    std::string id;
    std::string src;
    std::string dst;
    std::string label;
  };

  // A finite directed multigraph with a total edge labelling.
  //
  // Vertices, edges and symbols are indexed in canonical order: vertices and
  // symbols sorted by token, edges sorted by id. The alphabet is always the
  // set of labels actually used.
  class LabelledGraph {
   public:
    LabelledGraph() = default;

    // Throws Error for duplicate ids, dangling endpoints and labels outside a
    // non-empty declared alphabet. Declared symbols that label no edge are
    // dropped and reported through warnings.
    static LabelledGraph build(std::vector<std::string> const& vertices,
                               std::vector<EdgeSpec> const&    edges,
                               std::vector<std::string> const& declared_alphabet = {},
                               std::vector<std::string>*       warnings          = nullptr);

    std::size_t num_vertices() const noexcept {
      return vertex_names_.size();
    }
    std::size_t num_edges() const noexcept {
      return edges_.size();
    }
    std::size_t alphabet_size() const noexcept {
      return alphabet_.size();
    }

    std::string const& vertex_name(VertexId v) const {
      return vertex_names_.at(v);
    }
    std::vector<std::string> const& vertex_names() const noexcept {
      return vertex_names_;
    }
    std::string const& symbol(SymbolId a) const {
      return alphabet_.at(a);
    }
    std::vector<std::string> const& alphabet() const noexcept {
      return alphabet_;
    }
    std::optional<VertexId> find_vertex(std::string_view name) const;
    std::optional<SymbolId> find_symbol(std::string_view token) const;
    std::optional<EdgeId>   find_edge(std::string_view id) const;

    Edge const& edge(EdgeId e) const {
      return edges_.at(e);
    }
    std::vector<Edge> const& edges() const noexcept {
      return edges_;
    }
    std::span<EdgeId const> out_edges(VertexId v) const {
      return out_.at(v);
    }
    std::span<EdgeId const> in_edges(VertexId v) const {
      return in_.at(v);
    }

    VertexSet no_vertices() const {
      return VertexSet(num_vertices());
    }
    VertexSet all_vertices() const {
      return VertexSet::full(num_vertices());
    }

    // Parses a whitespace separated symbol sequence ("0 1 1"); single
    // character alphabets also accept the run-together form "011".
    Word parse_word(std::string_view text) const;
    std::string format_word(Word const& w, std::string_view separator = " ") const;
    std::string format_set(VertexSet const& s) const;

    bool operator==(LabelledGraph const&) const = default;

   private:
    std::vector<std::string>          vertex_names_;
    std::vector<std::string>          alphabet_;
    std::vector<Edge>                 edges_;
    std::vector<std::vector<EdgeId>>  out_;
    std::vector<std::vector<EdgeId>>  in_;
  };

  // A path in a graph: a (possibly empty) edge sequence anchored at the
  // source vertex.
  struct Path {
    VertexId            start;
    std::vector<EdgeId> edges;

    std::size_t length() const noexcept {
      return edges.size();
    }
    VertexId end(LabelledGraph const& g) const {
      return edges.empty() ? start : g.edge(edges.back()).dst;
    }
    Word label(LabelledGraph const& g) const;

    bool operator==(Path const&) const = default;
  };

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  LabelledGraph parse_labelled_graph(std::istream& in, std::vector<std::string>* warnings = nullptr);
  LabelledGraph parse_labelled_graph(std::string_view text, std::vector<std::string>* warnings = nullptr);
  LabelledGraph load_labelled_graph(std::string const& path, std::vector<std::string>* warnings = nullptr);

  std::string emit_labelled_graph(LabelledGraph const& g);

  // Splits a line into whitespace separated tokens, dropping '#' comments.
  std::vector<std::string> tokenize_line(std::string_view line);

  ////////////////////////////////////////////////////////////////////////
  // Structure
  ////////////////////////////////////////////////////////////////////////

  // Relabels each edge by its own id; always left-resolving.
  LabelledGraph trivial_labelling(LabelledGraph const& g);

  struct StructureReport {
    std::vector<VertexId>               sources;
    std::vector<VertexId>               sinks;
    // Canonical: each component sorted, components sorted by first member.
    std::vector<std::vector<VertexId>>  components;
    // Groups of at least two edges with identical (src, dst, label).
    std::vector<std::vector<EdgeId>>    parallel_duplicates;
    bool                                irreducible = false;
    bool                                essential   = false;
  };

  StructureReport structure_report(LabelledGraph const& g);

  // Strongly connected components in canonical order.
  std::vector<std::vector<VertexId>> strongly_connected_components(LabelledGraph const& g);

  // The subgraph on the given vertices and every edge between them.
  LabelledGraph induced_subgraph(LabelledGraph const& g, VertexSet const& keep);

  // Repeatedly deletes vertices that lack an incoming or an outgoing edge.
  LabelledGraph trim_to_essential(LabelledGraph const& g);

  bool is_essential(LabelledGraph const& g);
  bool has_sinks(LabelledGraph const& g);

  // The same graph with every edge reversed.
  LabelledGraph reversed(LabelledGraph const& g);

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism and embedding search
  ////////////////////////////////////////////////////////////////////////

  // vertex_map[v] and edge_map[e] give the image of v and e.
  struct GraphMorphism {
    std::vector<VertexId> vertex_map;
    std::vector<EdgeId>   edge_map;
  };

  inline constexpr std::size_t default_search_vertex_limit = 64;

  std::optional<GraphMorphism> labelled_graph_isomorphic(LabelledGraph const& g1,
                                                         LabelledGraph const& g2,
                                                         std::size_t vertex_limit = default_search_vertex_limit);

  std::optional<GraphMorphism> find_labelled_embedding(LabelledGraph const& sub,
                                                       LabelledGraph const& host,
                                                       std::size_t vertex_limit = default_search_vertex_limit);

}  // namespace lspace
