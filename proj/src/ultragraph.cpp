#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "lspace/covers.hpp"
#include "lspace/error.hpp"
#include "lspace/labelled_space.hpp"

namespace lspace {

  UltragraphSpec canonical_ultragraph(UltragraphSpec u) {
    std::sort(u.vertices.begin(), u.vertices.end());
    if (auto it = std::adjacent_find(u.vertices.begin(), u.vertices.end()); it != u.vertices.end()) {
      throw Error("duplicate vertex id '" + *it + "'");
    }
    auto known = [&u](std::string const& v) { return std::binary_search(u.vertices.begin(), u.vertices.end(), v); };
    for (auto& e : u.edges) {
      std::sort(e.range.begin(), e.range.end());
      e.range.erase(std::unique(e.range.begin(), e.range.end()), e.range.end());
      if (e.range.empty()) {
        throw Error("ultra-edge '" + e.id + "' has an empty range");
      }
      if (!known(e.source)) {
        throw Error("ultra-edge '" + e.id + "' has dangling source '" + e.source + "'");
      }
      for (auto const& w : e.range) {
        if (!known(w)) {
          throw Error("ultra-edge '" + e.id + "' has dangling range vertex '" + w + "'");
        }
      }
    }
    std::sort(u.edges.begin(), u.edges.end(), [](auto const& x, auto const& y) { return x.id < y.id; });
    for (std::size_t i = 1; i < u.edges.size(); ++i) {
      if (u.edges[i].id == u.edges[i - 1].id) {
        throw Error("duplicate ultra-edge id '" + u.edges[i].id + "'");
      }
    }
    return u;
  }

  UltragraphSpec parse_ultragraph(std::istream& in) {
    UltragraphSpec u;
    std::string    line;
    std::size_t    lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::string spaced;
      for (char c : line) {
        if (c == '{' || c == '}') {
          spaced += std::string(" ") + c + " ";
        } else {
          spaced += c;
        }
      }
      auto tok = tokenize_line(spaced);
      if (tok.empty()) {
        continue;
      }
      if (tok[0] == "format") {
        if (tok.size() != 2 || tok[1] != "1") {
          throw ParseError(lineno, "unsupported format header (expected 'format 1')");
        }
      } else if (tok[0] == "uvertex") {
        if (tok.size() != 2) {
          throw ParseError(lineno, "expected 'uvertex <id>'");
        }
        u.vertices.push_back(tok[1]);
      } else if (tok[0] == "uedge") {
        if (tok.size() < 6 || tok[3] != "{" || tok.back() != "}") {
          throw ParseError(lineno, "expected 'uedge <id> <src> { <v> ... }'");
        }
        UltraEdge e{tok[1], tok[2], {tok.begin() + 4, tok.end() - 1}};
        u.edges.push_back(std::move(e));
      } else {
        throw ParseError(lineno, "unknown declaration '" + tok[0] + "'");
      }
    }
    try {
      return canonical_ultragraph(std::move(u));
    } catch (Error const& e) {
      throw ParseError(0, e.what());
    }
  }

  UltragraphSpec parse_ultragraph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_ultragraph(in);
  }

  UltragraphSpec load_ultragraph(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open '" + path + "'");
    }
    return parse_ultragraph(in);
  }

  std::string emit_ultragraph(UltragraphSpec const& u) {
    std::ostringstream out;
    out << "format 1\n";
    for (auto const& v : u.vertices) {
      out << "uvertex " << v << '\n';
    }
    for (auto const& e : u.edges) {
      out << "uedge " << e.id << ' ' << e.source << " {";
      for (auto const& w : e.range) {
        out << ' ' << w;
      }
      out << " }\n";
    }
    return out.str();
  }

  LabelledGraph ultragraph_to_labelled(UltragraphSpec const& u_in) {
    UltragraphSpec const u = canonical_ultragraph(u_in);
    std::vector<EdgeSpec> edges;
    for (auto const& e : u.edges) {
      for (auto const& w : e.range) {
        edges.push_back({e.id + ":" + w, e.source, w, e.id});
      }
    }
    return LabelledGraph::build(u.vertices, edges);
  }

  UltragraphSpec labelled_to_ultragraph(LabelledGraph const& g) {
    if (!is_left_resolving(g)) {
      throw PreconditionError("labelled_to_ultragraph needs a left-resolving graph");
    }
    UltragraphSpec u;
    u.vertices = g.vertex_names();
    for (SymbolId a = 0; a < g.alphabet_size(); ++a) {
      std::set<VertexId> sources, ranges;
      for (auto const& e : g.edges()) {
        if (e.label == a) {
          sources.insert(e.src);
          ranges.insert(e.dst);
        }
      }
      if (sources.size() != 1) {
        throw PreconditionError("symbol '" + g.symbol(a) + "' is emitted by " + std::to_string(sources.size())
                                + " vertices; the source map must be single-valued");
      }
      UltraEdge e{g.symbol(a), g.vertex_name(*sources.begin()), {}};
      for (VertexId w : ranges) {
        e.range.push_back(g.vertex_name(w));
      }
      u.edges.push_back(std::move(e));
    }
    return canonical_ultragraph(std::move(u));
  }

}  // namespace lspace
