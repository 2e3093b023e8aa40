#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "lspace/error.hpp"
#include "lspace/graph.hpp"

namespace lspace {

  std::vector<std::string> tokenize_line(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<std::string> tokens;
    std::size_t              i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) {
        ++j;
      }
      if (j > i) {
        tokens.emplace_back(line.substr(i, j - i));
      }
      i = j;
    }
    return tokens;
  }

  LabelledGraph parse_labelled_graph(std::istream& in, std::vector<std::string>* warnings) {
    std::vector<std::string>           vertices;
    std::map<std::string, std::size_t> vertex_line;
    std::vector<EdgeSpec>              edges;
    std::vector<std::size_t>           edge_line;
    std::vector<std::string>           alphabet;
    bool                               saw_alphabet = false;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto tok = tokenize_line(line);
      if (tok.empty()) {
        continue;
      }
      std::string const& kw = tok[0];
      if (kw == "format") {
        if (tok.size() != 2 || tok[1] != "1") {
          throw ParseError(lineno, "unsupported format header (expected 'format 1')");
        }
      } else if (kw == "alphabet") {
        if (saw_alphabet) {
          throw ParseError(lineno, "second alphabet declaration");
        }
        saw_alphabet = true;
        alphabet.assign(tok.begin() + 1, tok.end());
        if (alphabet.empty()) {
          throw ParseError(lineno, "empty alphabet declaration");
        }
      } else if (kw == "vertex") {
        if (tok.size() != 2) {
          throw ParseError(lineno, "expected 'vertex <id>'");
        }
        if (!vertex_line.emplace(tok[1], lineno).second) {
          throw ParseError(lineno, "duplicate vertex id '" + tok[1] + "'");
        }
        vertices.push_back(tok[1]);
      } else if (kw == "edge") {
        if (tok.size() != 5) {
          throw ParseError(lineno, "expected 'edge <id> <src> <dst> <label>'");
        }
        edges.push_back(EdgeSpec{tok[1], tok[2], tok[3], tok[4]});
        edge_line.push_back(lineno);
      } else {
        throw ParseError(lineno, "unknown declaration '" + kw + "'");
      }
    }

    std::set<std::string> ids;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto const& e = edges[i];
      for (auto const* endpoint : {&e.src, &e.dst}) {
        if (vertex_line.count(*endpoint) == 0) {
          throw ParseError(edge_line[i], "dangling endpoint '" + *endpoint + "' in edge '" + e.id + "'");
        }
      }
      if (!ids.insert(e.id).second) {
        throw ParseError(edge_line[i], "duplicate edge id '" + e.id + "'");
      }
      if (saw_alphabet && std::find(alphabet.begin(), alphabet.end(), e.label) == alphabet.end()) {
        throw ParseError(edge_line[i], "label '" + e.label + "' is not in the declared alphabet");
      }
    }
    return LabelledGraph::build(vertices, edges, alphabet, warnings);
  }

  LabelledGraph parse_labelled_graph(std::string_view text, std::vector<std::string>* warnings) {
    std::istringstream in{std::string(text)};
    return parse_labelled_graph(in, warnings);
  }

  LabelledGraph load_labelled_graph(std::string const& path, std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open '" + path + "'");
    }
    return parse_labelled_graph(in, warnings);
  }

  std::string emit_labelled_graph(LabelledGraph const& g) {
    std::ostringstream out;
    out << "format 1\n";
    if (g.alphabet_size() > 0) {
      out << "alphabet";
      for (auto const& a : g.alphabet()) {
        out << ' ' << a;
      }
      out << '\n';
    }
    for (auto const& v : g.vertex_names()) {
      out << "vertex " << v << '\n';
    }
    for (auto const& e : g.edges()) {
      out << "edge " << e.id << ' ' << g.vertex_name(e.src) << ' ' << g.vertex_name(e.dst) << ' '
          << g.symbol(e.label) << '\n';
    }
    return out.str();
  }

}  // namespace lspace
