#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "lspace/error.hpp"
#include "lspace/shift.hpp"

namespace lspace {

  namespace {
    // Splits "(0 0)*" into "(", "0", "0", ")", "*".
    std::vector<std::string> pattern_tokens(std::string_view line) {
      std::string spaced;
      for (char c : line) {
        if (c == '(' || c == ')' || c == '*') {
          spaced += ' ';
          spaced += c;
          spaced += ' ';
        } else {
          spaced += c;
        }
      }
      return tokenize_line(spaced);
    }

    Pattern parse_items(std::vector<std::string> const& tok, std::size_t begin, std::size_t lineno) {
      Pattern p;
      for (std::size_t i = begin; i < tok.size(); ++i) {
        if (tok[i] == ")" || tok[i] == "*") {
          throw ParseError(lineno, "unexpected '" + tok[i] + "'");
        }
        if (tok[i] != "(") {
          if (p.items.empty() || p.items.back().starred) {
            p.items.push_back({});
          }
          p.items.back().symbols.push_back(tok[i]);
          continue;
        }
        PatternItem group{{}, true};
        ++i;
        while (i < tok.size() && tok[i] != ")") {
          if (tok[i] == "(" || tok[i] == "*") {
            throw ParseError(lineno, "only literal symbols may appear inside a group");
          }
          group.symbols.push_back(tok[i++]);
        }
        if (i == tok.size()) {
          throw ParseError(lineno, "unclosed '('");
        }
        if (i + 1 == tok.size() || tok[i + 1] != "*") {
          throw ParseError(lineno, "a group must be followed by '*'");
        }
        ++i;
        if (group.symbols.empty()) {
          throw ParseError(lineno, "empty group");
        }
        p.items.push_back(std::move(group));
      }
      return p;
    }
  }  // namespace

  PatternSet parse_patterns(std::istream& in) {
    PatternSet  set;
    bool        saw_alphabet = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto tok = pattern_tokens(line);
      if (tok.empty()) {
        continue;
      }
      if (tok[0] == "format") {
        if (tok.size() != 2 || tok[1] != "1") {
          throw ParseError(lineno, "unsupported format header (expected 'format 1')");
        }
      } else if (tok[0] == "alphabet") {
        if (saw_alphabet) {
          throw ParseError(lineno, "second alphabet declaration");
        }
        saw_alphabet = true;
        set.alphabet.assign(tok.begin() + 1, tok.end());
        if (set.alphabet.empty()) {
          throw ParseError(lineno, "empty alphabet declaration");
        }
      } else if (tok[0] == "forbid") {
        if (!saw_alphabet) {
          throw ParseError(lineno, "'forbid' before the alphabet declaration");
        }
        Pattern p = parse_items(tok, 1, lineno);
        if (p.items.empty()) {
          throw ParseError(lineno, "empty pattern");
        }
        for (auto const& item : p.items) {
          for (auto const& s : item.symbols) {
            if (std::find(set.alphabet.begin(), set.alphabet.end(), s) == set.alphabet.end()) {
              throw ParseError(lineno, "symbol '" + s + "' is not in the alphabet");
            }
          }
        }
        set.patterns.push_back(std::move(p));
      } else {
        throw ParseError(lineno, "unknown declaration '" + tok[0] + "'");
      }
    }
    if (!saw_alphabet) {
      throw ParseError(0, "missing alphabet declaration");
    }
    return set;
  }

  PatternSet parse_patterns(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_patterns(in);
  }

  PatternSet load_patterns(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open '" + path + "'");
    }
    return parse_patterns(in);
  }

  std::string format_pattern(Pattern const& p) {
    std::string out;
    auto        put = [&out](std::string const& s) {
      if (!out.empty()) {
        out += ' ';
      }
      out += s;
    };
    for (auto const& item : p.items) {
      if (item.starred) {
        std::string group = "(";
        for (std::size_t i = 0; i < item.symbols.size(); ++i) {
          group += (i ? " " : "") + item.symbols[i];
        }
        put(group + ")*");
      } else {
        for (auto const& s : item.symbols) {
          put(s);
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Avoid automaton
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct Nfa {
      std::vector<std::vector<std::pair<std::size_t, std::size_t>>> step;  // (symbol, target)
      std::vector<std::vector<std::size_t>>                         eps;
      std::vector<bool>                                             accept;

      std::size_t add_state() {
        step.emplace_back();
        eps.emplace_back();
        accept.push_back(false);
        return accept.size() - 1;
      }
    };

    std::size_t symbol_index(std::vector<std::string> const& alphabet, std::string const& s) {
      auto it = std::lower_bound(alphabet.begin(), alphabet.end(), s);
      if (it == alphabet.end() || *it != s) {
        throw PreconditionError("pattern symbol '" + s + "' is not in the alphabet");
      }
      return static_cast<std::size_t>(it - alphabet.begin());
    }

    // State 0 is the shared start; every pattern hangs off it.
    Nfa compile(std::vector<std::string> const& alphabet, std::vector<Pattern> const& patterns) {
      Nfa nfa;
      nfa.add_state();
      for (auto const& p : patterns) {
        bool has_literal = false;
        std::size_t cur  = nfa.add_state();
        nfa.eps[0].push_back(cur);
        for (auto const& item : p.items) {
          if (item.symbols.empty()) {
            throw PreconditionError("empty pattern item");
          }
          if (!item.starred) {
            has_literal = true;
            for (auto const& s : item.symbols) {
              std::size_t const next = nfa.add_state();
              nfa.step[cur].emplace_back(symbol_index(alphabet, s), next);
              cur = next;
            }
            continue;
          }
          std::size_t const loop = nfa.add_state();
          nfa.eps[cur].push_back(loop);
          std::size_t at = loop;
          for (std::size_t i = 0; i < item.symbols.size(); ++i) {
            std::size_t const next = i + 1 == item.symbols.size() ? loop : nfa.add_state();
            nfa.step[at].emplace_back(symbol_index(alphabet, item.symbols[i]), next);
            at = next;
          }
          cur = loop;
        }
        if (!has_literal) {
          throw PreconditionError("pattern '" + format_pattern(p) + "' matches the empty word");
        }
        nfa.accept[cur] = true;
      }
      return nfa;
    }

    std::vector<std::size_t> closure(Nfa const& nfa, std::vector<std::size_t> states) {
      std::set<std::size_t>    seen(states.begin(), states.end());
      std::vector<std::size_t> work = states;
      while (!work.empty()) {
        std::size_t q = work.back();
        work.pop_back();
        for (std::size_t r : nfa.eps[q]) {
          if (seen.insert(r).second) {
            work.push_back(r);
          }
        }
      }
      return {seen.begin(), seen.end()};
    }
  }  // namespace

  LabelledGraph presentation_from_forbidden(std::vector<std::string> const& alphabet_in,
                                            std::vector<Pattern> const&     patterns) {
    std::vector<std::string> alphabet = alphabet_in;
    std::sort(alphabet.begin(), alphabet.end());
    if (alphabet.empty()) {
      throw PreconditionError("empty alphabet");
    }
    if (std::adjacent_find(alphabet.begin(), alphabet.end()) != alphabet.end()) {
      throw PreconditionError("repeated alphabet symbol");
    }
    Nfa const nfa = compile(alphabet, patterns);

    auto matched = [&nfa](std::vector<std::size_t> const& s) {
      return std::any_of(s.begin(), s.end(), [&nfa](std::size_t q) { return nfa.accept[q]; });
    };

    // Subset construction; the start state is re-entered at every position
    // so that a match may begin anywhere. Matched subsets are never created.
    std::map<std::vector<std::size_t>, std::size_t>         index;
    std::vector<std::vector<std::size_t>>                   subsets;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> moves;  // (symbol, target)
    auto const start = closure(nfa, {0});
    index[start]     = 0;
    subsets.push_back(start);
    moves.emplace_back();
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      for (std::size_t a = 0; a < alphabet.size(); ++a) {
        std::vector<std::size_t> next{0};
        for (std::size_t q : subsets[i]) {
          for (auto [sym, r] : nfa.step[q]) {
            if (sym == a) {
              next.push_back(r);
            }
          }
        }
        next = closure(nfa, std::move(next));
        if (matched(next)) {
          continue;
        }
        auto [it, fresh] = index.emplace(next, subsets.size());
        if (fresh) {
          subsets.push_back(std::move(next));
          moves.emplace_back();
        }
        moves[i].emplace_back(a, it->second);
      }
    }

    // Greatest fixpoint: drop states from which every continuation
    // eventually completes a pattern, i.e. with no infinite future.
    std::vector<bool> live(subsets.size(), true);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i < subsets.size(); ++i) {
        if (live[i] && std::none_of(moves[i].begin(), moves[i].end(), [&](auto const& m) {
              return live[m.second];
            })) {
          live[i] = false;
          changed = true;
        }
      }
    }

    std::vector<std::string> names;
    std::vector<EdgeSpec>    edges;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      if (!live[i]) {
        continue;
      }
      names.push_back("q" + std::to_string(i));
      for (auto [a, j] : moves[i]) {
        if (live[j]) {
          edges.push_back({"e" + std::to_string(edges.size()), names.back(), "q" + std::to_string(j), alphabet[a]});
        }
      }
    }
    LabelledGraph g = trim_to_essential(LabelledGraph::build(names, edges));
    if (g.num_vertices() == 0) {
      throw EmptyLanguageError("the forbidden patterns exclude every bi-infinite sequence");
    }
    return g;
  }

  LabelledGraph presentation_from_forbidden(PatternSet const& set) {
    return presentation_from_forbidden(set.alphabet, set.patterns);
  }

}  // namespace lspace
