#include <cctype>

#include "lspace/algebra.hpp"
#include "lspace/error.hpp"

namespace lspace {

  namespace {
    enum class FactorKind { s, s_star, p };

    struct Factor {
      FactorKind kind;
      Word       word;
      VertexSet  set;
    };

    class ElementParser {
     public:
      ElementParser(Algebra const& alg, std::string_view text) : alg_(alg), text_(text) {}

      Element parse() {
        skip_space();
        if (rest() == "0") {
          return Element();
        }
        Element out;
        bool    negative = eat('-');
        for (;;) {
          skip_space();
          Element t = term();
          out += negative ? -t : t;
          skip_space();
          if (at_end()) {
            return out;
          }
          if (eat('+')) {
            negative = false;
          } else if (eat('-')) {
            negative = true;
          } else {
            fail("expected '+' or '-'");
          }
        }
      }

     private:
      Element term() {
        Rational coeff = 1;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          coeff = rational();
        }
        std::vector<Factor> factors;
        for (;;) {
          skip_space();
          auto f = factor();
          if (!f) {
            break;
          }
          factors.push_back(std::move(*f));
        }
        if (factors.empty()) {
          fail("expected s(...), s*(...) or p{...}");
        }
        return coeff * combine(factors);
      }

      Element combine(std::vector<Factor> const& factors) {
        // Shape s(α) p{A} s*(β) with each part optional.
        std::size_t i = 0;
        Word        alpha, beta;
        std::optional<VertexSet> set;
        if (i < factors.size() && factors[i].kind == FactorKind::s) {
          alpha = factors[i++].word;
        }
        if (i < factors.size() && factors[i].kind == FactorKind::p) {
          set = factors[i++].set;
        }
        if (i < factors.size() && factors[i].kind == FactorKind::s_star) {
          beta = factors[i++].word;
        }
        if (i == factors.size()) {
          if (set && set->empty()) {
            return Element();
          }
          if (!alg_.is_path(alpha) || !alg_.is_path(beta)) {
            fail("word labels no path");
          }
          VertexSet const a = set ? *set : alg_.range(alpha) & alg_.range(beta);
          if (a.empty()) {
            return Element();
          }
          return alg_.monomial(alpha, a, beta);
        }
        std::vector<Element> parts;
        for (auto const& f : factors) {
          switch (f.kind) {
            case FactorKind::s:
              parts.push_back(alg_.s(f.word));
              break;
            case FactorKind::s_star:
              parts.push_back(alg_.s_star(f.word));
              break;
            case FactorKind::p:
              parts.push_back(alg_.p(f.set));
              break;
          }
        }
        return alg_.multiply(parts);
      }

      std::optional<Factor> factor() {
        if (text_.substr(pos_, 3) == "s*(") {
          pos_ += 3;
          return Factor{FactorKind::s_star, word(), {}};
        }
        if (text_.substr(pos_, 2) == "s(") {
          pos_ += 2;
          return Factor{FactorKind::s, word(), {}};
        }
        if (text_.substr(pos_, 2) == "p{") {
          pos_ += 2;
          return Factor{FactorKind::p, {}, vertex_set()};
        }
        return std::nullopt;
      }

      Word word() {
        std::size_t close = text_.find(')', pos_);
        if (close == std::string_view::npos) {
          fail("missing ')'");
        }
        std::string_view inside = text_.substr(pos_, close - pos_);
        pos_                    = close + 1;
        Word w;
        try {
          w = alg_.graph().parse_word(inside);
        } catch (Error const& e) {
          fail(e.what());
        }
        if (w.empty()) {
          fail("empty word");
        }
        return w;
      }

      VertexSet vertex_set() {
        std::size_t close = text_.find('}', pos_);
        if (close == std::string_view::npos) {
          fail("missing '}'");
        }
        std::string inside(text_.substr(pos_, close - pos_));
        pos_ = close + 1;
        for (char& c : inside) {
          if (c == ',') {
            c = ' ';
          }
        }
        VertexSet out = alg_.graph().no_vertices();
        for (auto const& name : tokenize_line(inside)) {
          auto v = alg_.graph().find_vertex(name);
          if (!v) {
            fail("unknown vertex '" + name + "'");
          }
          out.insert(*v);
        }
        return out;
      }

      Rational rational() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) {
          ++pos_;
        }
        try {
          Rational r(std::string(text_.substr(start, pos_ - start)));
          return r;
        } catch (std::exception const&) {
          fail("bad coefficient");
        }
      }

      void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }
      bool eat(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
          ++pos_;
          return true;
        }
        return false;
      }
      bool at_end() const {
        return pos_ >= text_.size();
      }
      std::string_view rest() const {
        std::string_view r = text_.substr(pos_);
        while (!r.empty() && std::isspace(static_cast<unsigned char>(r.back()))) {
          r.remove_suffix(1);
        }
        return r;
      }
      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError(0, "element literal, column " + std::to_string(pos_ + 1) + ": " + what);
      }

      Algebra const&   alg_;
      std::string_view text_;
      std::size_t      pos_ = 0;
    };

    std::string word_text(LabelledGraph const& g, Word const& w) {
      bool compact = true;
      for (auto const& a : g.alphabet()) {
        compact = compact && a.size() == 1;
      }
      return g.format_word(w, compact ? "" : " ");
    }
  }  // namespace

  Element parse_element(Algebra const& alg, std::string_view text) {
    return ElementParser(alg, text).parse();
  }

  std::string format_monomial(Algebra const& alg, Monomial const& m) {
    auto const& g = alg.graph();
    std::string out;
    if (!m.alpha.empty()) {
      out += "s(" + word_text(g, m.alpha) + ")";
    }
    out += "p{";
    bool first = true;
    m.set.for_each([&](VertexId v) {
      out += (first ? "" : ",") + g.vertex_name(v);
      first = false;
    });
    out += "}";
    if (!m.beta.empty()) {
      out += "s*(" + word_text(g, m.beta) + ")";
    }
    return out;
  }

  std::string format_element(Algebra const& alg, Element const& x) {
    if (x.is_zero()) {
      return "0";
    }
    std::string out;
    bool        first = true;
    for (auto const& [m, c] : x.terms()) {
      bool const     negative = c < 0;
      Rational const mag      = negative ? Rational(-c) : c;
      if (first) {
        out += negative ? "-" : "";
      } else {
        out += negative ? " - " : " + ";
      }
      if (mag != 1) {
        out += mag.str() + " ";
      }
      out += format_monomial(alg, m);
      first = false;
    }
    return out;
  }

}  // namespace lspace
