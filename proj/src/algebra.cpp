#include "lspace/algebra.hpp"

#include <algorithm>

#include "lspace/error.hpp"

namespace lspace {

  namespace {
    constexpr std::size_t term_limit = 4'000'000;
  }

  Element::Element(Monomial m, Rational c) {
    add(m, c);
  }

  void Element::add(Monomial const& m, Rational const& c) {
    if (c == 0) {
      return;
    }
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) {
        terms_.erase(it);
      }
    }
  }

  Element& Element::operator+=(Element const& other) {
    for (auto const& [m, c] : other.terms_) {
      add(m, c);
    }
    return *this;
  }

  Element& Element::operator-=(Element const& other) {
    for (auto const& [m, c] : other.terms_) {
      add(m, -c);
    }
    return *this;
  }

  Element& Element::operator*=(Rational const& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [m, coeff] : terms_) {
        coeff *= c;
      }
    }
    return *this;
  }

  std::optional<long> degree(Element const& x) {
    std::optional<long> d;
    for (auto const& [m, c] : x.terms()) {
      long const here = static_cast<long>(m.alpha.size()) - static_cast<long>(m.beta.size());
      if (d && *d != here) {
        return std::nullopt;
      }
      d = here;
    }
    return d.value_or(0);
  }

  Element adjoint(Element const& x) {
    Element out;
    for (auto const& [m, c] : x.terms()) {
      out.add(Monomial{m.beta, m.set, m.alpha}, c);
    }
    return out;
  }

  std::string to_string(Verdict v) {
    switch (v) {
      case Verdict::equal:
        return "equal";
      case Verdict::different:
        return "different";
      case Verdict::indeterminate:
        return "indeterminate";
    }
    return "indeterminate";
  }

  Algebra::Algebra(LabelledSpace space, std::size_t max_depth)
      : space_(std::move(space)), max_depth_(max_depth) {
    auto const& g    = space_.graph();
    auto const& sets = space_.family().sets();
    weakly_left_resolving_ = !weak_resolution_violation(space_.monoid(), sets).has_value();

    std::map<std::vector<bool>, VertexSet> by_membership;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      std::vector<bool> sig;
      bool              covered = false;
      for (auto const& a : sets) {
        sig.push_back(a.contains(v));
        covered = covered || sig.back();
      }
      if (covered) {
        by_membership.try_emplace(sig, g.num_vertices()).first->second.insert(v);
      }
    }
    for (auto& [sig, atom] : by_membership) {
      atoms_.push_back(std::move(atom));
    }
    std::sort(atoms_.begin(), atoms_.end());

    sinks_ = g.no_vertices();
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (g.out_edges(v).empty()) {
        sinks_.insert(v);
      }
    }
  }

  VertexSet Algebra::range(Word const& alpha) const {
    if (alpha.empty()) {
      return graph().all_vertices();
    }
    auto i = space_.monoid().of_word(alpha);
    return i ? space_.monoid().element(*i).range() : graph().no_vertices();
  }

  VertexSet Algebra::relative_range(VertexSet const& a, Word const& alpha) const {
    if (alpha.empty()) {
      return a;
    }
    auto i = space_.monoid().of_word(alpha);
    return i ? space_.monoid().element(*i).image(a) : graph().no_vertices();
  }

  bool Algebra::is_path(Word const& alpha) const {
    return alpha.empty() || space_.monoid().of_word(alpha).has_value();
  }

  bool Algebra::normalize(Monomial& m) const {
    m.set &= range(m.alpha);
    m.set &= range(m.beta);
    return !m.set.empty();
  }

  Element Algebra::monomial(Word const& alpha, VertexSet const& a, Word const& beta) const {
    for (Word const* w : {&alpha, &beta}) {
      for (SymbolId s : *w) {
        if (s >= graph().alphabet_size()) {
          throw PreconditionError("symbol index " + std::to_string(s) + " is outside the alphabet");
        }
      }
      if (!is_path(*w)) {
        throw PreconditionError("word '" + graph().format_word(*w) + "' labels no path");
      }
    }
    if (a.universe() != graph().num_vertices() || !space_.family().contains(a)) {
      throw PreconditionError("set " + graph().format_set(a) + " is not in the family");
    }
    Monomial m{alpha, a, beta};
    return normalize(m) ? Element(std::move(m)) : Element();
  }

  Element Algebra::s(Word const& alpha) const {
    if (alpha.empty()) {
      throw PreconditionError("s needs a non-empty word");
    }
    return monomial(alpha, range(alpha), Word{});
  }

  Element Algebra::s_star(Word const& beta) const {
    return adjoint(s(beta));
  }

  Element Algebra::p(VertexSet const& a) const {
    if (a.universe() == graph().num_vertices() && a.empty()) {
      return Element();
    }
    return monomial(Word{}, a, Word{});
  }

  std::optional<Monomial> Algebra::times(Monomial const& x, Monomial const& y) const {
    Monomial out;
    if (y.alpha.starts_with(x.beta)) {
      Word const rest = y.alpha.drop(x.beta.size());
      out             = Monomial{x.alpha + rest, relative_range(x.set, rest) & y.set, y.beta};
    } else if (x.beta.starts_with(y.alpha)) {
      Word const rest = x.beta.drop(y.alpha.size());
      out             = Monomial{x.alpha, x.set & relative_range(y.set, rest), y.beta + rest};
    } else {
      return std::nullopt;
    }
    if (!normalize(out)) {
      return std::nullopt;
    }
    return out;
  }

  Element Algebra::multiply(Element const& x, Element const& y) const {
    if (!weakly_left_resolving_) {
      throw PreconditionError("products degenerate on a space that is not weakly left-resolving");
    }
    Element out;
    for (auto const& [m, c] : x.terms()) {
      for (auto const& [n, d] : y.terms()) {
        if (auto t = times(m, n)) {
          out.add(*t, c * d);
        }
      }
    }
    return out;
  }

  Element Algebra::multiply(std::vector<Element> const& factors) const {
    if (factors.empty()) {
      throw PreconditionError("empty product");
    }
    Element out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) {
      out = multiply(out, factors[i]);
    }
    return out;
  }

  void Algebra::require_depth(std::size_t k) const {
    if (k > max_depth_) {
      throw LimitError("depth " + std::to_string(k) + " exceeds the maximum " + std::to_string(max_depth_));
    }
  }

  Expansion Algebra::expand_to_depth(Element const& x, std::size_t k) const {
    require_depth(k);
    Expansion                                 out;
    std::vector<std::pair<Monomial, Rational>> work(x.terms().begin(), x.terms().end());
    while (!work.empty()) {
      auto [m, c] = std::move(work.back());
      work.pop_back();
      if (std::min(m.alpha.size(), m.beta.size()) >= k) {
        out.value.add(m, c);
        continue;
      }
      if (m.set.intersects(sinks_)) {
        ++out.unexpanded;
        out.value.add(m, c);
        continue;
      }
      for (SymbolId a = 0; a < graph().alphabet_size(); ++a) {
        VertexSet next = relative_range(m.set, Word{a});
        if (!next.empty()) {
          work.emplace_back(Monomial{m.alpha + Word{a}, std::move(next), m.beta + Word{a}}, c);
        }
      }
      if (work.size() + out.value.size() > term_limit) {
        throw LimitError("expansion exceeds " + std::to_string(term_limit) + " terms");
      }
    }
    return out;
  }

  Element Algebra::atomic(Element const& x) const {
    Element out;
    for (auto const& [m, c] : x.terms()) {
      VertexSet covered = graph().no_vertices();
      for (auto const& atom : atoms_) {
        if (atom.is_subset_of(m.set)) {
          out.add(Monomial{m.alpha, atom, m.beta}, c);
          covered |= atom;
        }
      }
      if (covered != m.set) {
        throw InternalError("set " + graph().format_set(m.set) + " is not a union of atoms");
      }
    }
    return out;
  }

  Verdict Algebra::compare_at_depth(Element const& x, Element const& y, std::size_t k) const {
    require_depth(k);
    Element const diff = x - y;
    if (diff.is_zero()) {
      return Verdict::equal;
    }
    // Every term ends up with min(|α|,|β|) exactly at the common depth, where
    // the atomic triples form a basis.
    std::size_t depth = k;
    for (auto const& [m, c] : diff.terms()) {
      depth = std::max(depth, std::min(m.alpha.size(), m.beta.size()));
    }
    Expansion const e = expand_to_depth(diff, depth);
    if (atomic(e.value).is_zero()) {
      return Verdict::equal;
    }
    return e.unexpanded > 0 ? Verdict::indeterminate : Verdict::different;
  }

  bool Algebra::equal_at_depth(Element const& x, Element const& y, std::size_t k) const {
    Verdict const v = compare_at_depth(x, y, k);
    if (v == Verdict::indeterminate) {
      throw PreconditionError("comparison is indeterminate: a set containing a sink cannot be expanded");
    }
    return v == Verdict::equal;
  }

}  // namespace lspace
