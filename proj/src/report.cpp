#include "lspace/report.hpp"

#include <sstream>

namespace lspace {

  void CheckSection::fail(std::string what) {
    ++checked;
    ++failed;
    if (failures.size() < kept_failures) {
      failures.push_back(std::move(what));
    }
  }

  CheckSection& CheckReport::section(std::string const& name) {
    for (auto& s : sections) {
      if (s.name == name) {
        return s;
      }
    }
    sections.emplace_back().name = name;
    return sections.back();
  }

  CheckSection const* CheckReport::find(std::string const& name) const {
    for (auto const& s : sections) {
      if (s.name == name) {
        return &s;
      }
    }
    return nullptr;
  }

  bool CheckReport::passed() const noexcept {
    if (!precondition_failures.empty()) {
      return false;
    }
    for (auto const& s : sections) {
      if (!s.passed()) {
        return false;
      }
    }
    return true;
  }

  std::size_t CheckReport::failure_count() const noexcept {
    std::size_t n = precondition_failures.size();
    for (auto const& s : sections) {
      n += s.failed + s.indeterminate;
    }
    return n;
  }

  void CheckReport::merge(CheckReport const& other) {
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    precondition_failures.insert(precondition_failures.end(), other.precondition_failures.begin(),
                                 other.precondition_failures.end());
    for (auto const& s : other.sections) {
      auto& mine = section(s.name);
      mine.checked += s.checked;
      mine.failed += s.failed;
      mine.indeterminate += s.indeterminate;
      for (auto const& f : s.failures) {
        if (mine.failures.size() < CheckSection::kept_failures) {
          mine.failures.push_back(f);
        }
      }
    }
  }

  std::string to_text(CheckReport const& r) {
    std::ostringstream out;
    if (!r.title.empty()) {
      out << r.title << '\n';
    }
    for (auto const& n : r.notes) {
      out << "note: " << n << '\n';
    }
    for (auto const& p : r.precondition_failures) {
      out << "precondition failed: " << p << '\n';
    }
    for (auto const& s : r.sections) {
      out << (s.passed() ? "PASS " : "FAIL ") << s.name << ": " << s.checked << " checked, " << s.failed
          << " failed";
      if (s.indeterminate > 0) {
        out << ", " << s.indeterminate << " indeterminate";
      }
      out << '\n';
      for (auto const& f : s.failures) {
        out << "  counterexample: " << f << '\n';
      }
    }
    out << (r.passed() ? "result: pass" : "result: fail") << '\n';
    return out.str();
  }

  nlohmann::json to_json(CheckReport const& r) {
    nlohmann::json sections = nlohmann::json::array();
    for (auto const& s : r.sections) {
      sections.push_back({{"name", s.name},
                          {"checked", s.checked},
                          {"failed", s.failed},
                          {"indeterminate", s.indeterminate},
                          {"counterexamples", s.failures},
                          {"passed", s.passed()}});
    }
    return {{"title", r.title},
            {"notes", r.notes},
            {"precondition_failures", r.precondition_failures},
            {"sections", sections},
            {"passed", r.passed()}};
  }

}  // namespace lspace
