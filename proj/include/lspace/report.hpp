#pragma once

#include <cstddef>
#include <deque>
#include <string>
#include <vector>

#include <json.hpp>

namespace lspace {

  // One family of checks: how many ran, which failed, and how many could not
  // be decided.
  struct CheckSection {
    static constexpr std::size_t kept_failures = 20;

    std::string              name;
    std::size_t              checked       = 0;
    std::size_t              failed        = 0;
    std::size_t              indeterminate = 0;
    // The first kept_failures counterexamples.
    std::vector<std::string> failures;

    void pass() {
      ++checked;
    }
    void fail(std::string what);
    void undecided() {
      ++checked;
      ++indeterminate;
    }
    void expect(bool ok, std::string const& what) {
      ok ? pass() : fail(what);
    }

    bool passed() const noexcept {
      return failed == 0 && indeterminate == 0;
    }
  };

  struct CheckReport {
    std::string               title;
    std::vector<std::string>  notes;
    std::vector<std::string>  precondition_failures;
    // A deque, so references from section() stay valid.
    std::deque<CheckSection>  sections;

    CheckSection& section(std::string const& name);
    CheckSection const* find(std::string const& name) const;

    bool passed() const noexcept;
    std::size_t failure_count() const noexcept;

    void merge(CheckReport const& other);
  };

  std::string    to_text(CheckReport const& r);
  nlohmann::json to_json(CheckReport const& r);

}  // namespace lspace
