#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "common.hpp"
#include "lspace/cli.hpp"

namespace {

  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int const          code = lspace::cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string path(char const* name) {
    return testing::corpus(name);
  }

  // Writes text to a scratch file and returns its path.
  std::string scratch(std::string const& name, std::string const& text) {
    std::string const p = std::string(LSPACE_SCRATCH_DIR) + "/" + name;
    std::ofstream(p) << text;
    return p;
  }

}  // namespace

TEST_CASE("even-shift cover is isomorphic to E2 from the command line") {
  auto const cover = run({"cover", path("even_E1.lg"), "--kind", "krieger"});
  REQUIRE(cover.code == 0);
  auto const file = scratch("cover.lg", cover.out);
  CHECK(run({"iso", file, path("even_E2.lg")}).code == 0);
  CHECK(run({"iso", file, path("even_E1.lg")}).code == 1);
  CHECK(run({"embed", path("even_E1.lg"), path("even_E2.lg")}).code == 0);
  CHECK(run({"embed", path("even_E2.lg"), path("even_E1.lg")}).code == 1);
}

TEST_CASE("verification exit codes") {
  CHECK(run({"verify", path("even_E1.lg"), "--family", "e0-", "--depth", "3", "--suite", "all"}).code == 0);
  CHECK(run({"dual-identities", path("even_E2.lg")}).code == 0);
  CHECK(run({"oracle", path("even_E1.lg"), "--L", "5", "--K", "2"}).code == 0);
  CHECK(run({"element", path("even_E1.lg"), "p{u}", "--equal", "s(1)p{u}s*(1) + s(0)p{v}s*(0)"}).code == 0);
  CHECK(run({"element", path("even_E1.lg"), "p{u}", "--equal", "s(1)p{u}s*(1)"}).code == 1);
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"check", "/nonexistent.lg"}).code == 2);
  CHECK(run({"closure", path("even_E1.lg"), "--family", "e1"}).code == 2);
  CHECK(run({"--format", "xml", "check", path("even_E1.lg")}).code == 2);
  CHECK(run({"language", path("even_E1.lg")}).code == 2);
  CHECK(run({"to-ultragraph", path("even_E2.lg")}).code == 2);
  auto const bad = scratch("bad.lg", "format 1\nvertex u\nedge e u w 0\n");
  auto const r   = run({"check", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
  std::vector<std::vector<std::string>> const invocations{
      {"check", path("even_E3.lg")},
      {"closure", path("even_E2.lg"), "--family", "e0-"},
      {"cover", path("z.pat"), "--kind", "predecessor"},
      {"dual", path("even_E1.lg")},
      {"language", path("even_E1.lg"), "--length", "5"},
      {"--format", "machine", "verify", path("even_E2.lg"), "--depth", "2", "--suite", "axioms"},
      {"from-ultragraph", path("fan.ug")},
  };
  for (auto const& args : invocations) {
    auto const a = run(args);
    auto const b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("machine format is one document with the text data") {
  auto const text    = run({"language", path("even_E1.lg"), "--length", "3"});
  auto const machine = run({"--format", "machine", "language", path("even_E1.lg"), "--length", "3"});
  REQUIRE(machine.code == 0);
  auto const doc = nlohmann::json::parse(machine.out);
  CHECK(doc.is_object());
  std::size_t words = 0;
  std::function<void(nlohmann::json const&)> count = [&](nlohmann::json const& j) {
    if (j.is_array() && !j.empty() && j.front().is_string()) {
      for (auto const& w : j) {
        CHECK(text.out.find(w.get<std::string>()) != std::string::npos);
        ++words;
      }
    } else if (j.is_structured()) {
      for (auto const& x : j) {
        count(x);
      }
    }
  };
  count(doc);
  CHECK(words > 0);

  for (std::vector<std::string> args :
       {std::vector<std::string>{"check", path("even_E1.lg")}, {"cover", path("z.pat")},
        {"verify", path("loop.lg"), "--depth", "2"}, {"iso", path("even_E1.lg"), path("even_E2.lg")}}) {
    args.insert(args.begin(), {"--format", "machine"});
    auto const r = run(args);
    CHECK(nlohmann::json::accept(r.out));
  }
}

TEST_CASE("language files are picked by extension") {
  auto const from_pat = run({"cover", path("z.pat"), "--kind", "krieger"});
  REQUIRE(from_pat.code == 0);
  auto const g = lspace::parse_labelled_graph(from_pat.out);
  CHECK(g == lspace::left_krieger_cover(testing::z_presentation()));
  auto const ug = run({"check", path("fan.ug")});
  CHECK(ug.code == 0);
}
