#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "tropbound/catalog.hpp"
#include "tropbound/render.hpp"
#include "tropbound/tropical.hpp"

using namespace tropbound;

namespace {

std::vector<TropicalSolution> solutions_of(const NumericalData &data) {
  CountOptions opts;
  opts.collect_solutions = true;
  opts.recheck = false;
  return solve_invariant(data, 1, opts).solutions;
}

std::size_t count(const std::string &text, const std::string &needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + 1))
    ++n;
  return n;
}

std::filesystem::path scratch(const std::string &name) {
  auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  return dir;
}

} // namespace

TEST_CASE("three-leg curve drawing") {
  const auto sols = solutions_of(catalog::maximal_contact(2, 1));
  REQUIRE(sols.size() == 1);
  const auto svg = svg_document(sols[0]);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count(svg, "class=\"leg\"") == 3);
  CHECK(count(svg, "class=\"bounded\"") == 0);
  CHECK(count(svg, "<g class=\"point\">") == 2);
  CHECK(svg.find("multiplicity 1") != std::string::npos);
}

TEST_CASE("weighted edges are drawn thicker") {
  const auto light = svg_document(solutions_of(catalog::maximal_contact(2, 1))[0]);
  const auto heavy = svg_document(solutions_of(catalog::maximal_contact(2, 3))[0]);
  CHECK(count(light, "data-weight=\"1\"") == 3);
  CHECK(count(light, "stroke-width=\"2.0000\"") == 3);
  CHECK(count(heavy, "data-weight=\"3\"") == 3);
  CHECK(count(heavy, "stroke-width=\"6.0000\"") == 3);
}

TEST_CASE("bounded edges and coordinates stay inside the canvas") {
  const auto sols = solutions_of(catalog::split_tangency(2));
  REQUIRE_FALSE(sols.empty());
  const std::regex coord("[xy][12]=\"(-?[0-9.]+)\"");
  for (const auto &s : sols) {
    const auto svg = svg_document(s);
    CHECK(count(svg, "class=\"leg\"") == 4);
    CHECK(count(svg, "class=\"bounded\"") == 1);
    CHECK(count(svg, "<g class=\"point\">") == 3);
    for (std::sregex_iterator it(svg.begin(), svg.end(), coord), end;
         it != end; ++it) {
      const double v = std::stod((*it)[1].str());
      CHECK(v >= -10.0);
      CHECK(v <= 610.0);
    }
  }
}

TEST_CASE("rendering is deterministic") {
  const auto a = solutions_of(catalog::split_tangency(2));
  const auto b = solutions_of(catalog::split_tangency(2));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(svg_document(a[i]) == svg_document(b[i]));
}

TEST_CASE("render_all writes one file per solution") {
  const auto dir = scratch("tropbound_render_test");
  const auto sols = solutions_of(catalog::split_tangency(2));
  const auto paths = render_all(sols, dir);
  REQUIRE(paths.size() == sols.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    CHECK(paths[i].filename() == "curve_" + std::to_string(i) + ".svg");
    std::ifstream in(paths[i]);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str() == svg_document(sols[i]));
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("empty solution lists write nothing") {
  const auto dir = scratch("tropbound_render_empty");
  CHECK(render_all({}, dir).empty());
  CHECK_FALSE(std::filesystem::exists(dir));
}

TEST_CASE("unwritable destinations throw") {
  const auto sols = solutions_of(catalog::maximal_contact(2, 1));
  CHECK_THROWS_AS(render_svg(sols[0], "/nonexistent/dir/curve.svg"),
                  std::runtime_error);
}
