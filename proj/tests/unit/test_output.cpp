#include <doctest.h>

#include <cmath>
#include <regex>

#include "pythtree/bench.hpp"
#include "pythtree/error.hpp"
#include "pythtree/generators.hpp"
#include "pythtree/render.hpp"
#include "pythtree/stats.hpp"

using namespace pythtree;
using doctest::Approx;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::size_t line_count(const std::string& text) { return count_of(text, "\n"); }

}  // namespace

TEST_CASE("depth_color interpolates the gradient") {
  RenderConfig cfg;
  CHECK(depth_color(0, 7, cfg) == cfg.color_start);
  CHECK(depth_color(7, 7, cfg) == cfg.color_end);
  cfg.color_start = {0, 0, 0};
  cfg.color_end = {200, 100, 50};
  CHECK(depth_color(3, 6, cfg) == Rgb{100, 50, 25});
  CHECK(depth_color(0, 0, cfg) == Rgb{0, 0, 0});
  CHECK(depth_color(1, 3, cfg) == Rgb{67, 33, 17});  // 66.67, 33.33, 16.67 rounded
}

TEST_CASE("svg of a single unit square") {
  const auto h = generators::complete_tree(2, 0);
  const auto layout = initial_layout(h, {});
  const std::string svg = render_svg(layout, h, {.padding = 0.25});
  CHECK(svg.find("viewBox=\"-0.250000 -0.250000 1.500000 1.500000\"") != std::string::npos);
  CHECK(count_of(svg, "<polygon") == 1);
  CHECK(svg.find("points=\"0.000000,1.000000 1.000000,1.000000 1.000000,0.000000 0.000000,0.000000\"") !=
        std::string::npos);
}

TEST_CASE("svg draws ancestors first and flips y") {
  const auto h = generators::complete_tree(2, 1);
  const auto layout = initial_layout(h, {});
  const RenderConfig cfg;
  const std::string svg = render_svg(layout, h, cfg);
  CHECK(count_of(svg, "<polygon") == 3);
  const auto root_fill = svg.find("fill=\"#08306b\"");
  const auto child_fill = svg.find("fill=\"#c6dbef\"");
  REQUIRE(root_fill != std::string::npos);
  REQUIRE(child_fill != std::string::npos);
  CHECK(root_fill < child_fill);
  // The tree spans y in [0, 2]; the root's bottom edge maps to y = 2.
  CHECK(svg.find("viewBox=\"-0.550000 -0.050000 2.100000 2.100000\"") != std::string::npos);
  CHECK(svg.find("points=\"0.000000,2.000000 1.000000,2.000000 1.000000,1.000000 0.000000,1.000000\"") !=
        std::string::npos);
  CHECK(svg.find("-0.000000") == std::string::npos);
}

TEST_CASE("svg rendering is byte-identical across runs and has one polygon per node") {
  const auto h = generators::random_tree(1000, 4);
  const auto r1 = solve(h, {}, {});
  const auto r2 = solve(h, {}, {});
  RenderConfig cfg{.stroke_width = 0.001, .background = Rgb{255, 255, 255}};
  const std::string a = render_svg(r1.layout, h, cfg);
  CHECK(a == render_svg(r2.layout, h, cfg));
  CHECK(count_of(a, "<polygon") == h.size());
  // Every coordinate uses exactly six decimals.
  const std::regex loose_number(R"([-0-9]\.[0-9]{7})");
  CHECK_FALSE(std::regex_search(a, loose_number));
}

TEST_CASE("stats csv layout") {
  const StatsSeries one{{.iteration = 0, .collisions = 0}};
  const auto csv = write_stats_csv(one);
  CHECK(line_count(csv) == 2);
  CHECK(csv == "iteration,collisions,max_b,min_b,wall_ms\n0,0,1,1,0.000\n");

  const StatsSeries three{{0, 12, 1.0, 1.0, {}}, {1, 5, 1.09, 0.91, {}}, {2, 0, 1.1, 0.8, {}}};
  const auto csv3 = write_stats_csv(three);
  CHECK(line_count(csv3) == 4);
  CHECK(csv3.find("\n1,5,1.09,0.91,") != std::string::npos);
  CHECK(csv3.find("\n2,0,") != std::string::npos);
}

TEST_CASE("stats csv round-trips") {
  const auto h = generators::complete_tree(3, 5);
  const auto result = solve(h, {}, {});
  REQUIRE(result.stats.size() > 3);
  for (bool timing : {false, true}) {
    const auto csv = write_stats_csv(result.stats, {.include_wall_time = timing});
    const auto parsed = parse_stats_csv(csv);
    REQUIRE(parsed.size() == result.stats.size());
    for (std::size_t i = 0; i < parsed.size(); ++i) {
      CHECK(parsed[i].iteration == result.stats[i].iteration);
      CHECK(parsed[i].collisions == result.stats[i].collisions);
      CHECK(parsed[i].max_b == result.stats[i].max_b);
      CHECK(parsed[i].min_b == result.stats[i].min_b);
    }
    CHECK(write_stats_csv(parsed, {.include_wall_time = timing}) == csv);
  }
  CHECK_THROWS_AS(parse_stats_csv("it,c\n"), Error);
  CHECK_THROWS_AS(parse_stats_csv("iteration,collisions,max_b,min_b,wall_ms\n1,2,x,1,0\n"), Error);
}

TEST_CASE("exponential fit") {
  std::vector<double> t, c;
  for (int i = 0; i <= 10; ++i) {
    t.push_back(i);
    c.push_back(100.0 * std::exp(-0.5 * i));
  }
  const auto exact = fit_exponential(t, c);
  CHECK(exact.amplitude == Approx(100.0).epsilon(1e-9));
  CHECK(exact.lambda == Approx(0.5).epsilon(1e-9));
  CHECK(exact.r_squared >= 1.0 - 1e-9);

  // Integral counts: powers of two are an exact exponential too.
  StatsSeries pow2;
  for (int i = 0; i <= 10; ++i) {
    pow2.push_back({.iteration = i, .collisions = std::size_t{1} << (20 - i)});
  }
  const auto fit = fit_exponential(pow2);
  CHECK(fit.amplitude == Approx(std::pow(2.0, 20)).epsilon(1e-9));
  CHECK(fit.lambda == Approx(std::log(2.0)).epsilon(1e-9));
  CHECK(fit.r_squared >= 1.0 - 1e-9);
  CHECK(fit.points == 11);

  const StatsSeries flat{{0, 5}, {1, 5}, {2, 5}, {3, 5}};
  const auto flat_fit = fit_exponential(flat);
  CHECK(flat_fit.lambda == 0.0);
  CHECK(flat_fit.r_squared == 1.0);
  CHECK(flat_fit.amplitude == Approx(5.0));

  // Zero rows are dropped before fitting.
  StatsSeries tail = pow2;
  tail.push_back({.iteration = 11, .collisions = 0});
  CHECK(fit_exponential(tail).points == 11);

  const StatsSeries short_series{{0, 10}, {1, 4}, {2, 0}};
  try {
    fit_exponential(short_series);
    FAIL("expected InsufficientData");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInsufficientData);
  }
}

TEST_CASE("noisy decay on a solver run") {
  const auto result = solve(generators::random_tree(1000, 77), {}, {});
  REQUIRE(result.status == SolveStatus::kResolved);
  const auto fit = fit_exponential(result.stats);
  CHECK(fit.lambda > 0.0);
  // Regression values from the first verified build.
  CHECK(result.stats.size() == 59);
  CHECK(fit.r_squared == Approx(0.926581396).epsilon(1e-6));
  CHECK(fit.lambda == Approx(0.0709331068).epsilon(1e-6));
}

TEST_CASE("collision bench") {
  const auto rows = bench_collision({100}, 2);
  REQUIRE(rows.size() == 2);
  for (const auto& r : rows) {
    CHECK(r.n == 100);
    CHECK(r.sets_equal);
  }
  CHECK(bench_collision({}, 3).empty());
  const auto csv = bench_report_csv(rows);
  CHECK(csv.rfind("n,rep,pairs,quadtree_ms,naive_ms,speedup,equal\n", 0) == 0);
  CHECK(line_count(csv) == 3);
  CHECK(bench_report_csv({}) == "n,rep,pairs,quadtree_ms,naive_ms,speedup,equal\n");
}
