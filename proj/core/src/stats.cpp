#include "pythtree/stats.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iterator>

#include <fmt/format.h>

#include "pythtree/error.hpp"

namespace pythtree {

std::string write_stats_csv(const StatsSeries& series, StatsCsvOptions options) {
  std::string out = "iteration,collisions,max_b,min_b,wall_ms\n";
  for (const auto& s : series) {
    // fmt's "{}" for double is the shortest representation that round-trips.
    fmt::format_to(std::back_inserter(out), "{},{},{},{},{:.3f}\n", s.iteration, s.collisions,
                   s.max_b, s.min_b, options.include_wall_time ? s.wall_time.count() : 0.0);
  }
  return out;
}

namespace {

template <typename T>
T parse_field(std::string_view text, std::size_t line_no) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::kMalformedInput,
                fmt::format("stats line {}: cannot parse '{}'", line_no, text));
  }
  return value;
}

}  // namespace

StatsSeries parse_stats_csv(std::string_view csv) {
  StatsSeries series;
  std::size_t line_no = 0;
  while (!csv.empty()) {
    const auto eol = csv.find('\n');
    std::string_view line = csv.substr(0, eol);
    csv = eol == std::string_view::npos ? std::string_view{} : csv.substr(eol + 1);
    if (++line_no == 1) {
      if (line != "iteration,collisions,max_b,min_b,wall_ms") {
        throw Error(ErrorCode::kMalformedInput, "unexpected stats header");
      }
      continue;
    }
    if (line.empty()) continue;

    std::vector<std::string_view> fields;
    for (;;) {
      const auto comma = line.find(',');
      fields.push_back(line.substr(0, comma));
      if (comma == std::string_view::npos) break;
      line = line.substr(comma + 1);
    }
    if (fields.size() != 5) {
      throw Error(ErrorCode::kMalformedInput, fmt::format("stats line {}: expected 5 fields", line_no));
    }
    IterationStats s;
    s.iteration = parse_field<int>(fields[0], line_no);
    s.collisions = parse_field<std::size_t>(fields[1], line_no);
    s.max_b = parse_field<double>(fields[2], line_no);
    s.min_b = parse_field<double>(fields[3], line_no);
    s.wall_time = std::chrono::duration<double, std::milli>(parse_field<double>(fields[4], line_no));
    series.push_back(s);
  }
  return series;
}

ExponentialFit fit_exponential(const StatsSeries& series) {
  std::vector<double> iterations;
  std::vector<double> counts;
  for (const auto& s : series) {
    iterations.push_back(static_cast<double>(s.iteration));
    counts.push_back(static_cast<double>(s.collisions));
  }
  return fit_exponential(iterations, counts);
}

ExponentialFit fit_exponential(std::span<const double> iterations, std::span<const double> counts) {
  if (iterations.size() != counts.size()) {
    throw Error(ErrorCode::kMalformedInput, "iteration and count lengths differ");
  }
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (!(counts[i] > 0.0)) continue;
    xs.push_back(iterations[i]);
    ys.push_back(std::log(counts[i]));
  }
  if (xs.size() < 3) {
    throw Error(ErrorCode::kInsufficientData,
                fmt::format("{} positive collision rows, need at least 3", xs.size()));
  }

  // A flat series is fit perfectly by a zero slope.
  if (std::all_of(ys.begin(), ys.end(), [&](double y) { return y == ys.front(); })) {
    return {std::exp(ys.front()), 0.0, 1.0, xs.size()};
  }

  const auto n = static_cast<double>(xs.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= n;
  mean_y /= n;

  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  const double slope = sxx > 0.0 ? sxy / sxx : 0.0;
  const double intercept = mean_y - slope * mean_x;

  double ss_res = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (intercept + slope * xs[i]);
    ss_res += r * r;
  }
  const double r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;

  return {std::exp(intercept), -slope, r_squared, xs.size()};
}

}  // namespace pythtree
