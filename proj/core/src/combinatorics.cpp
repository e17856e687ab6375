#include "nflab/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "nflab/function_space.hpp"

namespace nflab {

namespace {

void require_sizes(int x, int y) {
  if (x < 1 || y < 1) throw InputError("x and y must be >= 1");
}

BigInt power_of_two_minus_one(const BigInt& exponent, const Guards& guards) {
  if (exponent > guards.max_exact)
    throw ExactOverflowGuard("2^" + exponent.str() +
                             " exceeds the exact bit guard; use the log form");
  BigInt one = 1;
  return (one << static_cast<unsigned>(exponent)) - 1;
}

// log10(2^n - 1); the -1 only matters while 2^-n is representable.
double log10_power_of_two_minus_one(const BigInt& exponent) {
  const double log10_2 = 0.30102999566398119521373889472449;
  double base = static_cast<double>(BigFloat(exponent) * log10_2);
  if (exponent <= 64) {
    const double n = static_cast<double>(exponent);
    base += std::log1p(-std::pow(2.0, -n)) / std::log(10.0);
  }
  return base;
}

}  // namespace

BigInt count_histograms(int x, int y) {
  require_sizes(x, y);
  return binomial(static_cast<unsigned>(x + y - 1), static_cast<unsigned>(x));
}

BigInt count_cup_subsets(int x, int y, const Guards& guards) {
  require_sizes(x, y);
  return power_of_two_minus_one(count_histograms(x, y), guards);
}

BigInt count_all_subsets(int x, int y, const Guards& guards) {
  require_sizes(x, y);
  return power_of_two_minus_one(function_space_size(x, y), guards);
}

BigInt brute_force_count_cup(int x, int y, const Guards& guards) {
  require_sizes(x, y);
  BigInt space = function_space_size(x, y);
  if (space > 20)
    throw GuardExceeded("brute-force subset sweep needs y^x <= 20");
  const int total = static_cast<int>(space);
  FunctionSet all = all_functions(SearchSpace::indexed(x),
                                  CostDomain::integer_range(y), guards);

  BigInt closed = 0;
  const std::uint64_t subsets = std::uint64_t(1) << total;
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    std::vector<std::vector<int>> tables;
    for (int i = 0; i < total; ++i)
      if (mask & (std::uint64_t(1) << i)) tables.push_back(all.tables[i]);
    FunctionSet subset{all.space, all.domain, std::move(tables)};
    if (is_cup(subset, guards).cup) ++closed;
  }
  return closed;
}

CountReport make_count_report(int x, int y, const Guards& guards) {
  require_sizes(x, y);
  CountReport r;
  r.x = x;
  r.y = y;
  r.histogram_count = count_histograms(x, y);
  BigInt space = function_space_size(x, y);
  if (space <= guards.max_exact) {
    r.cup_subsets = count_cup_subsets(x, y, guards);
    r.all_subsets = count_all_subsets(x, y, guards);
    r.fraction_exact = Rational(*r.cup_subsets, *r.all_subsets);
    r.fraction_log10 = log10_bigint(*r.cup_subsets) - log10_bigint(*r.all_subsets);
  } else {
    r.fraction_log10 = log10_power_of_two_minus_one(r.histogram_count) -
                       log10_power_of_two_minus_one(space);
  }
  return r;
}

std::vector<CountReport> fraction_curve(int x_min, int x_max,
                                        std::vector<int> ys,
                                        const Guards& guards) {
  if (x_min < 1 || x_max < x_min) throw InputError("bad x range");
  if (ys.empty()) throw InputError("y list must be non-empty");
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  std::vector<CountReport> rows;
  for (int y : ys)
    for (int x = x_min; x <= x_max; ++x)
      rows.push_back(make_count_report(x, y, guards));
  return rows;
}

std::string format_log10(double v) {
  char buf[64];
  if (!std::isfinite(v)) return v > 0 ? "inf" : "-inf";
  std::snprintf(buf, sizeof(buf), "%.9f", v);
  return buf;
}

namespace {

std::string count_cell(const std::optional<BigInt>& exact, double log10_value) {
  if (exact && boost::multiprecision::msb(*exact + 1) <= 128) return exact->str();
  return "log10:" + format_log10(log10_value);
}

}  // namespace

std::string curve_csv(const std::vector<CountReport>& rows) {
  std::string out = "x,y,histogram_count,cup_count,total_count,fraction_log10\n";
  for (const auto& r : rows) {
    const double cup_log =
        r.cup_subsets ? log10_bigint(*r.cup_subsets)
                      : log10_power_of_two_minus_one(r.histogram_count);
    const double total_log =
        r.all_subsets ? log10_bigint(*r.all_subsets)
                      : log10_power_of_two_minus_one(function_space_size(r.x, r.y));
    out += std::to_string(r.x) + "," + std::to_string(r.y) + "," +
           r.histogram_count.str() + "," + count_cell(r.cup_subsets, cup_log) +
           "," + count_cell(r.all_subsets, total_log) + "," +
           format_log10(r.fraction_log10) + "\n";
  }
  return out;
}

}  // namespace nflab
