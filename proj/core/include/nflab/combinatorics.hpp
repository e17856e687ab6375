#ifndef NFLAB_COMBINATORICS_HPP
#define NFLAB_COMBINATORICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "nflab/guards.hpp"
#include "nflab/rational.hpp"

namespace nflab {

// C(x+y-1, x): the number of histograms, i.e. of basis classes.
BigInt count_histograms(int x, int y);

// 2^C(x+y-1, x) - 1 non-empty c.u.p. subsets. Throws ExactOverflowGuard
// when the exponent exceeds the bit guard; use the log form instead.
BigInt count_cup_subsets(int x, int y, const Guards& guards = {});

// 2^(y^x) - 1 non-empty subsets altogether.
BigInt count_all_subsets(int x, int y, const Guards& guards = {});

// Oracle: classifies every non-empty subset of the full function space
// with the closure check and counts the closed ones. Requires y^x <= 20.
BigInt brute_force_count_cup(int x, int y, const Guards& guards = {});

struct CountReport {
  int x = 0;
  int y = 0;
  BigInt histogram_count;
  std::optional<BigInt> cup_subsets;   // present below the exact guard
  std::optional<BigInt> all_subsets;
  double fraction_log10 = 0.0;
  std::optional<Rational> fraction_exact;
};

CountReport make_count_report(int x, int y, const Guards& guards = {});

// Rows for x in [x_min, x_max] per codomain size, y-major then x ascending.
std::vector<CountReport> fraction_curve(int x_min, int x_max,
                                        std::vector<int> ys,
                                        const Guards& guards = {});

// Columns: x,y,histogram_count,cup_count,total_count,fraction_log10.
// Counts wider than 128 bits are emitted as "log10:<value>".
std::string curve_csv(const std::vector<CountReport>& rows);

std::string format_log10(double v);  // fixed 9 decimals, deterministic

}  // namespace nflab

#endif
