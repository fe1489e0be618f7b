#include <bit>
#include <cstdint>

#include "aperiodic/constants.hpp"
#include "aperiodic/error.hpp"
#include "aperiodic/pointset.hpp"

namespace aperiodic {

namespace {

PointSet symmetric(const std::vector<std::int64_t>& positive, std::int64_t n) {
  std::vector<double> points;
  points.reserve(2 * positive.size());
  for (auto it = positive.rbegin(); it != positive.rend(); ++it) {
    points.push_back(-static_cast<double>(*it));
  }
  for (auto m : positive) points.push_back(static_cast<double>(m));
  const auto half = static_cast<double>(n);
  return PointSet(std::move(points), {-half, half});
}

}  // namespace

PointSet squarefree_points(std::int64_t n) {
  if (n < 1) throw InputError("squarefree_points: N must be at least 1");
  std::vector<bool> free(static_cast<std::size_t>(n) + 1, true);
  // Composite p only strike multiples already struck by their prime factors,
  // so sieving every p with p^2 <= n is correct without a primality test.
  for (std::int64_t p = 2; p * p <= n; ++p) {
    const std::int64_t sq = p * p;
    for (std::int64_t m = sq; m <= n; m += sq) free[static_cast<std::size_t>(m)] = false;
  }
  std::vector<std::int64_t> positive;
  for (std::int64_t m = 1; m <= n; ++m) {
    if (free[static_cast<std::size_t>(m)]) positive.push_back(m);
  }
  return symmetric(positive, n);
}

PointSet shifted_halves(std::int64_t n) {
  if (n < 0) throw InputError("shifted_halves: N must be nonnegative");
  std::vector<double> points;
  points.reserve(static_cast<std::size_t>(2 * n + 2));
  for (std::int64_t k = n; k >= 0; --k) points.push_back(-static_cast<double>(k));
  for (std::int64_t k = 0; k <= n; ++k) {
    points.push_back(kHalfShift + static_cast<double>(k));
  }
  const auto half = static_cast<double>(n);
  return PointSet(std::move(points), {-half, half + kHalfShift});
}

PointSet digit_parity_points(std::int64_t n) {
  if (n < 1) throw InputError("digit_parity_points: N must be at least 1");
  std::vector<std::int64_t> positive;
  for (std::int64_t m = 1; m <= n; ++m) {
    if (std::bit_width(static_cast<std::uint64_t>(m)) % 2 == 1) positive.push_back(m);
  }
  return symmetric(positive, n);
}

}  // namespace aperiodic
