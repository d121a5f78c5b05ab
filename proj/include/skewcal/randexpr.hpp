#ifndef SKEWCAL_RANDEXPR_HPP
#define SKEWCAL_RANDEXPR_HPP

#include <cstdint>
#include <random>

#include "skewcal/expr.hpp"

namespace skewcal {

/// Deterministic generator for property-test inputs. Draws from a bounded
/// pool: coefficients in {1, -1, 2, -2, 1/2}, monomials of total degree <= 2,
/// and exponential weights in {-1, 0, 1} on the chart coordinate named "t"
/// (no exponential part on charts without a "t" coordinate).
class RandGen {
public:
  explicit RandGen(uint64_t seed) : m_rng(seed) {}

  uint64_t raw() { return m_rng(); }
  int uniform(int lo, int hi); // inclusive bounds
  Rat coeff();
  Expr expr(const ChartPtr& chart, int max_terms = 3);

private:
  std::mt19937_64 m_rng;
};

} // namespace skewcal

#endif
