#ifndef SKEWCAL_CHART_HPP
#define SKEWCAL_CHART_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewcal {

/// Base class for all engine errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two objects over different coordinate charts were combined.
class ChartMismatch : public Error {
public:
  explicit ChartMismatch(const std::string& msg) : Error(msg) {}
};

/// An index, degree or matrix shape was out of range.
class ShapeError : public Error {
public:
  explicit ShapeError(const std::string& msg) : Error(msg) {}
};

/// An ordered list of distinct coordinate names. Charts are immutable and
/// shared; equality is structural so independently built charts compare equal.
class Chart {
public:
  explicit Chart(std::vector<std::string> names);

  int dim() const { return static_cast<int>(m_names.size()); }
  const std::string& name(int i) const;
  const std::vector<std::string>& names() const { return m_names; }
  std::optional<int> index_of(const std::string& name) const;

  bool operator==(const Chart& other) const { return m_names == other.m_names; }
  bool operator!=(const Chart& other) const { return !(*this == other); }

  /// True if every coordinate of this chart appears in `bigger`.
  bool subset_of(const Chart& bigger) const;

private:
  std::vector<std::string> m_names;
};

using ChartPtr = std::shared_ptr<const Chart>;

ChartPtr make_chart(std::vector<std::string> names);

/// Chart with one extra coordinate appended (used by the cylinder
/// constructions). Throws ShapeError if the name is already taken.
ChartPtr extend_chart(const ChartPtr& chart, const std::string& extra);

/// Throws ChartMismatch unless both pointers refer to structurally equal
/// charts; returns the (shared) chart.
const ChartPtr& require_same_chart(const ChartPtr& a, const ChartPtr& b,
                                   const char* context);

} // namespace skewcal

#endif
