#include "skewcal/chart.hpp"

#include <algorithm>
#include <set>

namespace skewcal {

Chart::Chart(std::vector<std::string> names) : m_names(std::move(names)) {
  if (m_names.empty()) {
    throw ShapeError("chart needs at least one coordinate");
  }
  std::set<std::string> seen;
  for (const auto& n : m_names) {
    if (n.empty()) {
      throw ShapeError("empty coordinate name");
    }
    if (!seen.insert(n).second) {
      throw ShapeError("duplicate coordinate name '" + n + "'");
    }
  }
}

const std::string& Chart::name(int i) const {
  if (i < 0 || i >= dim()) {
    throw ShapeError("coordinate index " + std::to_string(i) + " out of range");
  }
  return m_names[static_cast<size_t>(i)];
}

std::optional<int> Chart::index_of(const std::string& name) const {
  auto it = std::find(m_names.begin(), m_names.end(), name);
  if (it == m_names.end()) {
    return std::nullopt;
  }
  return static_cast<int>(it - m_names.begin());
}

bool Chart::subset_of(const Chart& bigger) const {
  for (const auto& n : m_names) {
    if (!bigger.index_of(n)) {
      return false;
    }
  }
  return true;
}

ChartPtr make_chart(std::vector<std::string> names) {
  return std::make_shared<const Chart>(std::move(names));
}

ChartPtr extend_chart(const ChartPtr& chart, const std::string& extra) {
  if (chart->index_of(extra)) {
    throw ShapeError("coordinate '" + extra + "' already present in chart");
  }
  auto names = chart->names();
  names.push_back(extra);
  return make_chart(std::move(names));
}

const ChartPtr& require_same_chart(const ChartPtr& a, const ChartPtr& b,
                                   const char* context) {
  if (a == b) {
    return a;
  }
  if (!a || !b || !(*a == *b)) {
    throw ChartMismatch(std::string(context) + ": operands live on different charts");
  }
  return a;
}

} // namespace skewcal
