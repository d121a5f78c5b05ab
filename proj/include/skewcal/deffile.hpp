#ifndef SKEWCAL_DEFFILE_HPP
#define SKEWCAL_DEFFILE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewcal/metric.hpp"
#include "skewcal/sasaki.hpp"

namespace skewcal {

/// Positioned parse diagnostic (1-based line/column).
struct Diagnostic {
  int line = 0;
  int col = 0;
  std::string message;
  std::string str() const;
};

/// Parsed contents of a definition file. Sections other than [chart] are
/// optional; absent numeric entries default to zero.
struct DefinitionFile {
  ChartPtr chart;
  std::optional<AlgebroidDef> algebroid;
  std::optional<CoSec> contact_eta;         // [contact] eta.i
  std::optional<CoSec> phi0;                // [jacobi] phi0.a
  std::optional<MultiVec> pi;               // [jacobi] pi.a.b
  std::optional<Metric> metric;             // [metric]
  std::optional<AlmostContactTuple> sasaki; // [sasaki]
  std::map<std::string, MultiVec> multivectors;
  std::map<std::string, CoSec> cosections;
};

/// Total parse: never throws on bad input; failures come back as positioned
/// diagnostics and `file` stays empty.
struct DefParseResult {
  std::optional<DefinitionFile> file;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return file.has_value(); }
};

DefParseResult parse_definition(const std::string& text);

/// Canonical emission; parse(emit(d)) is semantically equal to d.
std::string emit_definition(const DefinitionFile& d);

/// Structural equality of everything a definition file can carry.
bool semantically_equal(const DefinitionFile& a, const DefinitionFile& b);

/// The [algebroid] block, or the tangent frame of the chart when absent.
AlgebroidDef effective_algebroid(const DefinitionFile& d);

/// The [jacobi] twist cosection, or the zero cosection when absent.
CoSec effective_phi0(const DefinitionFile& d, int rank);

} // namespace skewcal

#endif
