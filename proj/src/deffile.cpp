#include "skewcal/deffile.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "skewcal/parser.hpp"

namespace skewcal {

namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::optional<int> parse_index(const std::string& s) {
  if (s.empty() || s.size() > 6) return std::nullopt;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  return std::stoi(s);
}

struct KeyValue {
  std::string key;
  std::string value;
  int line = 0;
  int key_col = 0;
  int val_col = 0;
};

struct RawSection {
  std::string header;
  int line = 0;
  std::vector<KeyValue> entries;
};

/// Split the input into sections of key = value entries. Comment lines and
/// trailing comments start with '#'; blank lines are skipped.
std::vector<RawSection> scan_sections(const std::string& text,
                                      std::vector<Diagnostic>& diags) {
  std::vector<RawSection> sections;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool in_section = false;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    size_t hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    std::string body = trim(line);
    if (body.empty()) continue;
    size_t first = line.find_first_not_of(" \t");
    int start_col = static_cast<int>(first) + 1;
    if (body.front() == '[') {
      if (body.back() != ']') {
        diags.push_back({lineno, start_col, "unterminated section header"});
        continue;
      }
      std::string name = trim(body.substr(1, body.size() - 2));
      if (name.empty()) {
        diags.push_back({lineno, start_col, "empty section header"});
        continue;
      }
      sections.push_back({name, lineno, {}});
      in_section = true;
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      diags.push_back({lineno, start_col, "expected 'key = value'"});
      continue;
    }
    KeyValue kv;
    kv.key = trim(line.substr(0, eq));
    kv.line = lineno;
    kv.key_col = start_col;
    size_t vstart = line.find_first_not_of(" \t", eq + 1);
    if (kv.key.empty()) {
      diags.push_back({lineno, start_col, "missing key before '='"});
      continue;
    }
    if (vstart == std::string::npos) {
      diags.push_back({lineno, static_cast<int>(eq) + 1, "missing value after '='"});
      continue;
    }
    kv.val_col = static_cast<int>(vstart) + 1;
    kv.value = trim(line.substr(vstart));
    if (!in_section) {
      diags.push_back({lineno, start_col, "entry outside of any [section]"});
      continue;
    }
    sections.back().entries.push_back(std::move(kv));
  }
  return sections;
}

class Builder {
public:
  Builder(std::vector<Diagnostic>& diags) : m_diags(diags) {}

  void diag(int line, int col, const std::string& msg) {
    m_diags.push_back({line, col, msg});
  }
  void diag(const KeyValue& kv, const std::string& msg) {
    diag(kv.line, kv.key_col, msg);
  }

  /// Parse the value as an expression over the chart; zero on failure.
  Expr expr(const KeyValue& kv, const ChartPtr& chart) {
    ExprParseResult r = parse_expr(kv.value, chart);
    if (!r.ok()) {
      int col = kv.val_col + (r.pos.line == 1 ? r.pos.col - 1 : 0);
      diag(kv.line, col, r.message);
      return Expr(chart);
    }
    return *r.value;
  }

  std::optional<int> integer(const KeyValue& kv) {
    auto n = parse_index(kv.value);
    if (!n) diag(kv.line, kv.val_col, "expected a nonnegative integer");
    return n;
  }

  /// 1-based index from a dotted key part, checked against [1, bound].
  std::optional<int> index(const KeyValue& kv, const std::string& part,
                           int bound, const char* what) {
    auto n = parse_index(part);
    if (!n || *n < 1 || *n > bound) {
      std::ostringstream os;
      os << what << " index '" << part << "' out of range 1.." << bound;
      diag(kv, os.str());
      return std::nullopt;
    }
    return *n;
  }

  bool fresh(const RawSection& sec, const KeyValue& kv) {
    if (!m_seen.insert(sec.header + "\n" + kv.key).second) {
      diag(kv, "duplicate key '" + kv.key + "'");
      return false;
    }
    return true;
  }

private:
  std::vector<Diagnostic>& m_diags;
  std::set<std::string> m_seen;
};

ChartPtr build_chart(Builder& b, const RawSection& sec) {
  std::vector<std::string> names;
  bool have_coords = false;
  for (const auto& kv : sec.entries) {
    if (!b.fresh(sec, kv)) continue;
    if (kv.key != "coords") {
      b.diag(kv, "unknown key '" + kv.key + "' in [chart]");
      continue;
    }
    have_coords = true;
    std::set<std::string> dedup;
    for (const std::string& piece : split(kv.value, ',')) {
      std::string name = trim(piece);
      if (!is_identifier(name)) {
        b.diag(kv.line, kv.val_col, "bad coordinate name '" + name + "'");
        return nullptr;
      }
      if (!dedup.insert(name).second) {
        b.diag(kv.line, kv.val_col, "duplicate coordinate '" + name + "'");
        return nullptr;
      }
      names.push_back(name);
    }
  }
  if (!have_coords) {
    b.diag(sec.line, 1, "[chart] requires a coords key");
    return nullptr;
  }
  return make_chart(names);
}

std::optional<AlgebroidDef> build_algebroid(Builder& b, const RawSection& sec,
                                            const ChartPtr& chart) {
  int rank = -1;
  for (const auto& kv : sec.entries) {
    if (kv.key == "rank") {
      auto n = b.integer(kv);
      if (n) rank = *n;
    }
  }
  if (rank < 0) {
    b.diag(sec.line, 1, "[algebroid] requires a rank key");
    return std::nullopt;
  }
  int dim = chart->dim();
  std::vector<std::vector<Expr>> anchor(rank, std::vector<Expr>(dim, Expr(chart)));
  std::vector<AlgebroidDef::StructureEntry> entries;
  bool ok = true;
  for (const auto& kv : sec.entries) {
    if (!b.fresh(sec, kv)) continue;
    auto parts = split(kv.key, '.');
    if (parts[0] == "rank" && parts.size() == 1) continue;
    if (parts[0] == "anchor" && parts.size() == 3) {
      auto a = b.index(kv, parts[1], rank, "frame");
      auto i = b.index(kv, parts[2], dim, "coordinate");
      if (!a || !i) { ok = false; continue; }
      anchor[*a - 1][*i - 1] = b.expr(kv, chart);
      continue;
    }
    if (parts[0] == "structure" && parts.size() == 4) {
      auto a = b.index(kv, parts[1], rank, "frame");
      auto c = b.index(kv, parts[2], rank, "frame");
      auto d = b.index(kv, parts[3], rank, "frame");
      if (!a || !c || !d) { ok = false; continue; }
      if (*a == *c) {
        b.diag(kv, "diagonal structure entry (indices must satisfy a < b)");
        ok = false;
        continue;
      }
      if (*a > *c) {
        b.diag(kv, "structure indices must be increasing (a < b)");
        ok = false;
        continue;
      }
      entries.push_back({*a - 1, *c - 1, *d - 1, b.expr(kv, chart)});
      continue;
    }
    b.diag(kv, "unknown key '" + kv.key + "' in [algebroid]");
    ok = false;
  }
  if (!ok) return std::nullopt;
  return AlgebroidDef(chart, rank, std::move(anchor), entries);
}

/// Shared loader for [cosection.<name>] / [multivector.<name>] blocks.
template <class T>
std::optional<T> build_alternating(Builder& b, const RawSection& sec,
                                   const ChartPtr& chart, int rank) {
  int degree = -1;
  for (const auto& kv : sec.entries) {
    if (kv.key == "degree") {
      auto n = b.integer(kv);
      if (n) degree = *n;
    }
  }
  if (degree < 0 || degree > rank) {
    b.diag(sec.line, 1, "[" + sec.header + "] requires a degree key in 0.." +
                            std::to_string(rank));
    return std::nullopt;
  }
  T out(chart, rank, degree);
  bool ok = true;
  for (const auto& kv : sec.entries) {
    if (!b.fresh(sec, kv)) continue;
    auto parts = split(kv.key, '.');
    if (parts[0] == "degree" && parts.size() == 1) continue;
    if (parts[0] == "coeff" && static_cast<int>(parts.size()) == degree + 1) {
      std::vector<int> idx;
      bool good = true;
      for (int k = 1; k < static_cast<int>(parts.size()); ++k) {
        auto n = b.index(kv, parts[k], rank, "frame");
        if (!n) { good = false; break; }
        idx.push_back(*n - 1);
      }
      if (!good) { ok = false; continue; }
      if (!std::is_sorted(idx.begin(), idx.end()) ||
          std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
        b.diag(kv, "coefficient indices must be strictly increasing");
        ok = false;
        continue;
      }
      out.add_coeff(idx, b.expr(kv, chart));
      continue;
    }
    b.diag(kv, "unknown key '" + kv.key + "' in [" + sec.header + "]");
    ok = false;
  }
  if (!ok) return std::nullopt;
  return out;
}

struct JacobiBlocks {
  CoSec phi0;
  MultiVec pi;
};

std::optional<JacobiBlocks> build_jacobi(Builder& b, const RawSection& sec,
                                         const ChartPtr& chart, int rank) {
  JacobiBlocks out{CoSec(chart, rank, 1), MultiVec(chart, rank, 2)};
  bool ok = true;
  for (const auto& kv : sec.entries) {
    if (!b.fresh(sec, kv)) continue;
    auto parts = split(kv.key, '.');
    if (parts[0] == "phi0" && parts.size() == 2) {
      auto a = b.index(kv, parts[1], rank, "frame");
      if (!a) { ok = false; continue; }
      out.phi0.add_coeff({*a - 1}, b.expr(kv, chart));
      continue;
    }
    if (parts[0] == "pi" && parts.size() == 3) {
      auto a = b.index(kv, parts[1], rank, "frame");
      auto c = b.index(kv, parts[2], rank, "frame");
      if (!a || !c) { ok = false; continue; }
      if (*a >= *c) {
        b.diag(kv, "bivector indices must be increasing (a < b)");
        ok = false;
        continue;
      }
      out.pi.add_coeff({*a - 1, *c - 1}, b.expr(kv, chart));
      continue;
    }
    b.diag(kv, "unknown key '" + kv.key + "' in [jacobi]");
    ok = false;
  }
  if (!ok) return std::nullopt;
  return out;
}

std::optional<CoSec> build_contact(Builder& b, const RawSection& sec,
                                   const ChartPtr& chart) {
  int dim = chart->dim();
  CoSec eta(chart, dim, 1);
  bool ok = true;
  for (const auto& kv : sec.entries) {
    if (!b.fresh(sec, kv)) continue;
    auto parts = split(kv.key, '.');
    if (parts[0] == "eta" && parts.size() == 2) {
      auto i = b.index(kv, parts[1], dim, "coordinate");
      if (!i) { ok = false; continue; }
      eta.add_coeff({*i - 1}, b.expr(kv, chart));
      continue;
    }
    b.diag(kv, "unknown key '" + kv.key + "' in [contact]");
    ok = false;
  }
  if (!ok) return std::nullopt;
  return eta;
}

/// Collect a symmetric matrix from `prefix.i.j` keys, mirroring missing
/// entries and diagnosing conflicting mirror pairs. Keys with any other
/// shape are left for the caller.
std::optional<std::vector<std::vector<Expr>>> build_gram(
    Builder& b, const RawSection& sec, const ChartPtr& chart, int rank,
    const std::string& prefix) {
  std::vector<std::vector<std::optional<Expr>>> given(
      rank, std::vector<std::optional<Expr>>(rank));
  bool ok = true;
  for (const auto& kv : sec.entries) {
    auto parts = split(kv.key, '.');
    if (parts[0] != prefix || parts.size() != 3) continue;
    if (!b.fresh(sec, kv)) continue;
    auto i = b.index(kv, parts[1], rank, "frame");
    auto j = b.index(kv, parts[2], rank, "frame");
    if (!i || !j) { ok = false; continue; }
    given[*i - 1][*j - 1] = b.expr(kv, chart);
  }
  std::vector<std::vector<Expr>> gram(rank, std::vector<Expr>(rank, Expr(chart)));
  for (int i = 0; i < rank; ++i)
    for (int j = i; j < rank; ++j) {
      const auto& lo = given[i][j];
      const auto& hi = given[j][i];
      if (lo && hi && i != j && !(*lo == *hi)) {
        std::ostringstream os;
        os << "non-symmetric gram: " << prefix << "." << i + 1 << "." << j + 1
           << " disagrees with " << prefix << "." << j + 1 << "." << i + 1;
        b.diag(sec.line, 1, os.str());
        ok = false;
        continue;
      }
      Expr v = lo ? *lo : (hi ? *hi : Expr(chart));
      gram[i][j] = v;
      gram[j][i] = v;
    }
  if (!ok) return std::nullopt;
  return gram;
}

std::optional<Metric> build_metric(Builder& b, const RawSection& sec,
                                   const ChartPtr& chart, int rank) {
  auto carrier = Metric::Carrier::bundle;
  bool have_carrier = false;
  bool ok = true;
  for (const auto& kv : sec.entries) {
    auto parts = split(kv.key, '.');
    if (parts[0] == "gram" && parts.size() == 3) continue; // via build_gram
    if (!b.fresh(sec, kv)) continue;
    if (kv.key == "carrier") {
      have_carrier = true;
      if (kv.value == "A") {
        carrier = Metric::Carrier::bundle;
      } else if (kv.value == "Adual") {
        carrier = Metric::Carrier::dual;
      } else {
        b.diag(kv.line, kv.val_col, "carrier must be A or Adual");
        ok = false;
      }
      continue;
    }
    b.diag(kv, "unknown key '" + kv.key + "' in [metric]");
    ok = false;
  }
  if (!have_carrier && ok) {
    b.diag(sec.line, 1, "[metric] requires a carrier key (A or Adual)");
    ok = false;
  }
  auto gram = build_gram(b, sec, chart, rank, "gram");
  if (!gram || !ok) return std::nullopt;
  return carrier == Metric::Carrier::bundle ? Metric::on_frame(chart, *gram)
                                            : Metric::on_coframe(chart, *gram);
}

std::optional<AlmostContactTuple> build_sasaki(Builder& b,
                                               const RawSection& sec,
                                               const ChartPtr& chart) {
  int dim = chart->dim();
  int q = 0;
  std::vector<std::vector<Expr>> phi(dim, std::vector<Expr>(dim, Expr(chart)));
  std::vector<Expr> xi(dim, Expr(chart));
  CoSec eta(chart, dim, 1);
  bool ok = true;
  for (const auto& kv : sec.entries) {
    auto parts = split(kv.key, '.');
    if (parts[0] == "g" && parts.size() == 3) continue; // via build_gram
    if (!b.fresh(sec, kv)) continue;
    if (parts[0] == "q" && parts.size() == 1) {
      auto n = b.integer(kv);
      if (n) q = *n;
      else ok = false;
      continue;
    }
    if (parts[0] == "phi" && parts.size() == 3) {
      auto i = b.index(kv, parts[1], dim, "frame");
      auto j = b.index(kv, parts[2], dim, "frame");
      if (!i || !j) { ok = false; continue; }
      phi[*i - 1][*j - 1] = b.expr(kv, chart);
      continue;
    }
    if (parts[0] == "xi" && parts.size() == 2) {
      auto i = b.index(kv, parts[1], dim, "frame");
      if (!i) { ok = false; continue; }
      xi[*i - 1] = b.expr(kv, chart);
      continue;
    }
    if (parts[0] == "eta" && parts.size() == 2) {
      auto i = b.index(kv, parts[1], dim, "frame");
      if (!i) { ok = false; continue; }
      eta.add_coeff({*i - 1}, b.expr(kv, chart));
      continue;
    }
    b.diag(kv, "unknown key '" + kv.key + "' in [sasaki]");
    ok = false;
  }
  auto gram = build_gram(b, sec, chart, dim, "g");
  if (!gram || !ok) return std::nullopt;
  try {
    return make_almost_contact(chart, std::move(phi),
                               Section(chart, std::move(xi)), eta,
                               Metric::on_frame(chart, *gram), q);
  } catch (const Error& e) {
    b.diag(sec.line, 1, e.what());
    return std::nullopt;
  }
}

void emit_expr_key(std::ostream& os, const std::string& key, const Expr& v) {
  if (!v.is_zero()) os << key << " = " << v.str() << "\n";
}

std::string expr_of(const RatExpr& r, const char* what) {
  return r.expect_expr(what).str();
}

void emit_gram(std::ostream& os, const std::string& prefix, const RMat& gram,
               const char* what) {
  int n = static_cast<int>(gram.size());
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (!gram[i][j].is_zero())
        os << prefix << "." << i + 1 << "." << j + 1 << " = "
           << expr_of(gram[i][j], what) << "\n";
}

template <class T>
void emit_alternating(std::ostream& os, const std::string& header, const T& w) {
  os << "[" << header << "]\n";
  os << "degree = " << w.degree() << "\n";
  for (const auto& [idx, v] : w.coeffs()) {
    os << "coeff";
    for (int i : idx) os << "." << i + 1;
    os << " = " << v.str() << "\n";
  }
  os << "\n";
}

bool metric_equal(const Metric& a, const Metric& b) {
  return a.carrier() == b.carrier() && a.rank() == b.rank() &&
         rmat_equal(a.gram(), b.gram());
}

} // namespace

std::string Diagnostic::str() const {
  std::ostringstream os;
  os << line << ":" << col << ": " << message;
  return os.str();
}

DefParseResult parse_definition(const std::string& text) {
  DefParseResult res;
  auto sections = scan_sections(text, res.diagnostics);
  Builder b(res.diagnostics);

  std::set<std::string> seen_headers;
  for (const auto& sec : sections)
    if (!seen_headers.insert(sec.header).second)
      b.diag(sec.line, 1, "duplicate section [" + sec.header + "]");

  const RawSection* chart_sec = nullptr;
  const RawSection* alg_sec = nullptr;
  for (const auto& sec : sections) {
    if (sec.header == "chart" && !chart_sec) chart_sec = &sec;
    if (sec.header == "algebroid" && !alg_sec) alg_sec = &sec;
  }
  if (!chart_sec) {
    b.diag(1, 1, "missing [chart] section");
    return res;
  }
  ChartPtr chart = build_chart(b, *chart_sec);
  if (!chart) return res;

  DefinitionFile def;
  def.chart = chart;
  if (alg_sec) def.algebroid = build_algebroid(b, *alg_sec, chart);
  int rank = def.algebroid ? def.algebroid->rank() : chart->dim();

  for (const auto& sec : sections) {
    if (&sec == chart_sec || &sec == alg_sec) continue;
    auto parts = split(sec.header, '.');
    if (sec.header == "jacobi") {
      auto jb = build_jacobi(b, sec, chart, rank);
      if (jb) {
        def.phi0 = std::move(jb->phi0);
        def.pi = std::move(jb->pi);
      }
    } else if (sec.header == "contact") {
      def.contact_eta = build_contact(b, sec, chart);
    } else if (sec.header == "metric") {
      def.metric = build_metric(b, sec, chart, rank);
    } else if (sec.header == "sasaki") {
      def.sasaki = build_sasaki(b, sec, chart);
    } else if (parts.size() == 2 && parts[0] == "cosection" &&
               is_identifier(parts[1])) {
      auto w = build_alternating<CoSec>(b, sec, chart, rank);
      if (w) def.cosections.emplace(parts[1], std::move(*w));
    } else if (parts.size() == 2 && parts[0] == "multivector" &&
               is_identifier(parts[1])) {
      auto w = build_alternating<MultiVec>(b, sec, chart, rank);
      if (w) def.multivectors.emplace(parts[1], std::move(*w));
    } else {
      b.diag(sec.line, 1, "unknown section [" + sec.header + "]");
    }
  }

  if (res.diagnostics.empty()) res.file = std::move(def);
  return res;
}

std::string emit_definition(const DefinitionFile& d) {
  std::ostringstream os;
  os << "[chart]\ncoords = ";
  for (int i = 0; i < d.chart->dim(); ++i)
    os << (i ? "," : "") << d.chart->name(i);
  os << "\n\n";

  if (d.algebroid) {
    const AlgebroidDef& a = *d.algebroid;
    os << "[algebroid]\nrank = " << a.rank() << "\n";
    for (int e = 0; e < a.rank(); ++e)
      for (int i = 0; i < a.dim(); ++i) {
        std::ostringstream key;
        key << "anchor." << e + 1 << "." << i + 1;
        emit_expr_key(os, key.str(), a.anchor_entry(e, i));
      }
    for (int e = 0; e < a.rank(); ++e)
      for (int f = e + 1; f < a.rank(); ++f)
        for (int c = 0; c < a.rank(); ++c) {
          std::ostringstream key;
          key << "structure." << e + 1 << "." << f + 1 << "." << c + 1;
          emit_expr_key(os, key.str(), a.structure(e, f, c));
        }
    os << "\n";
  }

  if (d.contact_eta) {
    os << "[contact]\n";
    for (const auto& [idx, v] : d.contact_eta->coeffs())
      os << "eta." << idx[0] + 1 << " = " << v.str() << "\n";
    os << "\n";
  }

  if (d.phi0 || d.pi) {
    os << "[jacobi]\n";
    if (d.phi0)
      for (const auto& [idx, v] : d.phi0->coeffs())
        os << "phi0." << idx[0] + 1 << " = " << v.str() << "\n";
    if (d.pi)
      for (const auto& [idx, v] : d.pi->coeffs())
        os << "pi." << idx[0] + 1 << "." << idx[1] + 1 << " = " << v.str()
           << "\n";
    os << "\n";
  }

  if (d.metric) {
    os << "[metric]\ncarrier = "
       << (d.metric->carrier() == Metric::Carrier::bundle ? "A" : "Adual")
       << "\n";
    emit_gram(os, "gram", d.metric->gram(), "metric gram entry");
    os << "\n";
  }

  if (d.sasaki) {
    const AlmostContactTuple& t = *d.sasaki;
    os << "[sasaki]\nq = " << t.q << "\n";
    for (int i = 0; i < t.dim(); ++i)
      for (int j = 0; j < t.dim(); ++j) {
        std::ostringstream key;
        key << "phi." << i + 1 << "." << j + 1;
        emit_expr_key(os, key.str(), t.phi[i][j]);
      }
    for (int i = 0; i < t.dim(); ++i) {
      std::ostringstream key;
      key << "xi." << i + 1;
      emit_expr_key(os, key.str(), t.xi.comp(i));
    }
    for (const auto& [idx, v] : t.eta.coeffs())
      os << "eta." << idx[0] + 1 << " = " << v.str() << "\n";
    emit_gram(os, "g", t.g.gram(), "structure metric entry");
    os << "\n";
  }

  for (const auto& [name, w] : d.multivectors)
    emit_alternating(os, "multivector." + name, w);
  for (const auto& [name, w] : d.cosections)
    emit_alternating(os, "cosection." + name, w);
  return os.str();
}

bool semantically_equal(const DefinitionFile& a, const DefinitionFile& b) {
  if (!(*a.chart == *b.chart)) return false;
  if (a.algebroid.has_value() != b.algebroid.has_value()) return false;
  if (a.algebroid && !(*a.algebroid == *b.algebroid)) return false;
  auto opt_eq = [](const auto& x, const auto& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || *x == *y;
  };
  if (!opt_eq(a.contact_eta, b.contact_eta)) return false;
  if (!opt_eq(a.phi0, b.phi0)) return false;
  if (!opt_eq(a.pi, b.pi)) return false;
  if (a.metric.has_value() != b.metric.has_value()) return false;
  if (a.metric && !metric_equal(*a.metric, *b.metric)) return false;
  if (a.sasaki.has_value() != b.sasaki.has_value()) return false;
  if (a.sasaki) {
    const auto& s = *a.sasaki;
    const auto& t = *b.sasaki;
    if (!(*s.chart == *t.chart) || s.q != t.q) return false;
    if (!(s.xi == t.xi) || !(s.eta == t.eta)) return false;
    if (!metric_equal(s.g, t.g)) return false;
    for (int i = 0; i < s.dim(); ++i)
      for (int j = 0; j < s.dim(); ++j)
        if (!(s.phi[i][j] == t.phi[i][j])) return false;
  }
  return a.multivectors == b.multivectors && a.cosections == b.cosections;
}

AlgebroidDef effective_algebroid(const DefinitionFile& d) {
  return d.algebroid ? *d.algebroid : AlgebroidDef::tangent(d.chart);
}

CoSec effective_phi0(const DefinitionFile& d, int rank) {
  return d.phi0 ? *d.phi0 : CoSec(d.chart, rank, 1);
}

} // namespace skewcal
