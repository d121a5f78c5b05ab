#ifndef SKEWCAL_METRIC_HPP
#define SKEWCAL_METRIC_HPP

#include "skewcal/jacobi.hpp"
#include "skewcal/linalg.hpp"

namespace skewcal {

/// Pseudo-metric given by the symmetric gram matrix of the frame (carrier
/// `bundle`) or of the coframe (carrier `dual`). Entries live in the fraction
/// field so that musical inverses stay exact.
class Metric {
public:
  enum class Carrier { bundle, dual };

  Metric(Carrier carrier, ChartPtr chart, RMat gram);
  static Metric on_frame(const ChartPtr& chart,
                         const std::vector<std::vector<Expr>>& gram);
  static Metric on_coframe(const ChartPtr& chart,
                           const std::vector<std::vector<Expr>>& gram);

  Carrier carrier() const { return m_carrier; }
  const ChartPtr& chart() const { return m_chart; }
  int rank() const { return static_cast<int>(m_gram.size()); }
  const RMat& gram() const { return m_gram; }
  const RatExpr& entry(int a, int b) const;

  RatExpr determinant() const;
  bool is_nondegenerate() const { return !determinant().is_zero(); }

  /// Musical inverse on the opposite carrier; throws Error when degenerate.
  Metric dual() const;

  /// Gram pairing of two component vectors.
  RatExpr pair_components(const RVec& u, const RVec& v) const;
  RatExpr pair(const Section& x, const Section& y) const;
  RatExpr pair(const CoSec& a, const CoSec& b) const;

  Metric scaled(const Expr& f) const;
  Metric extended(const ChartPtr& bigger) const;

private:
  Carrier m_carrier;
  ChartPtr m_chart;
  RMat m_gram;
};

/// Affine connection on an algebroid frame, nabla_{e_a} e_b = sum Gamma^c_{ab}
/// e_c, extended to general arguments by tensoriality in the lower-left slot
/// and the Leibniz rule in the other.
class Connection {
public:
  Connection(AlgebroidDef alg, std::vector<RMat> gamma);

  const AlgebroidDef& algebroid() const { return m_alg; }
  const RatExpr& christoffel(int a, int b, int c) const;

  /// nabla_{e_a} of a vector of fraction-field components.
  RVec apply_frame(int a, const RVec& y) const;
  RVec apply(const RVec& x, const RVec& y) const;
  RVec apply(const Section& x, const Section& y) const;

  /// Same Christoffel data over a chart with one more coordinate; the carrier
  /// algebroid keeps its anchor (zero column at the new coordinate).
  Connection extended(const std::string& coord) const;

private:
  AlgebroidDef m_alg;
  std::vector<RMat> m_gamma; // m_gamma[a][b][c] = Gamma^c_{ab}
};

/// Directional derivative of a fraction-field scalar along a frame element.
RatExpr frame_apply(const AlgebroidDef& alg, int a, const RatExpr& f);

/// The torsion-free metric connection, solved exactly from
///   2 g(nabla_{e_a} e_b, e_c) = rho(e_a) g_bc + rho(e_b) g_ac - rho(e_c) g_ab
///                               - g([e_b,e_c], e_a) - g([e_a,e_c], e_b)
///                               + g([e_a,e_b], e_c).
/// Throws Error when the gram matrix is singular.
Connection koszul(const AlgebroidDef& alg, const Metric& g);

/// Musical inverse; forwards to Metric::dual.
Metric dual_metric(const Metric& g);

/// Rank-3 tensor of fraction-field entries on frame triples.
struct Tensor3 {
  ChartPtr chart;
  int rank = 0;
  std::vector<std::vector<RVec>> entries;

  static Tensor3 zero(const ChartPtr& chart, int rank);
  const RatExpr& at(int a, int b, int c) const;
  RatExpr& at(int a, int b, int c);
  bool is_zero() const;
  int nonzero_count() const;
};

/// Covariant derivative of a bivector through a connection on the dual frame:
///   T(a,b,c) = rho(eps_a)(pi_bc) - pi(D_a eps_b, e^c-slot) - pi(e^b-slot, D_a eps_c)
/// where the connection's algebroid is the induced dual and pi is read as a
/// 2-cosection of it.
Tensor3 covariant_bivector_derivative(const Connection& d, const MultiVec& pi);

/// D^pi pi on the induced dual of (alg, pi) with the metric connection of
/// gstar; identically zero exactly when the pair is compatible.
Tensor3 compat_residual_poisson(const AlgebroidDef& alg, const MultiVec& pi,
                                const Metric& gstar);

/// Twisted compatibility residual: covariant derivative of pi through the
/// metric connection on the induced dual of (alg, phi0, pi), plus the
/// half-correction built from x0 = -sharp(pi, phi0):
///   (D_a pi)(b,c) + 1/2 ( <x0,b> pi_ca + <x0,c> pi_ab
///                         + g_ab pi(binv x0, c) - g_ac pi(binv x0, b) ).
Tensor3 compat_residual_jacobi(const AlgebroidDef& alg, const CoSec& phi0,
                               const MultiVec& pi, const Metric& gstar);

/// Transfer of the compatibility residual through the flat extension.
struct CompatTransferReport {
  Tensor3 base_residual;   // twisted residual on (alg, phi0)
  Tensor3 lifted_residual; // plain residual of the rescaled data upstairs
  bool pi_is_jacobi = false;
  bool base_zero = false;
  bool lifted_zero = false;
  /// lifted == e^{-2t} * extended(base), entrywise.
  bool identity_ok = false;
  bool equivalent() const { return identity_ok; }
};

/// Runs both compatibility residuals -- downstairs for (pi, gstar) on
/// (alg, phi0), upstairs for (e^{-t} pi, e^{-t} gstar) on the flat extension
/// -- and checks the exact transfer identity between them.
CompatTransferReport compat_transfer_check(const AlgebroidDef& alg,
                                           const CoSec& phi0,
                                           const MultiVec& pi,
                                           const Metric& gstar);

/// Comparison of the lifted metric connection against its closed form.
struct LiftedConnectionReport {
  bool ok = false;
  /// One component-vector residual per sampled pair.
  std::vector<RVec> residuals;
};

/// Checks, on sampled (possibly t-dependent) coframe-component pairs, that
/// the metric connection of e^{-t} gstar on the dual of the lifted data
/// equals
///   e^{-t} ( D_alpha beta + <x0,alpha>(d beta/dt - beta/2)
///            + <x0,beta> alpha / 2 - g*(alpha,beta) binv(x0) / 2 )
/// with D the downstairs metric connection of gstar.
LiftedConnectionReport lifted_connection_formula_check(
    const AlgebroidDef& alg, const CoSec& phi0, const MultiVec& pi,
    const Metric& gstar, const std::vector<std::pair<Section, Section>>& samples);

/// Closure report for the 2-cosection inverse to a nondegenerate bivector.
struct SymplecticReport {
  CoSec omega;
  bool closed = false;
};

/// omega characterized by omega-flat = -(pi-sharp)^{-1}; `closed` records
/// d omega = 0 (resp. the twisted differential for the twisted overload).
/// Throws Error when pi is degenerate.
SymplecticReport symplectic_correspondence(const AlgebroidDef& alg,
                                           const MultiVec& pi);
SymplecticReport symplectic_correspondence(const AlgebroidDef& alg,
                                           const CoSec& phi0,
                                           const MultiVec& pi);

} // namespace skewcal

#endif
