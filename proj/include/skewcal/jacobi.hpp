#ifndef SKEWCAL_JACOBI_HPP
#define SKEWCAL_JACOBI_HPP

#include "skewcal/algebroid.hpp"
#include "skewcal/multivec.hpp"

namespace skewcal {

/// Graded bracket twisted by a degree-1 cosection phi0:
///   [D1, D2]_{phi0} = [D1, D2]
///                     + (a1 - 1) D1 ^ contract(phi0, D2)
///                     - (-1)^{a1+1} (a2 - 1) contract(phi0, D1) ^ D2
/// with contraction of a degree-0 argument read as zero. Degree-1 arguments
/// reproduce the plain bracket; against functions the anchor gains the
/// pairing with phi0.
MultiVec phi_schouten(const AlgebroidDef& alg, const CoSec& phi0,
                      const MultiVec& d1, const MultiVec& d2);

/// Twisted differential d_{phi0} w = d w + phi0 ^ w. Its square is wedging
/// by d phi0, so it is a complex exactly when phi0 is closed.
CoSec phi_differential(const AlgebroidDef& alg, const CoSec& phi0,
                       const CoSec& w);

/// Twisted Lie derivative on cosections: L_X w + <phi0, X> w.
CoSec phi_lie_derivative(const AlgebroidDef& alg, const CoSec& phi0,
                         const Section& x, const CoSec& w);

/// Twisted Lie derivative on multivectors: the twisted bracket with the
/// section.
MultiVec phi_lie_derivative(const AlgebroidDef& alg, const CoSec& phi0,
                            const Section& x, const MultiVec& d);

/// Section obtained by contracting a degree-1 cosection into a bivector.
Section sharp(const MultiVec& pi, const CoSec& xi);

/// pi(xi, eta) = <sharp(pi, xi), eta>.
Expr bivector_eval(const MultiVec& pi, const CoSec& xi, const CoSec& eta);

/// Twisted self-bracket [pi, pi]_{phi0}; identically zero exactly when the
/// bivector is compatible with (alg, phi0).
MultiVec jacobi_residual(const AlgebroidDef& alg, const CoSec& phi0,
                         const MultiVec& pi);

/// Bracket induced on degree-1 cosections by a bivector:
///   [xi, eta]_{pi, phi0} = L^{phi0}_{sharp xi} eta - L^{phi0}_{sharp eta} xi
///                          - d_{phi0} (pi(xi, eta)).
CoSec induced_bracket(const AlgebroidDef& alg, const CoSec& phi0,
                      const MultiVec& pi, const CoSec& xi, const CoSec& eta);

/// The dual bundle as an algebroid: frames are the coframe elements, the
/// bracket is the induced one, the anchor factors through sharp(pi, .).
/// The distinguished cosection of the dual is x0 = -sharp(pi, phi0),
/// reinterpreted over the dual frame.
struct InducedDual {
  AlgebroidDef dual;
  CoSec x0;
};

InducedDual build_induced_dual(const AlgebroidDef& alg, const CoSec& phi0,
                               const MultiVec& pi);

/// Residual of the comparison identity
///   1/2 [pi,pi]_{phi0}(xi, eta, .) =
///     bracket(sharp xi, sharp eta) - sharp([xi, eta]_{pi, phi0}).
Section bracket_identity_residual(const AlgebroidDef& alg, const CoSec& phi0,
                                  const MultiVec& pi, const CoSec& xi,
                                  const CoSec& eta);

} // namespace skewcal

#endif
