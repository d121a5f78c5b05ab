#ifndef SKEWCAL_CALCULUS_HPP
#define SKEWCAL_CALCULUS_HPP

#include "skewcal/algebroid.hpp"
#include "skewcal/multivec.hpp"

namespace skewcal {

/// Graded bracket of multivector fields extending the algebroid bracket:
/// degree-1 arguments reproduce bracket(), a degree-1 and a function give
/// the anchor derivative, and wedge products are peeled off by the graded
/// derivation rules. Result degree is deg(d1) + deg(d2) - 1 (degree 0 for a
/// pair of functions, where the bracket vanishes).
MultiVec schouten(const AlgebroidDef& alg, const MultiVec& d1,
                  const MultiVec& d2);

/// Frame-tuple exterior differential of an alternating cosection:
/// (dw)(X_0..X_k) = sum_i (-1)^i rho(X_i) w(..) + sum_{i<j} (-1)^{i+j}
/// w([X_i,X_j], ..). Defined for any skew algebroid; squares to zero
/// exactly when the algebroid is Lie.
CoSec differential(const AlgebroidDef& alg, const CoSec& w);

/// Lie derivative of a cosection along a section, via the homotopy formula
/// L_X = insert(X) after d + d after insert(X).
CoSec lie_derivative(const AlgebroidDef& alg, const Section& x,
                     const CoSec& w);

/// Lie derivative of a multivector along a section: the graded bracket with
/// the section.
MultiVec lie_derivative(const AlgebroidDef& alg, const Section& x,
                        const MultiVec& d);

} // namespace skewcal

#endif
