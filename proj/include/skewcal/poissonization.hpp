#ifndef SKEWCAL_POISSONIZATION_HPP
#define SKEWCAL_POISSONIZATION_HPP

#include <string>

#include "skewcal/algebroid.hpp"
#include "skewcal/multivec.hpp"

namespace skewcal {

/// Realizes the twisted structure (alg, phi0) as a plain algebroid over the
/// chart extended by one coordinate: structure functions are unchanged and
/// the anchor gains a column phi0_a along the new coordinate. The result is
/// a flat frame (jacobiator + anchor morphism) exactly when alg is one and
/// phi0 is closed.
AlgebroidDef bar_realization(const AlgebroidDef& alg, const CoSec& phi0,
                             const std::string& coord = "t");

/// Conformal variant over the same extended chart: anchor rows
/// exp(-t) (rho_a, phi0_a) and structure functions
/// exp(-t) (c^c_{ab} - phi0_a delta^c_b + phi0_b delta^c_a).
AlgebroidDef hat_realization(const AlgebroidDef& alg, const CoSec& phi0,
                             const std::string& coord = "t");

/// exp(-t) scaling of a multivector carried to the extended chart.
MultiVec poissonize(const MultiVec& pi, const ChartPtr& extended_chart,
                    const std::string& coord = "t");

} // namespace skewcal

#endif
