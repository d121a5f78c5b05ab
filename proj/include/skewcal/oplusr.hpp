#ifndef SKEWCAL_OPLUSR_HPP
#define SKEWCAL_OPLUSR_HPP

#include <utility>

#include "skewcal/algebroid.hpp"
#include "skewcal/multivec.hpp"

namespace skewcal {

/// Extends an algebroid by one trivial direction: the new frame element
/// anchors to zero and brackets to zero with everything. Rank grows by one;
/// the chart is unchanged.
AlgebroidDef build_oplus(const AlgebroidDef& alg);

/// Identifies a pair (P, Q) of rank-r objects, deg Q = deg P - 1, with the
/// single rank-(r+1) object P + u ^ Q where u is the extra frame direction.
MultiVec flat_pair(const MultiVec& p, const MultiVec& q);
CoSec flat_pair(const CoSec& p, const CoSec& q);

/// Inverse of flat_pair: splits a rank-(r+1) object into its part free of
/// the extra direction and the cofactor of the extra direction.
std::pair<MultiVec, MultiVec> split_pair(const MultiVec& d);
std::pair<CoSec, CoSec> split_pair(const CoSec& w);

/// Verdict of the top-power test eta ^ (d eta)^n for a degree-1 cosection on
/// an odd-rank algebroid (rank 2n+1).
struct ContactReport {
  bool ok = false;  // top coefficient is not identically zero
  int n = 0;        // half the even part of the rank
  Expr top;         // coefficient of the full wedge
  ContactReport(bool o, int nn, Expr t) : ok(o), n(nn), top(std::move(t)) {}
};

ContactReport contact_check(const AlgebroidDef& alg, const CoSec& eta);

/// Bivector-and-section pair produced from a contact cosection by inverting
/// the kernel pairing e_i -> insert(e_i, d eta) + eta_i eta.
struct ContactToJacobi {
  MultiVec lambda; // degree-2 multivector
  Section reeb;    // the unique section with insert(reeb, d eta) = 0, eta(reeb) = 1
};

ContactToJacobi contact_to_jacobi(const AlgebroidDef& alg, const CoSec& eta);

} // namespace skewcal

#endif
