#pragma once

/// @file verify.hpp
/// @brief The paper's desk-checkable claims as executable verifications; the
/// acceptance suite and the `check` CLI subcommands run these.

#include "ale/characters.hpp"
#include "ale/report.hpp"

namespace ale {

// Appendix B summation identities, verified exactly in Q(zeta): the
// arm/leg-style lemma -(k-5)(k-1)/12 + s(k-2-s)/2, its floor-form variant,
// and the preliminary lemmas (parity-gated; the eta lemmas run over every
// root eta of the required order).
CheckReport check_appendix_b(int k);

// netDegree(tangent) == dimension formula and netDegree(natural) == rank
// formula over all enumerated fixed points up to maxExponent (at most
// maxData of them when positive).
CheckReport check_dimension_rank_degrees(int k, int r, const std::vector<int>& w, const Rational& maxExponent,
                                         long maxData = 0);

// The Appendix D k=3 U(2) lowest-order table: all six holonomy triples, all
// printed sectors, >= samplePoints sample points each. The single
// paper-flagged case reports `flagged` on mismatch instead of failing.
CheckReport check_appendix_d_regression(int samplePoints = 5, std::uint64_t seed = 2026);

// Seiberg-Witten limit: F = -ktilde eps1 eps2 log Z has finite coefficients
// at the origin, integer-exponent coefficients equal (1/k) * F_{C^2}
// coefficients, fractional-exponent coefficients vanish, and everything is
// slope independent.
CheckReport check_sw_limit(int k, int r, const std::vector<int>& w, Matter matter, long qOrder,
                           const std::vector<Rational>& slopes, int samplePoints = 3, std::uint64_t seed = 2027);

// k=2 blowup ratio: two-route comparison of lim Z_bullet / Z_inst against
// the explicit prepotential expression, t-degree <= tDegree, q-order qOrder.
CheckReport check_blowup_ratio_k2(int r, const std::vector<int>& w, long qOrder, int tDegree = 2,
                                  int samplePoints = 2, std::uint64_t seed = 2028);

// General edge algorithm vs the k=2 and k=3 closed forms on the grid
// |floor(v)| <= 3, all fractional classes, sampled evaluation.
CheckReport check_edge_oracles(int samplePoints = 5, std::uint64_t seed = 2029);

// Determinism: byte-identical serialized output across worker counts is
// asserted by the acceptance suite using serialize().

} // namespace ale
