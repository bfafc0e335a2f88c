#ifndef DVCURVE_BRANCHES_HPP
#define DVCURVE_BRANCHES_HPP

#include <optional>
#include <string>
#include <vector>

#include "dvcurve/series.hpp"

namespace dvcurve {

// Complete local ring k[[x,y]] at a split node of the closed fiber, with the
// uniformizer t given by a series whose lowest form is a nondegenerate split
// quadratic (two distinct k-rational tangent directions, both transverse to
// the y-axis).
struct NodalLocalRing {
  SeriesXY t_element;
};

// One analytic arm of {t = 0} through the node: the locus y = phi(x), with
// generator y - phi(x) a height-one prime factor of t.
struct BranchData {
  FPoly phi;
  SeriesXY generator;
  std::string component_id;
};

struct ObstructionWitness {
  int branch_a = 0;
  int branch_b = 0;
  int v_a = 0;
  int v_b = 0;
};

struct ObstructionReport {
  std::vector<int> valuations;
  bool pass = false;
  std::optional<ObstructionWitness> witness;
};

// Split the node into its two branches by factoring the tangent cone over k
// and Hensel-lifting each root to a full parametrization.
// Errors: NotSplitNode, CharTwo.
std::vector<BranchData> branch_decompose(const NodalLocalRing& ring);

// Order of vanishing of a along the branch: the least j with a_j nonzero in
// the expansion a(x, phi + eps) = sum_j a_j(x) eps^j, to depth n_x.
// PrecisionExhausted when every a_j vanishes within the window.
int branch_valuation(const SeriesXY& a, const BranchData& branch);

// Pass iff branches lying on a common component all give the same
// valuation.  component_map defaults to all branches on one component.
ObstructionReport obstruction_check(
    const SeriesXY& a, const NodalLocalRing& ring,
    const std::vector<std::string>* component_map = nullptr);

struct ValuationNormalization {
  int t_power;
  SeriesXY reduced;  // valid in a window lowered by 2*t_power
  ObstructionReport report;
};

// For a passing single-component input, divide out t^m (m the common branch
// valuation) so that every branch valuation of the quotient is zero.
// Errors: ObstructionFails, PrecisionExhausted.
ValuationNormalization normalize_valuations(const SeriesXY& a,
                                            const NodalLocalRing& ring);

}  // namespace dvcurve

#endif
