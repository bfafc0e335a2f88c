#ifndef DVCURVE_INVARIANTS_HPP
#define DVCURVE_INVARIANTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dvcurve/errors.hpp"

namespace dvcurve {

enum class BaseKind {
  AlgClosed,
  Finite,
  Cd,                  // C_d field, parameter d
  SepClosedAwayFromP,
  BrauerDim,           // explicit Brauer dimension d (away from p if flagged)
  ExplicitU,           // explicit u and u_s
};

enum class StepKind {
  Base,
  CompleteDV,    // one complete discretely valued step; residue = previous
  TwoDimLocal,   // finite separable extension of k((x,t))
  ModelPoint,    // F_xi for a point or component of a model over T = k[[t]]
};

struct TowerStep {
  StepKind kind = StepKind::Base;
  BaseKind base = BaseKind::AlgClosed;  // when kind == Base
  int d = 0;                            // Cd / BrauerDim parameter
  bool away_from_p = true;              // BrauerDim flavor
  long long u = 0;                      // ExplicitU
  long long u_s = 0;                    // ExplicitU
};

enum class CharSpec { Zero, SymbolicP, Concrete };

// Symbolic residue-field tower, innermost first: Base, then m CompleteDV
// steps, then at most one terminal TwoDimLocal or ModelPoint.
struct FieldDescriptor {
  std::vector<TowerStep> tower;
  CharSpec char_kind = CharSpec::Zero;
  long long char_p = 0;  // when char_kind == Concrete

  int dv_steps() const;
  bool has_terminal() const;
  void validate() const;  // ParseError on malformed towers
};

enum class Quantity { U, PerIndExponent };

struct TraceStep {
  std::string rule;
  std::string citation;
  std::string detail;
};

struct BoundResult {
  Quantity quantity = Quantity::U;
  std::optional<long long> lower;
  std::optional<long long> upper;
  bool exact = false;
  std::vector<TraceStep> trace;
};

// Rule registry: each derivation step carries its rule name and citation so
// results are auditable; rules can be toggled in tests.
enum RuleId : std::uint32_t {
  kRuleSeedBase = 1u << 0,        // classical base seeds (alg. closed, finite, explicit)
  kRuleSeedCd = 1u << 1,          // C_d fields: u_s <= 2^d
  kRuleStepCompleteDV = 1u << 2,  // u_s doubles per complete DV step
  kRuleTerminalUpper = 1u << 3,   // u(F_xi) <= 4 u_s(k)
  kRuleTerminalLower = 1u << 4,   // u(F_xi) >= 4 u(kappa)
  kRuleStableExact = 1u << 5,     // u(E) = 4 u(k) for stable towers
  kRuleMLocalTower = 1u << 6,     // closed form for m-local towers
  kRuleCdTerminal = 1u << 7,      // u(F_xi) <= 2^{d+2} over a C_d residue field
  kRulePiSeed = 1u << 8,          // Brauer-dimension seeds
  kRulePiStep = 1u << 9,          // Brauer dimension grows by one per DV step
  kRulePiTerminal = 1u << 10,     // ind | per^{d+2}, with roots of unity d+1
  kRulePiSepClosedExact = 1u << 11,  // per = ind over sep-closed-away-from-p
  kRulePiMLocalSepClosed = 1u << 12, // m-local sep-closed: ind | per^{m+1}
  kRulePiMLocalFinite = 1u << 13,    // m-local finite + zeta: ind | per^{m+2}
  kRulePiFunctionField = 1u << 14,   // one DV step over a Brauer-dim-d base + zeta
};

constexpr std::uint32_t kAllRules = 0xFFFFFFFFu;

struct RuleInfo {
  std::uint32_t id;
  const char* name;
  const char* citation;
};

const std::vector<RuleInfo>& rule_registry();

// Tightest u-invariant bounds derivable by forward chaining over the tower.
// Errors: CharTwo (characteristic two recorded), UnknownBase (no seed rule).
BoundResult compute_u_bounds(const FieldDescriptor& f, std::uint32_t rules = kAllRules);

// Minimal derivable exponent e with ind | per^e for Brauer classes over the
// terminal field, of period coprime to the residue characteristic; e = 0
// encodes per = ind.  Errors: UnknownBase, HypothesisViolated.
BoundResult compute_per_ind(const FieldDescriptor& f, bool roots_of_unity,
                            bool period_coprime_to_char = true,
                            std::uint32_t rules = kAllRules);

// One line per trace step: rule, citation, values.
std::string explain(const BoundResult& r);

}  // namespace dvcurve

#endif
