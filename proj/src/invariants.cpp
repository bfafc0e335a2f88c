#include "dvcurve/invariants.hpp"

#include <algorithm>

namespace dvcurve {

int FieldDescriptor::dv_steps() const {
  int m = 0;
  for (const auto& s : tower)
    if (s.kind == StepKind::CompleteDV) ++m;
  return m;
}

bool FieldDescriptor::has_terminal() const {
  if (tower.empty()) return false;
  StepKind k = tower.back().kind;
  return k == StepKind::TwoDimLocal || k == StepKind::ModelPoint;
}

void FieldDescriptor::validate() const {
  if (tower.empty()) fail(ErrorCode::ParseError, "empty field tower");
  if (tower.front().kind != StepKind::Base)
    fail(ErrorCode::ParseError, "tower must start with a base field");
  for (size_t i = 1; i < tower.size(); ++i) {
    StepKind k = tower[i].kind;
    if (k == StepKind::Base)
      fail(ErrorCode::ParseError, "base field must be innermost");
    if ((k == StepKind::TwoDimLocal || k == StepKind::ModelPoint) &&
        i + 1 != tower.size())
      fail(ErrorCode::ParseError, "two-dimensional step must be terminal");
  }
  if (tower.front().base == BaseKind::Cd && tower.front().d <= 0)
    fail(ErrorCode::ParseError, "C_d parameter must be positive");
}

const std::vector<RuleInfo>& rule_registry() {
  static const std::vector<RuleInfo> registry = {
      {kRuleSeedBase, "seed.base",
       "classical seeds: u = u_s = 1 for algebraically closed fields, "
       "u = u_s = 2 for finite fields, both stable under finite extensions"},
      {kRuleSeedCd, "seed.cd", "a C_d field k has u_s(k) <= 2^d"},
      {kRuleStepCompleteDV, "step.complete_dv",
       "for K complete discretely valued with residue field k: "
       "u_s(K) = 2 u_s(k) and u(K) >= 2 u(k)"},
      {kRuleTerminalUpper, "terminal.upper",
       "u(F_xi) <= 4 u_s(k) for every point or component xi of a normal "
       "model over T with residue field k"},
      {kRuleTerminalLower, "terminal.lower",
       "u(F_xi) >= 4 u(kappa) for residue extensions kappa; equals 4 u(k) "
       "when u is stable under finite extensions of k"},
      {kRuleStableExact, "exact.stable_tower",
       "u(E) = 4 u(k) when u(k) = u_s(k) and every finite extension k' "
       "has u(k') = u(k)"},
      {kRuleMLocalTower, "tower.m_local",
       "m-local fields: 2^m u(k_0) <= u(k) <= u_s(k) = 2^m u_s(k_0)"},
      {kRuleCdTerminal, "terminal.cd",
       "u(F_xi) <= 2^{d+2} when the residue field is C_d"},
      {kRulePiSeed, "pi.seed",
       "Brauer-dimension seeds: 0 for separably closed away from p, 1 for "
       "finite fields, or as supplied"},
      {kRulePiStep, "pi.step",
       "Brauer dimension away from p grows by one per complete discretely "
       "valued step"},
      {kRulePiTerminal, "pi.terminal",
       "ind(alpha) | per(alpha)^{d+2} over F_xi for residue Brauer "
       "dimension d; with a primitive per-th root of unity, per^{d+1}"},
      {kRulePiSepClosedExact, "pi.sep_closed_exact",
       "per = ind over F_xi when the residue field is separably closed "
       "away from p"},
      {kRulePiMLocalSepClosed, "pi.m_local_sep_closed",
       "m-local residue field over a base separably closed away from p: "
       "ind | per^{m+1}"},
      {kRulePiMLocalFinite, "pi.m_local_finite",
       "m-local residue field over a finite base containing enough roots "
       "of unity: ind | per^{m+2}"},
      {kRulePiFunctionField, "pi.function_field_base",
       "one discretely valued step over a base of Brauer dimension d with "
       "enough roots of unity: ind | per^{d+2}"},
  };
  return registry;
}

namespace {

const RuleInfo& rule_info(std::uint32_t id) {
  for (const auto& r : rule_registry())
    if (r.id == id) return r;
  fail(ErrorCode::Internal, "unregistered rule id");
}

struct Bounds {
  std::optional<long long> lo, hi;
};

class Tracer {
 public:
  explicit Tracer(std::vector<TraceStep>& out) : out_(out) {}

  void note(std::uint32_t id, const std::string& detail) {
    const RuleInfo& info = rule_info(id);
    for (const auto& t : out_)
      if (t.rule == info.name && t.detail == detail) return;  // ties once
    out_.push_back({info.name, info.citation, detail});
  }

  // tighten an upper bound; records the rule when it fires with a value at
  // least as tight as the current one
  bool upper(std::uint32_t id, Bounds& b, long long v, const std::string& detail) {
    if (b.hi && *b.hi < v) return false;
    bool changed = !b.hi || *b.hi > v;
    b.hi = v;
    note(id, detail);
    return changed;
  }

  bool lower(std::uint32_t id, Bounds& b, long long v, const std::string& detail) {
    if (b.lo && *b.lo > v) return false;
    bool changed = !b.lo || *b.lo < v;
    b.lo = v;
    note(id, detail);
    return changed;
  }

 private:
  std::vector<TraceStep>& out_;
};

struct UState {
  Bounds u;
  Bounds us;
  bool u_eq_us = false;  // u(k) = u_s(k) known
  bool stable = false;   // u(k') = u(k) for every finite extension k'
};

long long pow2(int e) { return 1LL << e; }

}  // namespace

BoundResult compute_u_bounds(const FieldDescriptor& f, std::uint32_t rules) {
  f.validate();
  BoundResult out;
  out.quantity = Quantity::U;
  Tracer tr(out.trace);

  if (f.char_kind == CharSpec::Concrete && f.char_p == 2)
    fail(ErrorCode::CharTwo, "u-invariant rules require characteristic != 2");
  if (f.char_kind == CharSpec::SymbolicP) {
    // the characteristic guard cannot be evaluated; every u-rule is blocked
    out.trace.push_back({"guard.char", "u-invariant rules require characteristic != 2",
                         "characteristic is symbolic, rules blocked"});
    return out;
  }

  const TowerStep& base = f.tower.front();
  UState st;
  switch (base.base) {
    case BaseKind::AlgClosed:
      if (rules & kRuleSeedBase) {
        st.u = {1, 1};
        st.us = {1, 1};
        st.u_eq_us = st.stable = true;
        tr.note(kRuleSeedBase, "algebraically closed base: u = u_s = 1");
      }
      break;
    case BaseKind::Finite:
      if (rules & kRuleSeedBase) {
        st.u = {2, 2};
        st.us = {2, 2};
        st.u_eq_us = st.stable = true;
        tr.note(kRuleSeedBase, "finite base: u = u_s = 2");
      }
      break;
    case BaseKind::ExplicitU:
      if (rules & kRuleSeedBase) {
        st.u = {base.u, base.u};
        st.us = {base.u_s, base.u_s};
        st.u_eq_us = base.u == base.u_s;
        st.stable = false;  // not asserted by the caller
        tr.note(kRuleSeedBase, "explicit base: u = " + std::to_string(base.u) +
                                   ", u_s = " + std::to_string(base.u_s));
      }
      break;
    case BaseKind::Cd:
      if (rules & kRuleSeedCd) {
        long long b = pow2(base.d);
        st.us.hi = b;
        st.u.hi = b;  // u <= u_s
        tr.note(kRuleSeedCd, "C_" + std::to_string(base.d) +
                                 " base: u_s <= " + std::to_string(b));
      }
      break;
    case BaseKind::SepClosedAwayFromP:
    case BaseKind::BrauerDim:
      fail(ErrorCode::UnknownBase,
           "no u-invariant seed for this base kind");
  }
  if (!st.u.lo && !st.u.hi && !st.us.hi)
    fail(ErrorCode::UnknownBase, "no seed rule fired for the base field");

  int m = 0;
  for (size_t i = 1; i < f.tower.size(); ++i) {
    const TowerStep& step = f.tower[i];
    if (step.kind == StepKind::CompleteDV) {
      if (!(rules & kRuleStepCompleteDV)) {
        tr.note(kRuleStepCompleteDV, "step rule disabled; bounds frozen");
        st = UState{};
        continue;
      }
      ++m;
      UState nx;
      bool eq_before = st.u_eq_us, stable_before = st.stable;
      if (st.us.lo) nx.us.lo = *st.us.lo * 2;
      if (st.us.hi) nx.us.hi = *st.us.hi * 2;
      if (st.u.lo) nx.u.lo = *st.u.lo * 2;
      nx.u.hi = nx.us.hi;  // u <= u_s
      if (eq_before && nx.us.lo) {
        // u(k) = u_s(k) squeezes u(K) = u_s(K) between 2u(k) and u_s(K)
        if (!nx.u.lo || *nx.u.lo < *nx.us.lo) nx.u.lo = nx.us.lo;
      }
      nx.u_eq_us = eq_before ||
                   (nx.u.lo && nx.us.hi && *nx.u.lo == *nx.us.hi);
      nx.stable = stable_before && eq_before;
      std::string d = "step " + std::to_string(m);
      if (nx.us.hi) d += ": u_s = " + std::to_string(*nx.us.hi);
      if (nx.u.lo) d += ", u >= " + std::to_string(*nx.u.lo);
      tr.note(kRuleStepCompleteDV, d);
      st = nx;
    } else {
      // terminal step
      Bounds e;
      bool terminal_is_model = step.kind == StepKind::ModelPoint;
      if ((rules & kRuleTerminalUpper) && st.us.hi)
        tr.upper(kRuleTerminalUpper, e, 4 * *st.us.hi,
                 std::string(terminal_is_model ? "model point" : "two-dim local") +
                     ": u <= 4 u_s(k) = " + std::to_string(4 * *st.us.hi));
      if ((rules & kRuleTerminalLower) && st.stable && st.u.lo)
        tr.lower(kRuleTerminalLower, e, 4 * *st.u.lo,
                 "u >= 4 u(k) = " + std::to_string(4 * *st.u.lo));
      if ((rules & kRuleStableExact) && st.stable && st.u_eq_us && st.u.lo &&
          st.u.hi && *st.u.lo == *st.u.hi) {
        long long v = 4 * *st.u.lo;
        tr.lower(kRuleStableExact, e, v, "stable tower: u = " + std::to_string(v));
        tr.upper(kRuleStableExact, e, v, "stable tower: u = " + std::to_string(v));
      }
      if ((rules & kRuleCdTerminal) && f.tower.front().base == BaseKind::Cd && m == 0)
        tr.upper(kRuleCdTerminal, e, pow2(f.tower.front().d + 2),
                 "C_d residue field: u <= 2^{d+2} = " +
                     std::to_string(pow2(f.tower.front().d + 2)));
      out.lower = e.lo;
      out.upper = e.hi;
      out.exact = e.lo && e.hi && *e.lo == *e.hi;
      return out;
    }
  }

  // no terminal step: report the tower-top field itself
  if ((rules & kRuleMLocalTower) && m > 0 &&
      (f.tower.front().base == BaseKind::AlgClosed ||
       f.tower.front().base == BaseKind::Finite)) {
    long long u0 = f.tower.front().base == BaseKind::AlgClosed ? 1 : 2;
    std::string d = "m-local closed form: 2^" + std::to_string(m) + " * " +
                    std::to_string(u0) + " <= u <= u_s = " +
                    std::to_string(pow2(m) * u0);
    tr.lower(kRuleMLocalTower, st.u, pow2(m) * u0, d);
    tr.upper(kRuleMLocalTower, st.u, pow2(m) * u0, d);
  }
  out.lower = st.u.lo;
  out.upper = st.u.hi;
  out.exact = st.u.lo && st.u.hi && *st.u.lo == *st.u.hi;
  return out;
}

BoundResult compute_per_ind(const FieldDescriptor& f, bool roots_of_unity,
                            bool period_coprime_to_char, std::uint32_t rules) {
  f.validate();
  if (!period_coprime_to_char)
    fail(ErrorCode::HypothesisViolated,
         "period divisible by the residue characteristic");
  if (!f.has_terminal())
    fail(ErrorCode::ParseError,
         "period-index bounds are computed for a terminal two-dimensional step");

  BoundResult out;
  out.quantity = Quantity::PerIndExponent;
  Tracer tr(out.trace);

  const TowerStep& base = f.tower.front();
  std::optional<long long> bdim;
  bool auto_zeta = false;
  switch (base.base) {
    case BaseKind::SepClosedAwayFromP:
    case BaseKind::AlgClosed:
      if (rules & kRulePiSeed) {
        bdim = 0;
        auto_zeta = true;  // all prime-to-p roots of unity are present
        tr.note(kRulePiSeed, "separably closed away from p: Brauer dimension 0");
      }
      break;
    case BaseKind::Finite:
      if (rules & kRulePiSeed) {
        bdim = 1;
        tr.note(kRulePiSeed, "finite base: Brauer dimension 1");
      }
      break;
    case BaseKind::BrauerDim:
      if (rules & kRulePiSeed) {
        bdim = base.d;
        tr.note(kRulePiSeed, "explicit Brauer dimension " + std::to_string(base.d) +
                                 (base.away_from_p ? " away from p" : ""));
      }
      break;
    default:
      fail(ErrorCode::UnknownBase, "no Brauer-dimension seed for this base kind");
  }
  if (!bdim) fail(ErrorCode::UnknownBase, "no seed rule fired for the base field");

  int m = f.dv_steps();
  if (m > 0) {
    if (rules & kRulePiStep) {
      bdim = *bdim + m;
      tr.note(kRulePiStep, std::to_string(m) + " step(s): Brauer dimension " +
                               std::to_string(*bdim));
    } else {
      tr.note(kRulePiStep, "step rule disabled; Brauer dimension unknown");
      bdim.reset();
    }
  }

  bool zeta = roots_of_unity || auto_zeta;
  Bounds e;
  if ((rules & kRulePiSepClosedExact) && m == 0 &&
      (base.base == BaseKind::SepClosedAwayFromP || base.base == BaseKind::AlgClosed)) {
    tr.upper(kRulePiSepClosedExact, e, 0, "per = ind (exponent 0)");
    tr.lower(kRulePiSepClosedExact, e, 0, "per = ind (exponent 0)");
  }
  if ((rules & kRulePiTerminal) && bdim) {
    long long v = *bdim + (zeta ? 1 : 2);
    tr.upper(kRulePiTerminal, e, v,
             "ind | per^" + std::to_string(v) +
                 (zeta ? " (roots of unity present)" : ""));
  }
  if ((rules & kRulePiMLocalSepClosed) && m >= 1 &&
      (base.base == BaseKind::SepClosedAwayFromP || base.base == BaseKind::AlgClosed))
    tr.upper(kRulePiMLocalSepClosed, e, m + 1,
             "ind | per^" + std::to_string(m + 1));
  if ((rules & kRulePiMLocalFinite) && m >= 0 && base.base == BaseKind::Finite && zeta)
    tr.upper(kRulePiMLocalFinite, e, m + 2, "ind | per^" + std::to_string(m + 2));
  if ((rules & kRulePiFunctionField) && m == 1 && base.base == BaseKind::BrauerDim &&
      zeta)
    tr.upper(kRulePiFunctionField, e, base.d + 2,
             "ind | per^" + std::to_string(base.d + 2));

  if (!e.hi) fail(ErrorCode::UnknownBase, "no terminal rule fired");
  out.lower = e.lo;
  out.upper = e.hi;
  out.exact = e.lo && e.hi && *e.lo == *e.hi;
  return out;
}

std::string explain(const BoundResult& r) {
  std::string s;
  s += r.quantity == Quantity::U ? "quantity: u\n" : "quantity: per-ind exponent\n";
  for (const auto& t : r.trace)
    s += t.rule + " [" + t.citation + "] " + t.detail + "\n";
  std::string lo = r.lower ? std::to_string(*r.lower) : "unknown";
  std::string hi = r.upper ? std::to_string(*r.upper) : "unknown";
  s += "bounds: [" + lo + ", " + hi + "]" + (r.exact ? " (exact)" : "") + "\n";
  return s;
}

}  // namespace dvcurve
