// Shared generators and independent oracles for the test suites.
#ifndef DVCURVE_TEST_UTIL_HPP
#define DVCURVE_TEST_UTIL_HPP

#include <random>
#include <string>
#include <vector>

#include "dvcurve/cartan.hpp"
#include "dvcurve/graphs.hpp"
#include "dvcurve/series.hpp"

namespace testutil {

using namespace dvcurve;

using Rng = std::mt19937;

inline FieldElem random_elem(Rng& rng, const GroundField& f) {
  if (f.kind() == FieldKind::Rationals) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    return FieldElem::from_ratio(f, num(rng), den(rng));
  }
  std::uniform_int_distribution<long long> d(0, f.prime() - 1);
  return FieldElem::from_integer(f, d(rng));
}

inline FieldElem random_nonzero(Rng& rng, const GroundField& f) {
  while (true) {
    FieldElem e = random_elem(rng, f);
    if (!e.is_zero()) return e;
  }
}

inline FPoly random_poly(Rng& rng, const GroundField& f, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  FPoly p(f);
  int d = deg(rng);
  for (int i = 0; i <= d; ++i) p.set_coeff(i, random_elem(rng, f));
  return p;
}

inline SeriesTx random_tx(Rng& rng, const GroundField& f, int tprec, int max_deg) {
  SeriesTx s(f, tprec);
  for (int i = 0; i < tprec; ++i) s.set_level(i, random_poly(rng, f, max_deg));
  return s;
}

inline SeriesTx random_tx_nonzero(Rng& rng, const GroundField& f, int tprec, int max_deg) {
  while (true) {
    SeriesTx s = random_tx(rng, f, tprec, max_deg);
    if (!s.is_zero()) return s;
  }
}

inline SeriesTTx random_ttx(Rng& rng, const GroundField& f, int tprec, int xprec) {
  SeriesTTx s(f, tprec, xprec);
  for (int i = 0; i < tprec; ++i) s.set_level(i, random_poly(rng, f, xprec - 1));
  return s;
}

inline SeriesTTx random_ttx_nonzero(Rng& rng, const GroundField& f, int tprec, int xprec) {
  while (true) {
    SeriesTTx s = random_ttx(rng, f, tprec, xprec);
    if (!s.is_zero()) return s;
  }
}

inline LaurentPoly random_laurent(Rng& rng, const GroundField& f, int xprec,
                                  int lo, int hi) {
  LaurentPoly p(f, xprec);
  for (int e = lo; e <= hi; ++e) {
    FieldElem v = random_elem(rng, f);
    if (!v.is_zero()) p.set_coeff(e, v);
  }
  return p;
}

inline SeriesLaurentT random_laurentt(Rng& rng, const GroundField& f, int tprec,
                                      int xprec, int mx, int lo, int hi) {
  SeriesLaurentT s(f, tprec, xprec, mx);
  for (int i = 0; i < tprec; ++i)
    s.set_level(i, random_laurent(rng, f, xprec, lo, hi));
  return s;
}

// unit congruent to 1 mod t
inline SeriesTx random_unit_one_mod_t(Rng& rng, const GroundField& f, int tprec,
                                      int max_deg) {
  SeriesTx s(f, tprec);
  s.set_level(0, FPoly::constant(FieldElem::one(f)));
  for (int i = 1; i < tprec; ++i) s.set_level(i, random_poly(rng, f, max_deg));
  return s;
}

inline RingMatrix random_invertible_matrix(Rng& rng, const GroundField& f, int n,
                                           int tprec, int xprec, int mx, int lo,
                                           int hi) {
  while (true) {
    RingMatrix m(n, f, tprec, xprec, mx);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m.set(i, j, random_laurentt(rng, f, tprec, xprec, mx, lo, hi));
    try {
      m.mod_t().inverse();
      return m;
    } catch (const Error&) {
      continue;  // singular mod t; redraw
    }
  }
}

// random bipartite tree built by alternately attaching fresh U- and
// P-vertices
inline ReductionGraph random_tree(Rng& rng, int extra_vertices) {
  ReductionGraph g;
  g.p_labels = {"p0"};
  g.u_labels = {"u0"};
  g.edges.push_back({0, 0, "e0"});
  for (int i = 0; i < extra_vertices; ++i) {
    if (rng() % 2 == 0) {
      int p = static_cast<int>(rng() % g.p_labels.size());
      g.u_labels.push_back("u" + std::to_string(g.u_labels.size()));
      g.edges.push_back({p, static_cast<int>(g.u_labels.size()) - 1,
                         "e" + std::to_string(g.edges.size())});
    } else {
      int u = static_cast<int>(rng() % g.u_labels.size());
      g.p_labels.push_back("p" + std::to_string(g.p_labels.size()));
      g.edges.push_back({static_cast<int>(g.p_labels.size()) - 1, u,
                         "e" + std::to_string(g.edges.size())});
    }
  }
  return g;
}

// ---------------------------------------------------------------- oracles

// Binomial series for (1 + z)^(1/n) over Q: coefficients by the recurrence
// binom(a,k) = binom(a,k-1) * (a - k + 1) / k with a = 1/n.  Independent of
// the Newton path used by the implementation.
inline std::vector<FieldElem> binomial_root_series(const GroundField& q, int n,
                                                   int terms) {
  FieldElem a = FieldElem::from_ratio(q, 1, n);
  std::vector<FieldElem> c;
  c.push_back(FieldElem::one(q));
  for (int k = 1; k < terms; ++k) {
    FieldElem prev = c.back();
    FieldElem factor = (a - FieldElem::from_integer(q, k - 1)) /
                       FieldElem::from_integer(q, k);
    c.push_back(prev * factor);
  }
  return c;
}

// Brute-force oracle for the cover exponent: scan n = 2, 3, ... and test
// membership of every image in n Z^r directly.
inline int brute_choose_n(const std::vector<std::vector<long long>>& images) {
  for (int n = 2;; ++n) {
    bool ok = true;
    for (const auto& v : images) {
      bool all_divisible = true;
      for (long long x : v) all_divisible = all_divisible && (x % n == 0);
      if (all_divisible) ok = false;
    }
    if (ok) return n;
  }
}

}  // namespace testutil

#endif
