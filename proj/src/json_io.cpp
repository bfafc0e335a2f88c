#include "dvcurve/json_io.hpp"

namespace dvcurve::io {

namespace {

Precision prec_from(const Json& j, const Precision& dflt) {
  Precision p = dflt;
  if (j.contains("prec")) {
    const Json& q = j.at("prec");
    if (q.contains("n_t")) p.n_t = q.at("n_t").get<int>();
    if (q.contains("n_x")) p.n_x = q.at("n_x").get<int>();
    if (q.contains("m_x")) p.m_x = q.at("m_x").get<int>();
  }
  return p;
}

Json prec_json(int n_t, int n_x, int m_x) {
  Json j;
  j["n_t"] = n_t;
  j["n_x"] = n_x;
  j["m_x"] = m_x;
  return j;
}

void expect(bool cond, const std::string& what) {
  if (!cond) fail(ErrorCode::ParseError, what);
}

}  // namespace

Json parse(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorCode::ParseError, "malformed JSON input");
  return j;
}

Json field_json(const GroundField& f) {
  Json j;
  if (f.kind() == FieldKind::Rationals) {
    j["kind"] = "Q";
  } else {
    j["kind"] = "Fp";
    j["p"] = f.prime();
  }
  return j;
}

GroundField field_from(const Json& j) {
  expect(j.is_object() && j.contains("kind"), "field needs a kind");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "Q") return GroundField::rationals();
  if (kind == "Fp") {
    expect(j.contains("p"), "prime field needs p");
    return GroundField::prime_field(j.at("p").get<long long>());
  }
  fail(ErrorCode::ParseError, "unknown field kind '" + kind + "'");
}

Json coeff_json(const FieldElem& c) { return c.str(); }

FieldElem coeff_from(const Json& j, const GroundField& f) {
  if (j.is_number_integer()) return FieldElem::from_integer(f, j.get<long long>());
  if (j.is_string()) return FieldElem::from_string(f, j.get<std::string>());
  fail(ErrorCode::ParseError, "coefficient must be an integer or 'n/d' string");
}

Json poly_json(const FPoly& p) {
  Json a = Json::array();
  for (int i = 0; i <= p.degree(); ++i) a.push_back(coeff_json(p.coeff(i)));
  return a;
}

FPoly poly_from(const Json& j, const GroundField& f) {
  expect(j.is_array(), "polynomial must be an array of coefficients");
  FPoly p(f);
  for (size_t i = 0; i < j.size(); ++i)
    p.set_coeff(static_cast<int>(i), coeff_from(j[i], f));
  return p;
}

Json tx_json(const SeriesTx& s) {
  Json j;
  j["ring"] = "Tx";
  j["field"] = field_json(s.field());
  j["prec"] = prec_json(s.tprec(), 0, 0);
  Json c = Json::array();
  for (int i = 0; i < s.tprec(); ++i) c.push_back(poly_json(s.level(i)));
  j["coeffs"] = c;
  return j;
}

SeriesTx tx_from(const Json& j, const Precision& dflt) {
  expect(j.is_object() && j.contains("field") && j.contains("coeffs"),
         "series needs field and coeffs");
  GroundField f = field_from(j.at("field"));
  Precision p = prec_from(j, dflt);
  SeriesTx s(f, p.n_t);
  const Json& c = j.at("coeffs");
  expect(c.is_array(), "coeffs must be an array over t-levels");
  for (size_t i = 0; i < c.size() && static_cast<int>(i) < p.n_t; ++i)
    s.set_level(static_cast<int>(i), poly_from(c[i], f));
  return s;
}

Json ttx_json(const SeriesTTx& s) {
  Json j;
  j["ring"] = "TTx";
  j["field"] = field_json(s.field());
  j["prec"] = prec_json(s.tprec(), s.xprec(), 0);
  Json c = Json::array();
  for (int i = 0; i < s.tprec(); ++i) c.push_back(poly_json(s.level(i)));
  j["coeffs"] = c;
  return j;
}

SeriesTTx ttx_from(const Json& j, const Precision& dflt) {
  expect(j.is_object() && j.contains("field") && j.contains("coeffs"),
         "series needs field and coeffs");
  GroundField f = field_from(j.at("field"));
  Precision p = prec_from(j, dflt);
  SeriesTTx s(f, p.n_t, p.n_x);
  const Json& c = j.at("coeffs");
  expect(c.is_array(), "coeffs must be an array over t-levels");
  for (size_t i = 0; i < c.size() && static_cast<int>(i) < p.n_t; ++i)
    s.set_level(static_cast<int>(i), poly_from(c[i], f));
  return s;
}

Json laurent_level_json(const LaurentPoly& p) {
  Json j;
  if (p.is_zero()) {
    j["lo"] = 0;
    j["c"] = Json::array();
    return j;
  }
  int lo = p.low_exponent(), hi = p.top_exponent();
  j["lo"] = lo;
  Json c = Json::array();
  for (int e = lo; e <= hi; ++e) c.push_back(coeff_json(p.coeff(e)));
  j["c"] = c;
  return j;
}

LaurentPoly laurent_level_from(const Json& j, const GroundField& f, int xprec) {
  LaurentPoly p(f, xprec);
  if (j.is_array()) {
    // plain polynomial shorthand
    for (size_t i = 0; i < j.size(); ++i) {
      FieldElem v = coeff_from(j[i], f);
      if (!v.is_zero()) p.set_coeff(static_cast<int>(i), v);
    }
    return p;
  }
  expect(j.is_object() && j.contains("lo") && j.contains("c"),
         "Laurent level needs lo and c");
  int lo = j.at("lo").get<int>();
  const Json& c = j.at("c");
  expect(c.is_array(), "Laurent coefficients must be an array");
  for (size_t i = 0; i < c.size(); ++i) {
    FieldElem v = coeff_from(c[i], f);
    if (!v.is_zero()) p.set_coeff(lo + static_cast<int>(i), v);
  }
  return p;
}

Json laurentt_json(const SeriesLaurentT& s) {
  Json j;
  j["ring"] = "LaurentT";
  j["field"] = field_json(s.field());
  j["prec"] = prec_json(s.tprec(), s.xprec(), s.mx());
  Json c = Json::array();
  for (int i = 0; i < s.tprec(); ++i) c.push_back(laurent_level_json(s.level(i)));
  j["coeffs"] = c;
  return j;
}

SeriesLaurentT laurentt_from(const Json& j, const Precision& dflt) {
  expect(j.is_object() && j.contains("field") && j.contains("coeffs"),
         "series needs field and coeffs");
  GroundField f = field_from(j.at("field"));
  Precision p = prec_from(j, dflt);
  SeriesLaurentT s(f, p.n_t, p.n_x, p.m_x);
  const Json& c = j.at("coeffs");
  expect(c.is_array(), "coeffs must be an array over t-levels");
  for (size_t i = 0; i < c.size() && static_cast<int>(i) < p.n_t; ++i)
    s.set_level(static_cast<int>(i), laurent_level_from(c[i], f, p.n_x));
  return s;
}

Json xy_json(const SeriesXY& s) {
  Json j;
  j["ring"] = "XY";
  j["field"] = field_json(s.field());
  j["prec"] = prec_json(0, s.deg_window(), 0);
  Json c = Json::array();
  for (int b = 0; b < s.deg_window(); ++b) c.push_back(poly_json(s.ycoeff(b)));
  j["coeffs"] = c;
  return j;
}

SeriesXY xy_from(const Json& j, const Precision& dflt) {
  expect(j.is_object() && j.contains("field") && j.contains("coeffs"),
         "series needs field and coeffs");
  GroundField f = field_from(j.at("field"));
  Precision p = prec_from(j, dflt);
  SeriesXY s(f, p.n_x);
  const Json& c = j.at("coeffs");
  expect(c.is_array(), "coeffs must be an array over y-degrees");
  for (size_t b = 0; b < c.size() && static_cast<int>(b) < p.n_x; ++b)
    s.set_ycoeff(static_cast<int>(b), poly_from(c[b], f));
  return s;
}

Json poly_over_t_json(const PolyOverT& g) {
  Json j;
  j["field"] = field_json(g.field());
  j["n_t"] = g.tprec();
  Json c = Json::array();
  for (int x = 0; x <= g.degree(); ++x) c.push_back(poly_json(g.xcoeff(x)));
  j["coeffs"] = c;
  return j;
}

PolyOverT poly_over_t_from(const Json& j, const GroundField& f, int tprec) {
  expect(j.is_object() && j.contains("coeffs"), "poly-over-T needs coeffs");
  int nt = j.contains("n_t") ? j.at("n_t").get<int>() : tprec;
  PolyOverT g(f, nt);
  const Json& c = j.at("coeffs");
  expect(c.is_array(), "poly-over-T coeffs must be an array over x-powers");
  for (size_t x = 0; x < c.size(); ++x)
    g.set_xcoeff(static_cast<int>(x), poly_from(c[x], f));
  return g;
}

Json matrix_json(const RingMatrix& m) {
  Json j;
  j["n"] = m.dim();
  Json rows = Json::array();
  for (int i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(laurentt_json(m.at(i, c)));
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j;
}

RingMatrix matrix_from(const Json& j, const Precision& dflt) {
  expect(j.is_object() && j.contains("n") && j.contains("entries"),
         "matrix needs n and entries");
  int n = j.at("n").get<int>();
  expect(n >= 1, "matrix dimension must be positive");
  const Json& rows = j.at("entries");
  expect(rows.is_array() && static_cast<int>(rows.size()) == n, "bad row count");
  GroundField f = field_from(rows[0][0].at("field"));
  RingMatrix m(n, f, dflt.n_t, dflt.n_x, dflt.m_x);
  for (int i = 0; i < n; ++i) {
    expect(rows[static_cast<size_t>(i)].is_array() &&
               static_cast<int>(rows[static_cast<size_t>(i)].size()) == n,
           "bad column count");
    for (int c = 0; c < n; ++c)
      m.set(i, c, laurentt_from(rows[static_cast<size_t>(i)][static_cast<size_t>(c)], dflt));
  }
  return m;
}

Json graph_json(const ReductionGraph& g) {
  Json j;
  j["p"] = g.p_labels;
  j["u"] = g.u_labels;
  Json e = Json::array();
  for (const auto& ed : g.edges) e.push_back(Json::array({ed.p, ed.u, ed.branch}));
  j["edges"] = e;
  return j;
}

ReductionGraph graph_from(const Json& j) {
  expect(j.is_object() && j.contains("p") && j.contains("u") && j.contains("edges"),
         "graph needs p, u, edges");
  ReductionGraph g;
  for (const auto& l : j.at("p")) g.p_labels.push_back(l.get<std::string>());
  for (const auto& l : j.at("u")) g.u_labels.push_back(l.get<std::string>());
  for (const auto& e : j.at("edges")) {
    expect(e.is_array() && e.size() >= 2, "edge must be [p, u, label?]");
    ReductionGraph::Edge ed;
    ed.p = e[0].get<int>();
    ed.u = e[1].get<int>();
    ed.branch = e.size() > 2 ? e[2].get<std::string>() : "";
    expect(ed.p >= 0 && ed.p < static_cast<int>(g.p_labels.size()), "edge p out of range");
    expect(ed.u >= 0 && ed.u < static_cast<int>(g.u_labels.size()), "edge u out of range");
    g.edges.push_back(ed);
  }
  return g;
}

Json cover_json(const GraphCover& c) {
  Json j;
  j["base"] = graph_json(c.base);
  j["n"] = c.n;
  j["r"] = c.rank;
  j["degree"] = c.degree();
  Json vs = Json::array();
  for (const auto& v : c.vertices) vs.push_back(Json::array({v.base_vertex, v.group_elem}));
  j["vertices"] = vs;
  Json es = Json::array();
  for (const auto& e : c.edges) es.push_back(Json::array({e.base_edge, e.from, e.to}));
  j["edges"] = es;
  return j;
}

GraphCover cover_from(const Json& j) {
  expect(j.is_object() && j.contains("base") && j.contains("vertices") &&
             j.contains("edges"),
         "cover needs base, vertices, edges");
  GraphCover c;
  c.base = graph_from(j.at("base"));
  c.n = j.contains("n") ? j.at("n").get<int>() : 1;
  c.rank = j.contains("r") ? j.at("r").get<int>() : 0;
  for (const auto& v : j.at("vertices")) {
    GraphCover::Vertex vx;
    vx.base_vertex = v[0].get<int>();
    for (const auto& gcoord : v[1]) vx.group_elem.push_back(gcoord.get<int>());
    c.vertices.push_back(vx);
  }
  for (const auto& e : j.at("edges"))
    c.edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
  return c;
}

Json cover_report_json(const CoverReport& r) {
  Json j;
  j["star_bijection"] = r.star_bijection;
  j["bipartite"] = r.bipartite;
  j["connected"] = r.connected;
  j["no_parallel_edges"] = r.no_parallel_edges;
  j["all_pass"] = r.all_pass();
  return j;
}

Json descriptor_json(const FieldDescriptor& f) {
  Json j;
  Json tw = Json::array();
  for (const auto& s : f.tower) {
    Json e;
    switch (s.kind) {
      case StepKind::Base:
        switch (s.base) {
          case BaseKind::AlgClosed: e["kind"] = "AlgClosed"; break;
          case BaseKind::Finite: e["kind"] = "Finite"; break;
          case BaseKind::Cd:
            e["kind"] = "Cd";
            e["d"] = s.d;
            break;
          case BaseKind::SepClosedAwayFromP: e["kind"] = "SepClosedAwayFromP"; break;
          case BaseKind::BrauerDim:
            e["kind"] = "BrauerDim";
            e["d"] = s.d;
            e["away_from_p"] = s.away_from_p;
            break;
          case BaseKind::ExplicitU:
            e["kind"] = "ExplicitU";
            e["u"] = s.u;
            e["u_s"] = s.u_s;
            break;
        }
        break;
      case StepKind::CompleteDV: e["kind"] = "CompleteDV"; break;
      case StepKind::TwoDimLocal: e["kind"] = "TwoDimLocal"; break;
      case StepKind::ModelPoint: e["kind"] = "ModelPoint"; break;
    }
    tw.push_back(e);
  }
  j["tower"] = tw;
  switch (f.char_kind) {
    case CharSpec::Zero: j["char"] = "0"; break;
    case CharSpec::SymbolicP: j["char"] = "p"; break;
    case CharSpec::Concrete: j["char"] = f.char_p; break;
  }
  return j;
}

FieldDescriptor descriptor_from(const Json& j) {
  expect(j.is_object() && j.contains("tower"), "descriptor needs a tower");
  FieldDescriptor f;
  for (const auto& e : j.at("tower")) {
    expect(e.is_object() && e.contains("kind"), "tower step needs a kind");
    std::string kind = e.at("kind").get<std::string>();
    TowerStep s;
    if (kind == "AlgClosed") {
      s.kind = StepKind::Base;
      s.base = BaseKind::AlgClosed;
    } else if (kind == "Finite") {
      s.kind = StepKind::Base;
      s.base = BaseKind::Finite;
    } else if (kind == "Cd") {
      s.kind = StepKind::Base;
      s.base = BaseKind::Cd;
      expect(e.contains("d"), "Cd needs d");
      s.d = e.at("d").get<int>();
    } else if (kind == "SepClosedAwayFromP") {
      s.kind = StepKind::Base;
      s.base = BaseKind::SepClosedAwayFromP;
    } else if (kind == "BrauerDim") {
      s.kind = StepKind::Base;
      s.base = BaseKind::BrauerDim;
      expect(e.contains("d"), "BrauerDim needs d");
      s.d = e.at("d").get<int>();
      if (e.contains("away_from_p")) s.away_from_p = e.at("away_from_p").get<bool>();
    } else if (kind == "ExplicitU") {
      s.kind = StepKind::Base;
      s.base = BaseKind::ExplicitU;
      expect(e.contains("u") && e.contains("u_s"), "ExplicitU needs u and u_s");
      s.u = e.at("u").get<long long>();
      s.u_s = e.at("u_s").get<long long>();
    } else if (kind == "CompleteDV") {
      s.kind = StepKind::CompleteDV;
    } else if (kind == "TwoDimLocal") {
      s.kind = StepKind::TwoDimLocal;
    } else if (kind == "ModelPoint") {
      s.kind = StepKind::ModelPoint;
    } else {
      fail(ErrorCode::ParseError, "unknown tower step kind '" + kind + "'");
    }
    f.tower.push_back(s);
  }
  if (j.contains("char")) {
    const Json& c = j.at("char");
    if (c.is_string()) {
      std::string v = c.get<std::string>();
      if (v == "0")
        f.char_kind = CharSpec::Zero;
      else if (v == "p")
        f.char_kind = CharSpec::SymbolicP;
      else {
        f.char_kind = CharSpec::Concrete;
        f.char_p = std::stoll(v);
      }
    } else {
      long long v = c.get<long long>();
      if (v == 0)
        f.char_kind = CharSpec::Zero;
      else {
        f.char_kind = CharSpec::Concrete;
        f.char_p = v;
      }
    }
  }
  return f;
}

Json bound_json(const BoundResult& r) {
  Json j;
  j["quantity"] = r.quantity == Quantity::U ? "u" : "per_ind_exponent";
  j["lower"] = r.lower ? Json(*r.lower) : Json(nullptr);
  j["upper"] = r.upper ? Json(*r.upper) : Json(nullptr);
  j["exact"] = r.exact;
  Json tr = Json::array();
  for (const auto& t : r.trace) {
    Json e;
    e["rule"] = t.rule;
    e["citation"] = t.citation;
    e["detail"] = t.detail;
    tr.push_back(e);
  }
  j["trace"] = tr;
  return j;
}

Json branch_json(const BranchData& b) {
  Json j;
  j["phi"] = poly_json(b.phi);
  j["generator"] = xy_json(b.generator);
  j["component"] = b.component_id;
  return j;
}

Json obstruction_json(const ObstructionReport& r) {
  Json j;
  Json vals;
  for (size_t i = 0; i < r.valuations.size(); ++i)
    vals["branch" + std::to_string(i)] = r.valuations[i];
  j["valuations"] = vals;
  j["verdict"] = r.pass ? "pass" : "fail";
  if (r.witness) {
    Json w;
    w["branches"] = Json::array({r.witness->branch_a, r.witness->branch_b});
    w["v"] = Json::array({r.witness->v_a, r.witness->v_b});
    j["witness"] = w;
  }
  return j;
}

}  // namespace dvcurve::io
