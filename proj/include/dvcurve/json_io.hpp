#ifndef DVCURVE_JSON_IO_HPP
#define DVCURVE_JSON_IO_HPP

#include <json.hpp>

#include "dvcurve/branches.hpp"
#include "dvcurve/cartan.hpp"
#include "dvcurve/graphs.hpp"
#include "dvcurve/invariants.hpp"
#include "dvcurve/series.hpp"
#include "dvcurve/weierstrass.hpp"

namespace dvcurve::io {

// Insertion-ordered JSON keeps CLI output byte-stable across runs.
using Json = nlohmann::ordered_json;

Json field_json(const GroundField& f);
GroundField field_from(const Json& j);

Json coeff_json(const FieldElem& c);                          // canonical string
FieldElem coeff_from(const Json& j, const GroundField& f);    // string or int

Json poly_json(const FPoly& p);  // ascending coefficient strings
FPoly poly_from(const Json& j, const GroundField& f);

Json tx_json(const SeriesTx& s);
SeriesTx tx_from(const Json& j, const Precision& dflt);

Json ttx_json(const SeriesTTx& s);
SeriesTTx ttx_from(const Json& j, const Precision& dflt);

Json laurentt_json(const SeriesLaurentT& s);
SeriesLaurentT laurentt_from(const Json& j, const Precision& dflt);
LaurentPoly laurent_level_from(const Json& j, const GroundField& f, int xprec);
Json laurent_level_json(const LaurentPoly& p);

Json xy_json(const SeriesXY& s);
SeriesXY xy_from(const Json& j, const Precision& dflt);

Json poly_over_t_json(const PolyOverT& g);
PolyOverT poly_over_t_from(const Json& j, const GroundField& f, int tprec);

Json matrix_json(const RingMatrix& m);
RingMatrix matrix_from(const Json& j, const Precision& dflt);

Json graph_json(const ReductionGraph& g);
ReductionGraph graph_from(const Json& j);
Json cover_json(const GraphCover& c);
GraphCover cover_from(const Json& j);
Json cover_report_json(const CoverReport& r);

Json descriptor_json(const FieldDescriptor& f);
FieldDescriptor descriptor_from(const Json& j);
Json bound_json(const BoundResult& r);

Json branch_json(const BranchData& b);
Json obstruction_json(const ObstructionReport& r);

// Parse with ParseError on malformed input.
Json parse(const std::string& text);

}  // namespace dvcurve::io

#endif
