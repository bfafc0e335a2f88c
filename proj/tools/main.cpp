// Command-line front end: every library operation behind a subcommand with
// JSON input/output, suitable for scripting and golden-file tests.
//
// Exit codes: 0 success, 1 parse/usage, 2 precondition failure,
// 3 precision exhausted.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dvcurve/json_io.hpp"

using namespace dvcurve;
using io::Json;

namespace {

struct CommonOpts {
  std::string input_path;
  std::string inline_json;
  std::string output_path;
  Precision prec;
  std::string field_spec;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("-i,--input", o.input_path, "input JSON file ('-' for stdin)");
  cmd->add_option("--json", o.inline_json, "inline JSON input");
  cmd->add_option("-o,--output", o.output_path, "output file (default stdout)");
  cmd->add_option("--nt", o.prec.n_t, "t-adic precision (default 8)");
  cmd->add_option("--nx", o.prec.n_x, "x window (default 12)");
  cmd->add_option("--mx", o.prec.m_x, "Laurent principal-part window (default 8)");
  cmd->add_option("--field", o.field_spec, "default ground field: q or fp:<p>");
}

Json read_input(const CommonOpts& o) {
  if (!o.inline_json.empty()) return io::parse(o.inline_json);
  if (o.input_path.empty())
    fail(ErrorCode::ParseError, "no input: pass --input or --json");
  if (o.input_path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return io::parse(ss.str());
  }
  std::ifstream in(o.input_path);
  if (!in) fail(ErrorCode::ParseError, "cannot open input file " + o.input_path);
  std::stringstream ss;
  ss << in.rdbuf();
  return io::parse(ss.str());
}

// fill in a default field for inputs that omit it
Json with_field(Json j, const CommonOpts& o) {
  if (j.is_object() && !j.contains("field") && !o.field_spec.empty()) {
    if (o.field_spec == "q" || o.field_spec == "Q") {
      j["field"] = io::field_json(GroundField::rationals());
    } else if (o.field_spec.rfind("fp:", 0) == 0) {
      j["field"] = io::field_json(
          GroundField::prime_field(std::stoll(o.field_spec.substr(3))));
    } else {
      fail(ErrorCode::ParseError, "bad --field spec '" + o.field_spec + "'");
    }
  }
  return j;
}

GroundField field_of(const Json& j, const CommonOpts& o) {
  Json withf = with_field(j, o);
  if (!withf.contains("field"))
    fail(ErrorCode::ParseError, "input needs a field (or pass --field)");
  return io::field_from(withf.at("field"));
}

void write_output(const Json& j, const CommonOpts& o) {
  std::string text = j.dump(2) + "\n";
  if (o.output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.output_path);
    if (!out) fail(ErrorCode::ParseError, "cannot open output file " + o.output_path);
    out << text;
  }
}

void write_text(const std::string& text, const CommonOpts& o) {
  if (o.output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.output_path);
    out << text;
  }
}

FactorDirection parse_direction(const std::string& d) {
  if (d == "pu") return FactorDirection::PTimesU;
  if (d == "up") return FactorDirection::PprimeTimesUprime;
  fail(ErrorCode::ParseError, "direction must be pu or up");
}

Json pair_json(const FactorizationPair& pair, const RingMatrix& a) {
  Json j;
  j["direction"] = pair.direction == FactorDirection::PTimesU ? "pu" : "up";
  j["left"] = io::matrix_json(pair.left);
  j["right"] = io::matrix_json(pair.right);
  j["residual_norm"] = (pair.left * pair.right - a).t_order();
  j["step_orders"] = pair.step_orders;
  j["consumed_window"] = pair.consumed_window;
  return j;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"toolkit for truncated series, matrix factorization, branch "
               "valuations, reduction-graph covers and field invariants over "
               "complete discrete valuation rings"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string ring = "Tx";
  std::string direction = "pu";
  int cover_n = 0;
  bool roots_of_unity = false;
  bool explain_flag = false;
  std::string dot_path;

  auto* c_prepare = app.add_subcommand("prepare", "Weierstrass preparation of a series");
  add_common(c_prepare, o);
  c_prepare->add_option("--ring", ring, "ambient ring: Tx, TTx or LaurentT");

  auto* c_divide = app.add_subcommand("divide", "Weierstrass division in T[[x]]");
  add_common(c_divide, o);

  auto* c_factor = app.add_subcommand("factor-matrix", "factor A = left*right over k((x^-1))[[t]]");
  add_common(c_factor, o);
  c_factor->add_option("--direction", direction, "pu or up");

  auto* c_patch = app.add_subcommand("solve-patch", "solve a free-module patching problem");
  add_common(c_patch, o);
  c_patch->add_option("--direction", direction, "pu or up");

  auto* c_split = app.add_subcommand("additive-split", "split a Laurent scalar into P- and U-parts");
  add_common(c_split, o);

  auto* c_bdec = app.add_subcommand("branch-decompose", "branches of a split node");
  add_common(c_bdec, o);

  auto* c_bval = app.add_subcommand("branch-val", "valuation along one branch");
  add_common(c_bval, o);

  auto* c_obst = app.add_subcommand("obstruction", "same-component valuation check");
  add_common(c_obst, o);

  auto* c_cover = app.add_subcommand("split-cover", "build and validate an abelian split cover");
  add_common(c_cover, o);
  c_cover->add_option("--n", cover_n, "cover exponent (default: smallest admissible)");
  c_cover->add_option("--dot", dot_path, "also write the cover as DOT");

  auto* c_choose = app.add_subcommand("choose-n", "smallest n avoiding all two-cycle images");
  add_common(c_choose, o);

  auto* c_vcover = app.add_subcommand("validate-cover", "covering-space checks");
  add_common(c_vcover, o);

  auto* c_ubound = app.add_subcommand("u-bound", "u-invariant bounds for a field tower");
  add_common(c_ubound, o);
  c_ubound->add_flag("--explain", explain_flag, "print the derivation as text");

  auto* c_perind = app.add_subcommand("per-ind", "period-index exponent for a field tower");
  add_common(c_perind, o);
  c_perind->add_flag("--roots-of-unity", roots_of_unity, "assume enough roots of unity");
  c_perind->add_flag("--explain", explain_flag, "print the derivation as text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints usage text
    return code == 0 ? 0 : 1;
  }

  if (c_prepare->parsed()) {
    Json in = with_field(read_input(o), o);
    if (in.contains("ring") && !c_prepare->count("--ring"))
      ring = in.at("ring").get<std::string>();
    Json out;
    if (ring == "Tx") {
      RestrictedFactorization f = prepare_restricted(io::tx_from(in, o.prec));
      out["m"] = f.t_power;
      out["g"] = io::poly_over_t_json(f.poly);
      out["u"] = io::tx_json(f.unit);
    } else if (ring == "TTx") {
      LocalFactorization f = prepare_local(io::ttx_from(in, o.prec));
      out["m"] = f.t_power;
      out["g"] = io::poly_over_t_json(f.poly);
      out["u"] = io::ttx_json(f.unit);
    } else if (ring == "LaurentT") {
      BranchFactorization f = factor_branch(io::laurentt_from(in, o.prec));
      out["zero"] = f.zero;
      out["m"] = f.t_power;
      out["c"] = io::laurentt_json(f.unit);
    } else {
      fail(ErrorCode::ParseError, "unknown ring '" + ring + "'");
    }
    write_output(out, o);
  } else if (c_divide->parsed()) {
    Json in = read_input(o);
    if (!in.contains("f") || !in.contains("g"))
      fail(ErrorCode::ParseError, "divide expects {\"f\": series, \"g\": poly}");
    SeriesTTx f = io::ttx_from(with_field(in.at("f"), o), o.prec);
    PolyOverT g = io::poly_over_t_from(in.at("g"), f.field(), f.tprec());
    auto [q, r] = weierstrass_divide_local(f, g);
    Json out;
    out["q"] = io::ttx_json(q);
    out["r"] = io::poly_over_t_json(r);
    write_output(out, o);
  } else if (c_factor->parsed() || c_patch->parsed()) {
    Json in = read_input(o);
    RingMatrix a = io::matrix_from(in, o.prec);
    if (c_factor->parsed()) {
      FactorizationPair pair = cartan_factor(a, parse_direction(direction));
      write_output(pair_json(pair, a), o);
    } else {
      PatchSolution sol = solve_patching_problem(a);
      Json out = pair_json(sol.factors, a);
      Json cert;
      cert["identity_ok"] = sol.certificate.identity_ok;
      cert["residual_t_order"] = sol.certificate.residual_t_order;
      cert["step_orders"] = sol.certificate.step_orders;
      cert["consumed_window"] = sol.certificate.consumed_window;
      out["certificate"] = cert;
      write_output(out, o);
    }
  } else if (c_split->parsed()) {
    Json in = read_input(o);
    if (!in.contains("f")) fail(ErrorCode::ParseError, "additive-split expects {\"f\": laurent}");
    GroundField k = field_of(in, o);
    LaurentPoly f = io::laurent_level_from(in.at("f"), k, o.prec.n_x);
    auto [p, u] = additive_split(f);
    Json out;
    out["f_p"] = io::laurent_level_json(p);
    out["f_u"] = io::laurent_level_json(u);
    write_output(out, o);
  } else if (c_bdec->parsed()) {
    Json in = read_input(o);
    if (!in.contains("t")) fail(ErrorCode::ParseError, "branch-decompose expects {\"t\": series}");
    NodalLocalRing ring_data{io::xy_from(with_field(in.at("t"), o), o.prec)};
    Json out;
    Json arr = Json::array();
    for (const auto& b : branch_decompose(ring_data)) arr.push_back(io::branch_json(b));
    out["branches"] = arr;
    write_output(out, o);
  } else if (c_bval->parsed()) {
    Json in = read_input(o);
    if (!in.contains("t") || !in.contains("a") || !in.contains("branch"))
      fail(ErrorCode::ParseError, "branch-val expects {\"t\", \"a\", \"branch\"}");
    NodalLocalRing ring_data{io::xy_from(with_field(in.at("t"), o), o.prec)};
    SeriesXY a = io::xy_from(with_field(in.at("a"), o), o.prec);
    int idx = in.at("branch").get<int>();
    auto branches = branch_decompose(ring_data);
    if (idx < 0 || idx >= static_cast<int>(branches.size()))
      fail(ErrorCode::ParseError, "branch index out of range");
    Json out;
    out["v"] = branch_valuation(a, branches[static_cast<size_t>(idx)]);
    write_output(out, o);
  } else if (c_obst->parsed()) {
    Json in = read_input(o);
    if (!in.contains("t") || !in.contains("a"))
      fail(ErrorCode::ParseError, "obstruction expects {\"t\", \"a\"}");
    NodalLocalRing ring_data{io::xy_from(with_field(in.at("t"), o), o.prec)};
    SeriesXY a = io::xy_from(with_field(in.at("a"), o), o.prec);
    std::optional<std::vector<std::string>> comps;
    if (in.contains("components"))
      comps = in.at("components").get<std::vector<std::string>>();
    ObstructionReport rep =
        obstruction_check(a, ring_data, comps ? &*comps : nullptr);
    write_output(io::obstruction_json(rep), o);
  } else if (c_cover->parsed()) {
    Json in = read_input(o);
    ReductionGraph g = io::graph_from(in);
    CycleBasisData basis = cycle_rank(g);
    auto cycles = two_cycle_images(g, basis);
    Json out;
    out["rank"] = basis.rank;
    out["chords"] = basis.chords;
    Json cyc = Json::array();
    std::vector<std::vector<long long>> images;
    for (const auto& c : cycles) {
      Json e;
      e["edges"] = Json::array({c.edge_a, c.edge_b});
      e["image"] = c.image;
      cyc.push_back(e);
      images.push_back(c.image);
    }
    out["two_cycles"] = cyc;
    int n = cover_n;
    if (n <= 0) n = images.empty() ? 1 : choose_n(images);
    out["n"] = n;
    GraphCover cover = build_abelian_cover(g, basis, n);
    out["cover"] = io::cover_json(cover);
    out["report"] = io::cover_report_json(validate_cover(cover));
    if (!dot_path.empty()) {
      std::ofstream dot(dot_path);
      dot << to_dot(cover);
    }
    write_output(out, o);
  } else if (c_choose->parsed()) {
    Json in = read_input(o);
    if (!in.contains("images")) fail(ErrorCode::ParseError, "choose-n expects {\"images\": [[..]]}");
    auto images = in.at("images").get<std::vector<std::vector<long long>>>();
    Json out;
    out["n"] = choose_n(images);
    write_output(out, o);
  } else if (c_vcover->parsed()) {
    Json in = read_input(o);
    GraphCover cover = io::cover_from(in);
    write_output(io::cover_report_json(validate_cover(cover)), o);
  } else if (c_ubound->parsed()) {
    FieldDescriptor f = io::descriptor_from(read_input(o));
    BoundResult r = compute_u_bounds(f);
    if (explain_flag)
      write_text(explain(r), o);
    else
      write_output(io::bound_json(r), o);
  } else if (c_perind->parsed()) {
    FieldDescriptor f = io::descriptor_from(read_input(o));
    BoundResult r = compute_per_ind(f, roots_of_unity);
    if (explain_flag)
      write_text(explain(r), o);
    else
      write_output(io::bound_json(r), o);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_class();
  } catch (const Json::exception& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
