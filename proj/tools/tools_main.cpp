// Command-line front end: parsing the map text format, dispatching the
// library operations, and emitting JSON reports and SVG diagrams.
//
// Exit codes: 0 success / property holds, 1 property checked false,
// 2 usage or input error (with a JSON error object on stderr).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "plcommute/commutators.hpp"
#include "plcommute/conjugacy.hpp"
#include "plcommute/families.hpp"
#include "plcommute/lattice.hpp"
#include "plcommute/render.hpp"

using json = nlohmann::json;
using namespace plc;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Err::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Err::ParseError, "cannot write " + path);
  out << content;
}

PLMap read_map(const std::string& path) { return parse_plmap(slurp(path)); }

json rational_list(const std::vector<Rational>& rs) {
  json arr = json::array();
  for (const Rational& r : rs) arr.push_back(r.str());
  return arr;
}

json point_list(const std::vector<Point>& pts) {
  json arr = json::array();
  for (const Point& p : pts) arr.push_back({p.x.str(), p.y.str()});
  return arr;
}

json pair_list(const std::vector<std::pair<int, int>>& ps) {
  json arr = json::array();
  for (auto [i, j] : ps) arr.push_back({i, j});
  return arr;
}

json lattice_json(const Lattice& lat) {
  return json{{"n", lat.n},
              {"s", lat.s},
              {"seeds", rational_list(lat.seeds)},
              {"x_lines", rational_list(lat.x_lines)},
              {"psi_lines", rational_list(lat.psi_lines)},
              {"g_lines", rational_list(lat.g_lines)},
              {"y_lines", rational_list(lat.y_lines)},
              {"counts",
               {{"x", lat.x_lines.size()},
                {"psi", lat.psi_lines.size()},
                {"g", lat.g_lines.size()},
                {"y", lat.y_lines.size()}}},
              {"line_counts_hold", lat.line_counts_hold()}};
}

json conjugacy_json(const ConjugacyReport& rep) {
  json violations = json::array();
  for (const auto& v : rep.violations)
    violations.push_back({{"x", v.x.str()}, {"lhs", v.lhs.str()}, {"rhs", v.rhs.str()}});
  return json{{"is_conjugacy", rep.is_conjugacy},
              {"violations", violations},
              {"derivative_at_zero_check", rep.derivative_at_zero_check},
              {"right_leg_check", rep.right_leg_check}};
}

void emit(const json& report, const std::string& out_path) {
  const std::string text = report.dump(2) + "\n";
  std::cout << text;
  if (!out_path.empty()) spit(out_path, text);
}

int run(int argc, char** argv) {
  CLI::App app{"Exact piecewise-linear interval maps: tent-map commutators, "
               "determinating lattices, conjugacies, solution families"};
  app.require_subcommand(1);

  // eval
  std::string eval_g, eval_x;
  auto* cmd_eval = app.add_subcommand("eval", "Evaluate a map at a rational point");
  cmd_eval->add_option("--g", eval_g, "map file")->required();
  cmd_eval->add_option("--x", eval_x, "point p/q in [0,1]")->required();

  // compose
  std::string comp_g, comp_psi, comp_out;
  auto* cmd_comp = app.add_subcommand("compose", "Exact composite g o psi");
  cmd_comp->add_option("--g", comp_g, "outer map file")->required();
  cmd_comp->add_option("--psi", comp_psi, "inner map file")->required();
  cmd_comp->add_option("--out", comp_out, "output map file");

  // xi
  long xi_t = 0;
  std::string xi_out;
  auto* cmd_xi = app.add_subcommand("xi", "Sawtooth commutator of the tent map");
  cmd_xi->add_option("--t", xi_t, "number of monotone pieces")->required();
  cmd_xi->add_option("--out", xi_out, "output map file");

  // commute
  std::string com_g, com_psi, com_method = "both", com_out;
  auto* cmd_com = app.add_subcommand("commute", "Decide g o psi = psi o g");
  cmd_com->add_option("--g", com_g, "map file")->required();
  cmd_com->add_option("--psi", com_psi, "map file")->required();
  cmd_com->add_option("--method", com_method, "exact|sat|both")
      ->check(CLI::IsMember({"exact", "sat", "both"}));
  cmd_com->add_option("--out", com_out, "report file");

  // lattice / pairs
  std::string lat_g, lat_psi, lat_out;
  auto* cmd_lat = app.add_subcommand("lattice", "Determinating lattice of a commuting pair");
  cmd_lat->add_option("--g", lat_g, "map file")->required();
  cmd_lat->add_option("--psi", lat_psi, "map file")->required();
  cmd_lat->add_option("--out", lat_out, "report file");

  std::string pr_g, pr_psi, pr_out;
  auto* cmd_pairs = app.add_subcommand("pairs", "Lattice plus intersection points and kink pairs");
  cmd_pairs->add_option("--g", pr_g, "map file")->required();
  cmd_pairs->add_option("--psi", pr_psi, "map file")->required();
  cmd_pairs->add_option("--out", pr_out, "report file");

  // conjugacy find/verify/check
  auto* cmd_conj = app.add_subcommand("conjugacy", "Piecewise-linear conjugacy to the tent map");
  cmd_conj->require_subcommand(1);
  std::string cf_g, cf_out;
  auto* cmd_cfind = cmd_conj->add_subcommand("find", "Construct h with h o tent = g o h");
  cmd_cfind->add_option("--g", cf_g, "map file")->required();
  cmd_cfind->add_option("--out", cf_out, "output file for h");
  std::string cv_f, cv_g, cv_h, cv_out;
  auto* cmd_cver = cmd_conj->add_subcommand("verify", "Check h o f = g o h exactly");
  cmd_cver->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  cmd_cver->add_option("--f", cv_f, "map file")->required();
  cmd_cver->add_option("--g", cv_g, "map file")->required();
  cmd_cver->add_option("--h", cv_h, "candidate conjugacy file")->required();
  cmd_cver->add_option("--out", cv_out, "report file");
  std::string cc_g, cc_out;
  auto* cmd_ccheck = cmd_conj->add_subcommand("check", "Necessary conditions only");
  cmd_ccheck->add_option("--g", cc_g, "map file")->required();
  cmd_ccheck->add_option("--out", cc_out, "report file");

  // family
  std::string fam_id, fam_a, fam_b, fam_out_g, fam_out_psi, fam_out_h;
  long fam_t = 3;
  auto* cmd_fam = app.add_subcommand("family", "Generate a commuting pair from a solution family");
  cmd_fam->add_option("--id", fam_id, "fig9|fig11|fig18")
      ->required()
      ->check(CLI::IsMember({"fig9", "fig11", "fig18"}));
  cmd_fam->add_option("--a", fam_a, "parameter a = p/q")->required();
  cmd_fam->add_option("--b", fam_b, "parameter b = p/q (fig11, fig18)");
  cmd_fam->add_option("--t", fam_t, "pieces of the commutator (default 3)");
  cmd_fam->add_option("--out-g", fam_out_g, "output file for g");
  cmd_fam->add_option("--out-psi", fam_out_psi, "output file for psi");
  cmd_fam->add_option("--out-h", fam_out_h, "output file for h");

  // complete-left
  std::string cl_gl, cl_out;
  auto* cmd_cl = app.add_subcommand("complete-left", "Complete an increasing leg to a unimodal map");
  cmd_cl->add_option("--gl", cl_gl, "leg file: points from (0,0) to (v,1)")->required();
  cmd_cl->add_option("--out", cl_out, "output map file");

  // render
  std::string rn_g, rn_psi, rn_out;
  std::vector<std::string> rn_sats;
  bool rn_labels = false;
  auto* cmd_rn = app.add_subcommand("render", "Four-quadrant SVG diagram");
  cmd_rn->add_option("--g", rn_g, "map file")->required();
  cmd_rn->add_option("--psi", rn_psi, "map file")->required();
  cmd_rn->add_flag("--labels", rn_labels, "label the intersection points");
  cmd_rn->add_option("--x", rn_sats, "highlight the SAT through this point (repeatable)");
  cmd_rn->add_option("--out", rn_out, "output SVG file")->required();

  CLI11_PARSE(app, argc, argv);

  if (*cmd_eval) {
    std::cout << read_map(eval_g)(Rational::parse(eval_x)).str() << "\n";
    return 0;
  }

  if (*cmd_comp) {
    const std::string text = to_text(compose(read_map(comp_g), read_map(comp_psi)));
    std::cout << text << "\n";
    if (!comp_out.empty()) spit(comp_out, text + "\n");
    return 0;
  }

  if (*cmd_xi) {
    const std::string text = to_text(xi(xi_t));
    std::cout << text << "\n";
    if (!xi_out.empty()) spit(xi_out, text + "\n");
    return 0;
  }

  if (*cmd_com) {
    const PLMap g = read_map(com_g), psi = read_map(com_psi);
    json report{{"method", com_method}};
    bool verdict = false;
    if (com_method == "sat") {
      std::vector<Rational> checked;
      verdict = sat_commutes(g, psi, &checked);
      report["commutes"] = verdict;
      report["checked_points"] = rational_list(checked);
    } else {
      const CommuteReport rep = commutes(g, psi);
      verdict = rep.commutes;
      report["commutes"] = rep.commutes;
      report["checked_points"] = rational_list(rep.checked_points);
      if (rep.witness)
        report["witness"] = {{"x", rep.witness->x.str()},
                             {"lhs", rep.witness->lhs.str()},
                             {"rhs", rep.witness->rhs.str()}};
      else
        report["witness"] = nullptr;
      if (com_method == "both") {
        report["sat_checked"] = rep.sat_checked;
        if (rep.sat_checked) report["sat_verdict"] = rep.sat_verdict;
      }
      bool relations_hold = true;
      for (const SlopeRelation& rel : chain_rule_check(g, psi)) relations_hold = relations_hold && rel.holds;
      report["chain_rule_holds"] = relations_hold;
      const auto n = is_iterate(psi, g);
      report["psi_iterate_of_g"] = n ? json(*n) : json(nullptr);
      report["psi_pieces"] = classify(psi).monotone_piece_count;
    }
    emit(report, com_out);
    return verdict ? 0 : 1;
  }

  const auto full_lattice_report = [](const PLMap& g, const PLMap& psi) {
    const Lattice lat = determinating_lattice(g, psi);
    const AbcdPoints pts = abcd_points(g, psi, lat);
    const KinkPairSets pq = kink_pairs(g, psi, lat);
    json report = lattice_json(lat);
    report["A"] = point_list(pts.A);
    report["B"] = point_list(pts.B);
    report["C"] = point_list(pts.C);
    report["D"] = point_list(pts.D);
    report["P"] = pair_list(pq.P);
    report["Q"] = pair_list(pq.Q);
    return report;
  };

  if (*cmd_lat) {
    emit(full_lattice_report(read_map(lat_g), read_map(lat_psi)), lat_out);
    return 0;
  }

  if (*cmd_pairs) {
    emit(full_lattice_report(read_map(pr_g), read_map(pr_psi)), pr_out);
    return 0;
  }

  if (*cmd_cfind) {
    const auto h = find_tent_conjugacy(read_map(cf_g));
    json report{{"found", h.has_value()}, {"h", h ? json(to_text(*h)) : json(nullptr)}};
    emit(report, "");
    if (h && !cf_out.empty()) spit(cf_out, to_text(*h) + "\n");
    return h ? 0 : 1;
  }

  if (*cmd_cver) {
    const ConjugacyReport rep = verify_conjugacy(read_map(cv_f), read_map(cv_g), read_map(cv_h));
    emit(conjugacy_json(rep), cv_out);
    return rep.is_conjugacy ? 0 : 1;
  }

  if (*cmd_ccheck) {
    const ConjugacyReport rep = tent_necessary_conditions(read_map(cc_g));
    json report{{"derivative_at_zero_check", rep.derivative_at_zero_check},
                {"right_leg_check", rep.right_leg_check}};
    emit(report, cc_out);
    return rep.derivative_at_zero_check && rep.right_leg_check ? 0 : 1;
  }

  if (*cmd_fam) {
    const Rational a = Rational::parse(fam_a);
    FamilyInstance inst = [&] {
      if (fam_id == "fig9") {
        if (!fam_b.empty()) throw Error(Err::ParamOutOfRange, "fig9 takes only --a");
        return family_fig9(a);
      }
      if (fam_b.empty()) throw Error(Err::ParamOutOfRange, fam_id + " needs --b");
      const Rational b = Rational::parse(fam_b);
      return fam_id == "fig11" ? family_fig11(a, b) : family_fig18(a, b);
    }();
    if (fam_t != 3) inst.psi = conjugate(xi(fam_t), *inst.h);

    json params;
    for (const auto& [name, value] : inst.params) params[name] = value.str();
    json report{{"family_id", inst.family_id},
                {"t", fam_t},
                {"params", params},
                {"g", to_text(inst.g)},
                {"psi", to_text(inst.psi)},
                {"h", to_text(*inst.h)}};
    emit(report, "");
    if (!fam_out_g.empty()) spit(fam_out_g, to_text(inst.g) + "\n");
    if (!fam_out_psi.empty()) spit(fam_out_psi, to_text(inst.psi) + "\n");
    if (!fam_out_h.empty()) spit(fam_out_h, to_text(*inst.h) + "\n");
    return 0;
  }

  if (*cmd_cl) {
    const PLMap g = complete_from_left(parse_points(slurp(cl_gl)));
    const std::string text = to_text(g);
    std::cout << text << "\n";
    if (!cl_out.empty()) spit(cl_out, text + "\n");
    return 0;
  }

  if (*cmd_rn) {
    QuadrantScene scene{read_map(rn_g), read_map(rn_psi), std::nullopt, {}, rn_labels};
    const bool commuting = compose(scene.g, scene.psi) == compose(scene.psi, scene.g);
    if (commuting && !(scene.psi.piece_count() == 1 && scene.psi.slope(0) == Rational(0)))
      scene.lattice = determinating_lattice(scene.g, scene.psi);
    for (const std::string& x : rn_sats)
      scene.highlighted_sats.push_back(sat(scene.g, scene.psi, Rational::parse(x)));
    spit(rn_out, render_quadrant_svg(scene));
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << json{{"error", err_name(e.kind())}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }
}
