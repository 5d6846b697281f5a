#include "critfix/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "critfix/blowup.hpp"
#include "critfix/enumerate.hpp"
#include "critfix/hurwitz.hpp"
#include "critfix/io.hpp"
#include "critfix/partitions.hpp"
#include "critfix/ratmap.hpp"
#include "critfix/realize.hpp"
#include "critfix/tischler.hpp"

namespace critfix {

namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json flags_json(const PartitionFlags& f) {
  return {{"polynomial_type", f.polynomial_type},
          {"newton_candidate", f.newton_candidate},
          {"belyi_candidate", f.belyi_candidate}};
}

// "v0: 1 2 2" per vertex, neighbors in counterclockwise order
std::string rotation_text(const PlanarMap& g) {
  std::ostringstream s;
  for (int v = 0; v < g.vertex_count(); ++v) {
    s << "  v" << v << ":";
    for (int x : g.vertex_darts(v)) s << " " << g.vertex_of(g.opp(x));
    s << "\n";
  }
  return s.str();
}

json graph_entry(const PlanarMap& g) {
  json j = graph_to_json(g);
  j["valences"] = valence_partition(g);
  return j;
}

void emit_file_or_stream(const std::string& path, const json& j, std::ostream& out) {
  if (path.empty() || path == "-")
    out << dump(j);
  else
    write_json_file(path, j);
}

json wreath_json(const WreathRecursion& rec) {
  json gens = json::object();
  for (int i = 0; i < rec.n; ++i) {
    json words = json::array();
    for (const auto& w : rec.entries[i].words) words.push_back(w.to_compact());
    gens["g" + std::to_string(i + 1)] = {{"words", words}, {"perm", rec.entries[i].perm.to_string()}};
  }
  return gens;
}

json tischler_json(const TischlerGraph& t) {
  json j = graph_to_json(t.map);
  json col = json::object();
  for (int v = 0; v < t.map.vertex_count(); ++v)
    col[std::to_string(t.map.vertex_darts(v).front())] = t.color[v] == Color::C ? "C" : "R";
  j["coloring"] = col;
  return j;
}

TischlerGraph tischler_from_json(const json& j) {
  TischlerGraph t;
  t.map = graph_from_json(j);
  if (!j.contains("coloring") || !j["coloring"].is_object()) throw DomainError("tischler document needs a coloring object");
  t.color.assign(t.map.vertex_count(), Color::C);
  std::vector<bool> seen(t.map.vertex_count(), false);
  for (const auto& [k, val] : j["coloring"].items()) {
    int x = -1;
    try {
      x = std::stoi(k);
    } catch (const std::exception&) {
      throw DomainError("coloring key is not a dart: " + k);
    }
    if (x < 0 || x >= t.map.darts()) throw DomainError("coloring refers to a missing dart: " + k);
    const std::string c = val.get<std::string>();
    if (c != "C" && c != "R") throw DomainError("coloring value must be C or R");
    int v = t.map.vertex_of(x);
    t.color[v] = c == "C" ? Color::C : Color::R;
    seen[v] = true;
  }
  for (int v = 0; v < t.map.vertex_count(); ++v)
    if (!seen[v]) throw DomainError("vertex with least dart " + std::to_string(t.map.vertex_darts(v).front()) + " is uncolored");
  return t;
}

std::string cplx_text(cplx z) {
  std::ostringstream s;
  s.precision(10);
  s << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return s.str();
}

struct Args {
  int d = 0;
  std::string partition;
  std::string path;
  std::string out;
  std::string dot;
  std::string datum;
  bool json_flag = false;
  bool nonpolynomial = false;
  bool general = false;
  bool include_polynomial = false;
  bool inverse = false;
  bool list = false;
  int base_face = -1;
  int start_dart = -1;
  double tol = -1;
};

int cmd_partitions(const Args& a, std::ostream& out) {
  auto ps = a.nonpolynomial ? nonpolynomial_partitions(a.d) : admissible_partitions(a.d);
  if (a.json_flag) {
    json rows = json::array();
    for (const auto& p : ps) rows.push_back({{"partition", p}, {"flags", flags_json(classify(p, a.d))}});
    out << dump({{"schema", kSchema}, {"d", a.d}, {"partitions", rows}});
  } else {
    for (const auto& p : ps) out << partition_compact(p) << "\n";
  }
  return 0;
}

int cmd_realize(const Args& a, std::ostream& out) {
  Partition p = parse_partition(a.partition);
  PlanarMap g = a.general ? realize_general(p, a.d) : realize_connected(p, a.d);
  json j = graph_to_json(g);
  const std::string dot = to_dot(g);
  if (!a.out.empty()) write_json_file(a.out, j);
  if (!a.dot.empty()) {
    std::ofstream f(a.dot);
    if (!f) throw DomainError("cannot write " + a.dot);
    f << dot;
  }
  if (a.json_flag) {
    out << dump({{"schema", kSchema}, {"graph", j}, {"dot", dot}});
  } else if (a.out.empty() && a.dot.empty()) {
    out << dump(j) << "\n" << dot;
  }
  return 0;
}

int cmd_enumerate(const Args& a, std::ostream& out) {
  std::ostringstream text;
  std::vector<Partition> ps;
  if (!a.partition.empty()) {
    Partition p = parse_partition(a.partition);
    if (!is_admissible(p, a.d)) throw DomainError(partition_plus(p) + " is not admissible for d=" + std::to_string(a.d));
    ps.push_back(p);
  } else {
    ps = nonpolynomial_partitions(a.d);
  }
  json rows = json::array();
  for (const auto& p : ps) {
    auto classes = enumerate_planar_classes(p, a.d);
    int abstract = static_cast<int>(group_abstract(classes).size());
    text << partition_plus(p) << ": " << classes.size() << " planar, " << abstract << " abstract\n";
    json graphs = json::array();
    for (std::size_t k = 0; k < classes.size(); ++k) {
      text << " graph " << k + 1 << "\n" << rotation_text(classes[k]);
      graphs.push_back(graph_entry(classes[k]));
    }
    rows.push_back({{"partition", p}, {"planar", classes.size()}, {"abstract", abstract}, {"graphs", graphs}});
  }
  // JSON on stdout replaces the text listing
  if (a.out != "-") out << text.str();
  if (!a.out.empty()) emit_file_or_stream(a.out, {{"schema", kSchema}, {"d", a.d}, {"rows", rows}}, out);
  return 0;
}

int cmd_census(const Args& a, std::ostream& out) {
  Census c = census(a.d, a.include_polynomial);
  std::ostringstream text;
  json rows = json::array();
  for (const auto& r : c.rows) {
    json reps = json::array();
    for (const auto& g : r.representatives) reps.push_back(graph_entry(g));
    rows.push_back({{"partition", r.partition},
                    {"flags", flags_json(r.flags)},
                    {"planar", r.planar},
                    {"abstract", r.abstract},
                    {"representatives", reps}});
    text << partition_compact(r.partition) << "  planar " << r.planar << "  abstract " << r.abstract;
    if (r.flags.polynomial_type) text << "  polynomial";
    if (r.flags.newton_candidate) text << "  newton";
    if (r.flags.belyi_candidate) text << "  belyi";
    text << "\n";
  }
  text << "total planar " << c.total_planar() << "\n";
  if (a.out != "-") out << text.str();
  if (!a.out.empty())
    emit_file_or_stream(a.out, {{"schema", kSchema}, {"d", a.d}, {"rows", rows}, {"total_planar", c.total_planar()}},
                        out);
  return 0;
}

int cmd_wreath(const Args& a, std::ostream& out) {
  PlanarMap g = graph_from_json(read_json_file(a.path));
  if (!g.connected()) throw DomainError("graph is not connected");
  RaySystem rs = choose_rays(g, a.base_face, a.start_dart);
  EdgeLabeling lab = label_preimages(rs);
  auto mono = monodromy(rs, lab);
  WreathRecursion rec = wreath_recursion(rs, lab);
  if (a.json_flag) {
    json m = json::array();
    for (const auto& p : mono) m.push_back(p.to_string());
    json labels = json::object();
    for (int e = 0; e < g.edge_count(); ++e) {
      int x = g.edge_dart(e);
      labels[std::to_string(lab.label[e])] = {g.vertex_of(x), g.vertex_of(g.opp(x))};
    }
    out << dump({{"schema", kSchema},
                 {"degree", rec.d},
                 {"vertices", rs.vertex},
                 {"edge_labels", labels},
                 {"monodromy", m},
                 {"recursion", wreath_json(rec)}});
  } else {
    out << "degree " << rec.d << "\n";
    for (int i = 0; i < rs.ray_count(); ++i)
      out << "g" << i + 1 << " -> v" << rs.vertex[i] << "  sigma = " << mono[i].to_string() << "\n";
    out << rec.to_string();
  }
  return 0;
}

int cmd_tischler(const Args& a, std::ostream& out) {
  json in = read_json_file(a.path);
  if (a.inverse) {
    PlanarMap g = graph_from_tischler(tischler_from_json(in));
    out << dump(graph_to_json(g));
    return 0;
  }
  PlanarMap g = graph_from_json(in);
  TischlerGraph t = tischler_from_graph(g);
  const int d = g.edge_count() + 1;
  Report r = tischler_invariants(t, d);
  if (a.json_flag) {
    json j = tischler_json(t);
    j["invariants_ok"] = r.ok;
    j["problems"] = r.problems;
    out << dump(j);
  } else {
    out << "C vertices " << t.c_count() << ", R vertices " << t.r_count() << ", edges " << t.map.edge_count() << "\n";
    out << "invariants " << (r.ok ? "ok" : "violated") << "\n";
    for (const auto& p : r.problems) out << "  " << p << "\n";
    out << dump(tischler_json(t));
  }
  return 0;
}

int cmd_hurwitz(const Args& a, bool orbits, std::ostream& out) {
  BranchData bd = parse_branch_data(a.datum);
  Report r = validate_branch_data(bd);
  if (!r.ok) {
    std::string msg = "inadmissible branch data " + bd.to_string() + ":";
    for (const auto& p : r.problems) msg += " " + p + ";";
    throw DomainError(msg);
  }
  auto classes = search_factorizations(bd);
  json j = {{"schema", kSchema}, {"branch_data", bd.to_string()}, {"classes", classes.size()}};
  if (orbits) {
    OrbitResult o = braid_orbits(classes);
    j["orbits"] = o.orbits;
    j["orbit_of"] = o.orbit_of;
    if (a.json_flag)
      out << dump(j);
    else
      out << "classes " << classes.size() << "\norbits " << o.orbits << "\n";
  } else {
    json ts = json::array();
    for (const auto& t : classes) ts.push_back(tuple_to_string(t));
    j["factorizations"] = ts;
    if (a.json_flag) {
      out << dump(j);
    } else {
      out << "classes " << classes.size() << "\n";
      for (const auto& t : classes) out << "  " << tuple_to_string(t) << "\n";
    }
  }
  return 0;
}

int cmd_verify_map(const Args& a, std::ostream& out) {
  if (a.list) {
    for (const auto& e : catalog()) out << e.name << "  " << e.note << "\n";
    return 0;
  }
  if (a.path.empty()) throw CLI::RequiredError("map");
  const CatalogEntry* entry = nullptr;
  RationalMap f;
  if (std::filesystem::exists(a.path)) {
    f = map_from_json(read_json_file(a.path));
  } else {
    entry = &catalog_entry(a.path);
    f = entry->map;
  }
  const double tol = a.tol > 0 ? a.tol : (entry ? entry->tol : 1e-9);
  FixedCheck fc = is_critically_fixed(f, tol);
  const CriticalReport& rep = fc.report;
  json j = {{"schema", kSchema}, {"tol", tol}, {"critically_fixed", fc.ok}, {"report", report_to_json(rep)},
            {"partition", rep.partition()}};
  bool ok = fc.ok;
  if (entry) {
    j["name"] = entry->name;
    j["expected_partition"] = entry->partition;
    bool part_ok = rep.partition() == entry->partition;
    j["partition_matches"] = part_ok;
    ok = ok && part_ok;
    if (!entry->expected_fixed.empty()) {
      double worst = 0;
      for (auto z : entry->expected_fixed) {
        double best = 1;
        for (const auto& c : rep.points)
          if (!c.at_infinity) best = std::min(best, chordal(z, c.z));
        worst = std::max(worst, best);
      }
      j["reference_points_distance"] = worst;
      j["reference_points_match"] = worst < entry->expected_tol;
      ok = ok && worst < entry->expected_tol;
    }
  }
  NewtonReport nr = newton_compare_normalized(f, tol);
  j["newton"] = {{"hypotheses", nr.hypotheses}, {"moved", nr.moved}, {"matches", nr.matches}, {"note", nr.note}};
  j["certified"] = ok;
  if (a.json_flag) {
    out << dump(j);
    return 0;
  }
  out << "degree " << rep.degree << "\n";
  for (const auto& c : rep.points) {
    out << "  " << (c.at_infinity ? std::string("inf") : cplx_text(c.z)) << "  multiplicity " << c.multiplicity
        << "  residual " << c.residual << "\n";
  }
  out << "partition " << partition_list(rep.partition());
  if (entry) out << " (expected " << partition_list(entry->partition) << ")";
  out << "\n";
  out << "max residual " << rep.max_residual() << " at tol " << tol << "\n";
  if (j.contains("reference_points_distance"))
    out << "reference points within " << j["reference_points_distance"].get<double>() << "\n";
  out << "newton form " << (nr.hypotheses ? (nr.matches ? "matches" : "differs") : "not applicable");
  if (!nr.note.empty()) out << " (" << nr.note << ")";
  out << "\n";
  out << (ok ? "certified" : "not certified") << "\n";
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"critically fixed maps through planar multigraphs", "critfix"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  Args a;

  auto* partitions = app.add_subcommand("partitions", "admissible partitions of 2d-2");
  partitions->add_option("d", a.d, "degree")->required()->check(CLI::Range(2, 30));
  partitions->add_flag("--nonpolynomial", a.nonpolynomial, "only partitions with every part below d-1");
  partitions->add_flag("--json", a.json_flag, "JSON output");

  auto* realize = app.add_subcommand("realize", "construct a graph with the given valences");
  realize->add_option("d", a.d, "degree")->required()->check(CLI::Range(2, 200));
  realize->add_option("partition", a.partition, "valences, e.g. 3311 or 3,3,1,1")->required();
  realize->add_flag("--general", a.general, "allow disconnected realizations");
  realize->add_flag("--json", a.json_flag, "one JSON document with graph and dot");
  realize->add_option("--out", a.out, "write graph JSON to a file");
  realize->add_option("--dot", a.dot, "write DOT to a file");

  auto* enumerate = app.add_subcommand("enumerate", "planar classes per partition");
  enumerate->add_option("d", a.d, "degree")->required()->check(CLI::Range(2, 8));
  enumerate->add_option("--partition", a.partition, "single partition");
  enumerate->add_option("--json", a.out, "write JSON to a file ('-' for stdout)");

  auto* cen = app.add_subcommand("census", "class counts for every non-polynomial partition");
  cen->add_option("d", a.d, "degree")->required()->check(CLI::Range(2, 8));
  cen->add_option("--out", a.out, "write JSON report to a file ('-' for stdout)");
  cen->add_flag("--include-polynomial", a.include_polynomial, "also list polynomial-type partitions");

  auto* wreath = app.add_subcommand("wreath", "monodromy and wreath recursion of the blown-up map");
  wreath->add_option("graph", a.path, "graph JSON")->required();
  wreath->add_flag("--json", a.json_flag, "JSON output");
  wreath->add_option("--base-face", a.base_face, "face id for the base point");
  wreath->add_option("--start-dart", a.start_dart, "dart naming the first corner of the base face");

  auto* tischler = app.add_subcommand("tischler", "Tischler graph of a multigraph, or the inverse");
  tischler->add_option("graph", a.path, "graph JSON, or Tischler JSON with --inverse")->required();
  tischler->add_flag("--inverse", a.inverse, "recover the multigraph");
  tischler->add_flag("--json", a.json_flag, "JSON output only");

  auto* hurwitz = app.add_subcommand("hurwitz", "Hurwitz factorizations and braid orbits");
  hurwitz->require_subcommand(1);
  auto* hsearch = hurwitz->add_subcommand("search", "simultaneous-conjugacy classes");
  hsearch->add_option("datum", a.datum, "\"d=N; [..],[..],...\"")->required();
  hsearch->add_flag("--json", a.json_flag, "JSON output");
  auto* horbits = hurwitz->add_subcommand("orbits", "braid orbits of the classes");
  horbits->add_option("datum", a.datum, "\"d=N; [..],[..],...\"")->required();
  horbits->add_flag("--json", a.json_flag, "JSON output");

  auto* verify = app.add_subcommand("verify-map", "numerically certify a rational map");
  verify->add_option("map", a.path, "catalog name or map JSON");
  verify->add_option("--tol", a.tol, "residual tolerance")->check(CLI::PositiveNumber);
  verify->add_flag("--json", a.json_flag, "JSON output");
  verify->add_flag("--list", a.list, "list catalog maps");

  try {
    app.parse(argc, argv);
    if (*partitions) return cmd_partitions(a, out);
    if (*realize) return cmd_realize(a, out);
    if (*enumerate) return cmd_enumerate(a, out);
    if (*cen) return cmd_census(a, out);
    if (*wreath) return cmd_wreath(a, out);
    if (*tischler) return cmd_tischler(a, out);
    if (*hsearch) return cmd_hurwitz(a, false, out);
    if (*horbits) return cmd_hurwitz(a, true, out);
    if (*verify) return cmd_verify_map(a, out);
    return 2;
  } catch (const CLI::Error& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace critfix
