#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "critfix/blowup.hpp"
#include "critfix/cli.hpp"
#include "critfix/enumerate.hpp"
#include "critfix/hurwitz.hpp"
#include "critfix/io.hpp"
#include "critfix/partitions.hpp"
#include "critfix/ratmap.hpp"

namespace py = pybind11;
using namespace critfix;

namespace {

py::tuple run_cli(const std::vector<std::string>& args) {
  std::vector<std::string> full{"critfix"};
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : full) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return py::make_tuple(code, out.str(), err.str());
}

std::vector<std::string> monodromy_of(const std::string& graph_json) {
  auto rs = choose_rays(graph_from_json(nlohmann::json::parse(graph_json)));
  std::vector<std::string> out;
  for (const auto& p : monodromy(rs, label_preimages(rs))) out.push_back(p.to_string());
  return out;
}

py::tuple hurwitz_orbits(const std::string& datum) {
  auto classes = search_factorizations(parse_branch_data(datum));
  int orbits = classes.empty() ? 0 : braid_orbits(classes).orbits;
  return py::make_tuple(static_cast<int>(classes.size()), orbits);
}

bool catalog_certified(const std::string& name) {
  const auto& e = catalog_entry(name);
  return is_critically_fixed(e.map, e.tol).ok;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& e : catalog()) out.push_back(e.name);
  return out;
}

}  // namespace

PYBIND11_MODULE(_critfix, m) {
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("run_cli", &run_cli, py::arg("args"), "run the command line tool; returns (code, stdout, stderr)");
  m.def("admissible_partitions", &admissible_partitions, py::arg("d"));
  m.def("nonpolynomial_partitions", &nonpolynomial_partitions, py::arg("d"));
  m.def(
      "planar_class_count",
      [](const Partition& p, int d) { return static_cast<int>(enumerate_planar_classes(p, d).size()); },
      py::arg("partition"), py::arg("d"));
  m.def("abstract_class_count", &enumerate_abstract_classes, py::arg("partition"), py::arg("d"));
  m.def("monodromy", &monodromy_of, py::arg("graph_json"), "generator permutations as cycle strings");
  m.def("hurwitz_orbits", &hurwitz_orbits, py::arg("datum"), "(classes, braid orbits)");
  m.def("catalog_names", &catalog_names);
  m.def("catalog_certified", &catalog_certified, py::arg("name"));
}
