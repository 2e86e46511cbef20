#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "commnil/corpus.hpp"
#include "commnil/criterion.hpp"
#include "commnil/driver.hpp"
#include "commnil/errors.hpp"
#include "commnil/report.hpp"
#include "commnil/structure.hpp"
#include "commnil/verification.hpp"
#include "commnil/words.hpp"

namespace py = pybind11;
using namespace commnil;

namespace {

// Reports cross the boundary as JSON text; the Python side decodes them.
std::string dumped(const nlohmann::json &j) { return j.dump(); }

PermGroup make_group(std::size_t degree, const std::vector<std::vector<std::int64_t>> &gens) {
  std::vector<Permutation> perms;
  for (const auto &images : gens)
    perms.push_back(Permutation::from_images(images));
  return PermGroup(degree, std::move(perms));
}

} // namespace

PYBIND11_MODULE(_commnil, m) {
  m.doc() = "Commutator-word criteria on finite permutation groups";
  m.attr("__version__") = kToolVersion;

  py::register_exception<GroupError>(m, "GroupError", PyExc_ValueError);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](const std::vector<std::int64_t> &images) {
             return Permutation::from_images(images);
           }),
           py::arg("images"))
      .def_static("from_cycles", [](const std::string &text, std::size_t degree) {
        return Permutation::from_cycles(text, degree);
      })
      .def_property_readonly("degree", &Permutation::degree)
      .def("images", &Permutation::images_1based)
      .def("order", &Permutation::order)
      .def("inverse", &Permutation::inverse)
      .def("is_identity", &Permutation::is_identity)
      .def("__mul__", [](const Permutation &a, const Permutation &b) { return a * b; })
      .def("__eq__", [](const Permutation &a, const Permutation &b) { return a == b; })
      .def("__hash__", [](const Permutation &a) { return PermutationHash{}(a); })
      .def("__str__", &Permutation::to_string)
      .def("__repr__", [](const Permutation &a) { return "Permutation('" + a.to_string() + "')"; });

  m.def("commutator", py::overload_cast<const Permutation &, const Permutation &>(&commutator));

  py::class_<PermGroup>(m, "PermGroup")
      .def(py::init(&make_group), py::arg("degree"), py::arg("generators"))
      .def_property_readonly("degree", &PermGroup::degree)
      .def("generators", &PermGroup::generators)
      .def("order", &PermGroup::order)
      .def("contains", &PermGroup::contains)
      .def("__contains__", &PermGroup::contains)
      .def("__len__", &PermGroup::order)
      .def("elements", [](const PermGroup &g, std::uint64_t cap) { return g.elements(cap).elements(); },
           py::arg("cap") = kDefaultCap);

  m.def("builtin", [](const std::string &id) { return load_group(id).group; },
        "Builtin group by id, or a descriptor file path");
  m.def("builtin_ids", [](const std::string &filter) {
    std::vector<std::string> ids;
    for (const auto &d : select_builtins(filter))
      ids.push_back(d.id);
    return ids;
  }, py::arg("filter") = "all");

  m.def("is_soluble", &is_soluble);
  m.def("is_nilpotent", &is_nilpotent);
  m.def("derived_subgroup", &derived_subgroup);
  m.def("derived_orders", [](const PermGroup &g) { return derived_series(g).orders; });
  m.def("lower_central_orders", [](const PermGroup &g) { return lower_central_series(g).orders; });
  m.def("fitting_height", [](const PermGroup &g) { return lower_fitting_series(g).fitting_height; });
  m.def("sylow_subgroup", &sylow_subgroup, py::arg("g"), py::arg("p"), py::arg("cap") = kDefaultCap);
  m.def("fitting_subgroup", &fitting_subgroup, py::arg("g"), py::arg("cap") = kDefaultCap);

  m.def("delta_values", [](const PermGroup &g, std::size_t k) {
    return delta_values(g, k).values.elements();
  }, py::arg("g"), py::arg("k"));
  m.def("criterion", [](const PermGroup &g, std::size_t k, const std::string &kind) {
    return dumped(to_json(coprime_product_criterion(
        g, k, kind == "gamma" ? WordKind::gamma : WordKind::delta)));
  }, py::arg("g"), py::arg("k"), py::arg("kind") = "delta");
  m.def("theorem_check", [](const PermGroup &g, std::size_t k) {
    return dumped(to_json(theorem_check(g, k)));
  });
  m.def("xclo", [](const PermGroup &g, std::uint64_t seed) {
    return dumped(to_json(construct_xclo(g, kDefaultCap, seed)));
  }, py::arg("g"), py::arg("seed") = 0);

  m.def("run", [](const std::string &command, const std::vector<std::string> &groups,
                  const std::string &filter, const std::vector<std::size_t> &ks,
                  std::uint64_t seed) {
    RunOptions options;
    options.groups = groups;
    options.filter = filter;
    options.ks = ks;
    options.seed = seed;
    RunResult r;
    {
      py::gil_scoped_release release;
      r = run_command(command, options);
    }
    return py::make_tuple(r.exit_code, dumped(r.report));
  }, py::arg("command"), py::arg("groups") = std::vector<std::string>{},
        py::arg("filter") = "all", py::arg("ks") = std::vector<std::size_t>{1, 2, 3},
        py::arg("seed") = 0);
}
