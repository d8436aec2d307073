#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "odgraph/export.hpp"
#include "odgraph/formulas.hpp"
#include "odgraph/spec_parser.hpp"
#include "odgraph/verify.hpp"

namespace py = pybind11;

namespace {

py::object to_python(const nlohmann::ordered_json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

od::OrderProfile profile_from_dict(const std::map<od::Natural, od::Natural>& entries) {
    return od::OrderProfile(entries);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Order-divisor graphs: closed-form invariants and brute-force verification.";

    py::register_exception<od::ResourceError>(m, "ResourceError", PyExc_RuntimeError);

    py::class_<od::GroupSpec>(m, "GroupSpec")
        .def_static("cyclic", &od::GroupSpec::cyclic, py::arg("n"))
        .def_static("dihedral", &od::GroupSpec::dihedral, py::arg("n"))
        .def_static("units", &od::GroupSpec::units, py::arg("n"))
        .def_static("product", &od::GroupSpec::product, py::arg("factors"))
        .def_property_readonly("family",
                               [](const od::GroupSpec& g) {
                                   switch (g.family()) {
                                       case od::Family::Cyclic: return "cyclic";
                                       case od::Family::Dihedral: return "dihedral";
                                       case od::Family::Units: return "units";
                                       case od::Family::Product: break;
                                   }
                                   return "product";
                               })
        .def_property_readonly("parameter", &od::GroupSpec::parameter)
        .def_property_readonly("factors",
                               [](const od::GroupSpec& g) {
                                   auto f = g.factors();
                                   return std::vector<od::GroupSpec>(f.begin(), f.end());
                               })
        .def("__eq__", &od::GroupSpec::operator==)
        .def("__str__", &od::GroupSpec::to_string)
        .def("__repr__", [](const od::GroupSpec& g) { return "GroupSpec('" + g.to_string() + "')"; });

    m.def("parse_spec", [](const std::string& text) { return od::parse_spec(text); }, py::arg("text"));

    m.def("euler_phi", &od::nt::euler_phi, py::arg("n"));
    m.def("divisors", &od::nt::divisors, py::arg("n"));
    m.def("is_prime", &od::nt::is_prime, py::arg("n"));
    m.def("is_composite", &od::nt::is_composite, py::arg("n"));
    m.def("multiplicative_order", &od::nt::multiplicative_order, py::arg("x"), py::arg("n"));

    m.def("group_order", &od::group_order, py::arg("spec"));
    m.def("order_profile",
          [](const od::GroupSpec& g, od::Natural bound) { return od::order_profile(g, bound).entries(); },
          py::arg("spec"), py::arg("bound") = od::kDefaultEnumerationBound);
    m.def("element_orders", &od::element_orders, py::arg("spec"),
          py::arg("bound") = od::kDefaultEnumerationBound);

    m.def("degree_via_profile",
          [](const std::map<od::Natural, od::Natural>& p, od::Natural order) {
              return od::degree_via_profile(profile_from_dict(p), order);
          },
          py::arg("profile"), py::arg("order"));
    m.def("size_via_profile",
          [](const std::map<od::Natural, od::Natural>& p) {
              return od::size_via_profile(profile_from_dict(p));
          },
          py::arg("profile"));

    namespace f = od::formulas;
    m.def("deg_zn", &f::deg_zn, py::arg("n"), py::arg("m"));
    m.def("deg_zn_prime_power", &f::deg_zn_prime_power, py::arg("p"), py::arg("k"), py::arg("i"));
    m.def("degree_sum_zn_prime_power", &f::degree_sum_zn_prime_power, py::arg("p"), py::arg("k"));
    m.def("order_sum_prime_power", &f::order_sum_prime_power, py::arg("p"), py::arg("k"));
    m.def("size_zn", &f::size_zn, py::arg("n"));
    m.def("size_zn_prime_power", &f::size_zn_prime_power, py::arg("p"), py::arg("k"));
    m.def("deg_dn", &f::deg_dn, py::arg("n"), py::arg("m"));
    m.def("size_dn", &f::size_dn, py::arg("n"));
    m.def("girth_of_group", &f::girth_of_group, py::arg("spec"),
          py::arg("bound") = od::kDefaultEnumerationBound);
    m.def("girth_of_product", &f::girth_of_product, py::arg("e"), py::arg("f"),
          py::arg("bound") = od::kDefaultEnumerationBound);
    m.def("girth_of_cyclic_product", &f::girth_of_cyclic_product, py::arg("a"), py::arg("b"));
    m.def("is_star_group", &f::is_star_group, py::arg("spec"),
          py::arg("bound") = od::kDefaultEnumerationBound);

    m.def("oracle_report",
          [](const od::GroupSpec& g, std::size_t chromatic_bound) {
              od::ODGraph graph = [&] {
                  py::gil_scoped_release release;
                  return od::ODGraph::build(g);
              }();
              return to_python(od::to_json(od::oracle_report(graph, chromatic_bound)));
          },
          py::arg("spec"), py::arg("chromatic_bound") = od::kDefaultChromaticBound,
          "Invariants of the explicit graph, computed by search.");

    m.def("export",
          [](const od::GroupSpec& g, const std::string& format) -> py::object {
              const auto labeled = od::build_labeled(g);
              if (format == "dot") return py::str(od::to_dot(labeled));
              if (format == "csv") return py::str(od::to_csv(labeled));
              if (format == "json") return to_python(od::to_json(labeled, od::oracle_report(labeled.graph)));
              throw py::value_error("format must be one of dot, json, csv");
          },
          py::arg("spec"), py::arg("format") = "dot");

    m.def("verify_group",
          [](const od::GroupSpec& g) {
              od::verify::VerificationResult r = [&] {
                  py::gil_scoped_release release;
                  return od::verify::verify_group(g);
              }();
              return to_python(od::verify::to_json(r));
          },
          py::arg("spec"));

    m.def("sweep",
          [](const std::string& family, od::Natural lo, od::Natural hi, unsigned threads) {
              const auto fam = od::verify::parse_family(family);
              if (!fam) throw py::value_error("family must be one of cyclic, dihedral, units, product");
              od::verify::Options options;
              options.threads = threads;
              od::verify::SweepReport report = [&] {
                  py::gil_scoped_release release;
                  return od::verify::sweep(*fam, lo, hi, options);
              }();
              return to_python(od::verify::to_json(report));
          },
          py::arg("family"), py::arg("lo"), py::arg("hi"), py::arg("threads") = 0);
}
