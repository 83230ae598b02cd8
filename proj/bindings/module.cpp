// Python bindings.  Exact values cross the boundary losslessly: integers as
// native Python ints, rationals as "p/q" strings (the package wrapper turns
// them into fractions.Fraction).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <string>
#include <vector>

#include "torictodd/errors.hpp"
#include "torictodd/fan.hpp"
#include "torictodd/io.hpp"
#include "torictodd/polytope.hpp"
#include "torictodd/riemann_roch.hpp"
#include "torictodd/stabilizers.hpp"

namespace py = pybind11;
namespace tt = torictodd;

namespace {

tt::Int int_from(py::handle h) {
    if (!py::isinstance<py::int_>(h))
        throw py::type_error("expected an integer, got " +
                             std::string(py::str(py::type::of(h))));
    return tt::Int(py::str(h).cast<std::string>(), 10);
}

py::int_ int_to(const tt::Int& n) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(n.get_str().c_str(), nullptr, 10));
}

std::vector<std::vector<tt::Int>> rays_from(const py::sequence& rays) {
    std::vector<std::vector<tt::Int>> out;
    for (py::handle ray : rays) {
        std::vector<tt::Int> r;
        for (py::handle c : py::cast<py::sequence>(ray))
            r.push_back(int_from(c));
        out.push_back(std::move(r));
    }
    return out;
}

tt::Divisor divisor_from(const tt::Fan& f, const py::sequence& coeffs) {
    tt::DivisorFile file;
    for (py::handle c : coeffs) file.coeffs.push_back(int_from(c));
    return tt::load_divisor(file, f);
}

py::list rays_to(const tt::Fan& f) {
    py::list out;
    for (const std::vector<tt::Int>& ray : f.rays()) {
        py::list r;
        for (const tt::Int& c : ray) r.append(int_to(c));
        out.append(r);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Todd classes and Riemann-Roch for simplicial toric "
              "varieties";

    auto base = py::register_exception<tt::error>(m, "Error");
    py::register_exception<tt::invalid_fan_error>(m, "InvalidFanError",
                                                  base.ptr());
    py::register_exception<tt::incomplete_fan_error>(m, "IncompleteFanError",
                                                     base.ptr());
    py::register_exception<tt::rationality_error>(m, "RationalityError",
                                                  base.ptr());
    py::register_exception<tt::parse_error>(m, "ParseError", base.ptr());

    py::class_<tt::Fan>(m, "Fan")
        .def_property_readonly("dim", &tt::Fan::dim)
        .def_property_readonly("name", &tt::Fan::name)
        .def_property_readonly("ray_count", &tt::Fan::ray_count)
        .def_property_readonly("smooth", &tt::Fan::is_smooth)
        .def_property_readonly("complete", &tt::Fan::is_complete)
        .def("rays", &rays_to)
        .def("max_cones",
             [](const tt::Fan& f) { return f.max_cones(); })
        .def("multiplicity",
             [](const tt::Fan& f, std::vector<int> cone) {
                 std::sort(cone.begin(), cone.end());
                 return int_to(f.multiplicity(cone));
             },
             py::arg("cone"))
        .def("__repr__", [](const tt::Fan& f) {
            std::string n = f.name().empty() ? "unnamed" : f.name();
            return "<Fan " + n + ", dim " + std::to_string(f.dim()) + ", " +
                   std::to_string(f.ray_count()) + " rays>";
        });

    m.def("load_fan",
          [](const std::string& path, bool trusted) {
              return tt::load_fan(tt::read_fan_file(path), trusted);
          },
          py::arg("path"), py::arg("trusted") = false,
          "read a fan description file");

    m.def("make_fan",
          [](int dim, const py::sequence& rays,
             std::vector<std::vector<int>> max_cones, const std::string& name,
             bool trusted) {
              tt::FanFile file;
              file.dim = dim;
              file.rays = rays_from(rays);
              file.max_cones = std::move(max_cones);
              file.name = name;
              return tt::load_fan(file, trusted);
          },
          py::arg("dim"), py::arg("rays"), py::arg("max_cones"),
          py::arg("name") = "", py::arg("trusted") = false,
          "build a fan from rays and maximal cones (ray order is binding)");

    m.def("validate",
          [](int dim, const py::sequence& rays,
             const std::vector<std::vector<int>>& max_cones) {
              return tt::validate_fan(dim, rays_from(rays), max_cones)
                  .violations;
          },
          py::arg("dim"), py::arg("rays"), py::arg("max_cones"),
          "list every structural violation (empty list means valid)");

    m.def("group_elements",
          [](const tt::Fan& f) {
              py::list out;
              for (const tt::GroupElement& g : tt::support_set(f).elements) {
                  py::dict el;
                  el["order"] = g.order;
                  std::vector<std::string> charges;
                  for (const tt::Rat& q : g.charges)
                      charges.push_back(tt::to_string(q));
                  el["charges"] = charges;
                  out.append(el);
              }
              return out;
          },
          py::arg("fan"),
          "stabilizer support set: order and charge vector per element");

    m.def("todd",
          [](const tt::Fan& f) {
              tt::ToddReport rep = tt::todd_class(f);
              py::dict out;
              for (std::size_t k = 0; k < rep.components.size(); ++k) {
                  py::list terms;
                  for (const auto& [cone, coeff] : rep.components[k]) {
                      py::dict t;
                      t["cone"] = py::tuple(py::cast(cone));
                      t["coeff"] = tt::to_string(coeff);
                      terms.append(t);
                  }
                  out[py::int_(k)] = terms;
              }
              return out;
          },
          py::arg("fan"),
          "Todd class by degree, coefficients as exact fraction strings");

    m.def("chi",
          [](const tt::Fan& f, const py::sequence& coeffs, py::handle scale) {
              return tt::to_string(
                  tt::chi_twisted(f, divisor_from(f, coeffs), int_from(scale)));
          },
          py::arg("fan"), py::arg("coeffs"), py::arg("scale") = 1,
          "Euler characteristic of O(scale * D) as an exact fraction string");

    m.def("ehrhart",
          [](const tt::Fan& f, const py::sequence& coeffs, int max_n) {
              tt::EhrhartResult r =
                  tt::ehrhart(f, divisor_from(f, coeffs), max_n);
              py::dict out;
              out["nef"] = r.nef;
              out["cartier"] = r.cartier;
              std::vector<std::string> table;
              for (const tt::Rat& v : r.chi_table)
                  table.push_back(tt::to_string(v));
              out["chi"] = table;
              if (r.polynomial) {
                  std::vector<std::string> poly;
                  for (const tt::Rat& c : *r.polynomial)
                      poly.push_back(tt::to_string(c));
                  out["polynomial"] = poly;
              } else {
                  out["polynomial"] = py::none();
              }
              return out;
          },
          py::arg("fan"), py::arg("coeffs"), py::arg("max_n"),
          "chi(n*D) for n = 0..max_n, plus the polynomial when D is Cartier");

    m.def("count_points",
          [](const tt::Fan& f, const py::sequence& coeffs, py::handle scale,
             bool interior) {
              tt::DivisorPolytope p = tt::polytope_of_divisor(
                  f, divisor_from(f, coeffs).scaled(int_from(scale)));
              return int_to(tt::count_lattice_points(p, interior));
          },
          py::arg("fan"), py::arg("coeffs"), py::arg("scale") = 1,
          py::arg("interior") = false,
          "brute-force lattice-point count of the dilated divisor polytope");

    m.def("is_nef",
          [](const tt::Fan& f, const py::sequence& coeffs) {
              return tt::is_nef(f, divisor_from(f, coeffs));
          },
          py::arg("fan"), py::arg("coeffs"),
          "support function of D is convex");
}
