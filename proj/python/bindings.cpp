#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "sheafwc/betti.hpp"
#include "sheafwc/divisors.hpp"
#include "sheafwc/errors.hpp"
#include "sheafwc/ktheory.hpp"
#include "sheafwc/walls.hpp"

namespace py = pybind11;
using namespace sheafwc;

namespace {

py::object py_int(const BigInt& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(py_int(r.num()), py_int(r.den()));
}

Rational to_rational(const py::handle& h) {
  if (py::isinstance<py::str>(h)) return Rational::parse(h.cast<std::string>());
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator")) {
    const auto num = py::str(h.attr("numerator")).cast<std::string>();
    const auto den = py::str(h.attr("denominator")).cast<std::string>();
    return Rational(BigInt(num), BigInt(den));
  }
  throw DomainError("expected an int, Fraction or 'num/den' string");
}

ChernP2 to_chern(const py::tuple& t) {
  if (t.size() != 3) throw DomainError("Chern character must be a 3-tuple (r, c, ch2)");
  return {to_rational(t[0]).to_long(), to_rational(t[1]).to_long(), to_rational(t[2])};
}

py::tuple from_chern(const ChernP2& v) { return py::make_tuple(v.r(), v.c(), fraction(v.e())); }

py::list coefficients(const QPoly& p) {
  py::list out;
  for (const auto& c : p.coefficients()) out.append(py_int(c));
  return out;
}

py::tuple divisor(const divisors::DivisorAL& d) { return py::make_tuple(fraction(d.a), fraction(d.l)); }

}  // namespace

PYBIND11_MODULE(_sheafwc, m) {
  m.doc() = "Exact computations on moduli of one-dimensional sheaves on the plane";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConventionError>(m, "ConventionError", PyExc_ArithmeticError);

  // exactmath
  m.def("projective_poincare", [](int n) { return coefficients(projective_poincare(n)); });
  m.def("grassmannian_poincare", [](int k, int n) { return coefficients(grassmannian_poincare(k, n)); });

  // ktheory
  m.def("euler_product", [](const py::tuple& v, const py::tuple& w) {
    return fraction(ktheory::euler_product(to_chern(v), to_chern(w)));
  });
  m.def("euler_hom", [](const py::tuple& v, const py::tuple& w) {
    return fraction(ktheory::euler_hom(to_chern(v), to_chern(w)));
  });
  m.def("moduli_class", [](long d) { return from_chern(ktheory::moduli(d)); });

  // walls
  py::class_<walls::Wall>(m, "Wall")
      .def(py::init([](const py::handle& c, const py::handle& r2) { return walls::Wall(to_rational(c), to_rational(r2)); }))
      .def_property_readonly("center", [](const walls::Wall& w) { return fraction(w.center()); })
      .def_property_readonly("radius_sq", [](const walls::Wall& w) { return fraction(w.radius_sq()); })
      .def("__repr__", [](const walls::Wall& w) {
        return "Wall(center=" + w.center().str() + ", radius_sq=" + w.radius_sq().str() + ")";
      });
  py::class_<walls::ReferenceWallSystem>(m, "ReferenceWallSystem")
      .def_readonly("label", &walls::ReferenceWallSystem::label)
      .def_property_readonly("walls", [](const walls::ReferenceWallSystem& s) {
        std::vector<walls::Wall> out;
        for (const auto& rw : s.walls) out.push_back(rw.wall);
        return out;
      });
  m.def("wall_between", [](const py::tuple& v, const py::tuple& w) { return walls::wall_between(to_chern(v), to_chern(w)); });
  m.def("enumerate_potential_walls", [](long d) {
    py::list out;
    for (const auto& pw : walls::enumerate_potential_walls(d)) out.append(py::make_tuple(from_chern(pw.destabilizer), pw.wall));
    return out;
  });
  m.def("abch_reference_walls", &walls::abch_reference_walls);
  m.def("twist_walls", [](const walls::ReferenceWallSystem& s, long n) { return walls::transform_walls(s, walls::Twist{n}); });
  m.def("dual_walls", [](const walls::ReferenceWallSystem& s) { return walls::transform_walls(s, walls::Dual{}); });
  m.def("locate_model", &walls::locate_model);

  // divisors
  m.def("genus", &divisors::genus);
  m.def("first_wall_destabilizer", [](long d) { return from_chern(divisors::first_wall_destabilizer(d)); });
  m.def("wall_divisor", [](long d, const py::tuple& v) { return divisor(divisors::wall_divisor(d, to_chern(v))); });
  m.def("nef_generators", [](long d) {
    const auto [a, b] = divisors::nef_generators(d);
    return py::make_tuple(divisor(a), divisor(b));
  });
  m.def("effective_generators", [](long d) {
    const auto [a, l] = divisors::effective_generators(d);
    return py::make_tuple(divisor(a), divisor(l));
  });
  m.def("d_in_AL", [](long d) { return divisor(divisors::d_in_AL(d)); });
  m.def("intersection_degree", [](const std::string& family, long d, const py::tuple& w) {
    return fraction(divisors::intersection_degree(divisors::family_class(divisors::parse_family(family), d), to_chern(w)));
  });

  // betti
  m.def("hilb_poincare", [](int n) { return coefficients(betti::hilb_poincare(n)); });
  m.def("hilb_model_poincare", [](int n, int k) { return coefficients(betti::hilb_model_poincare(n, k)); });
  m.def("kronecker_poincare", [](long mm, long e, long f) {
    py::gil_scoped_release release;
    const QPoly p = betti::kronecker_poincare(mm, {e, f});
    py::gil_scoped_acquire acquire;
    return coefficients(p);
  });
  m.def("brute_force_kronecker_count", [](long mm, long e, long f, long p) {
    BigInt n;
    {
      py::gil_scoped_release release;
      n = betti::brute_force_kronecker_count(mm, {e, f}, p);
    }
    return py_int(n);
  });
  m.def("ext_dims_at_wall", [](long d, const py::tuple& destab) {
    const auto ext = betti::ext_dims_at_wall(d, to_chern(destab));
    return py::make_tuple(ext.forward, ext.backward);
  });
  m.def("assemble_m6", []() {
    QPoly p;
    {
      py::gil_scoped_release release;
      p = betti::assemble_m6();
    }
    return coefficients(p);
  });
}
