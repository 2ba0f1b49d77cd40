#include "goldbug/analysis.hpp"
#include "goldbug/oracle.hpp"
#include "goldbug/render.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace goldbug;

namespace {

py::object to_fraction(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.num(), r.den());
}

// int, fractions.Fraction, or anything with integer numerator/denominator.
Rational to_rational(const py::handle& obj) {
    if (py::isinstance<py::int_>(obj)) return Rational(obj.cast<std::int64_t>());
    if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator")) {
        return Rational(obj.attr("numerator").cast<std::int64_t>(), obj.attr("denominator").cast<std::int64_t>());
    }
    throw py::type_error("expected an int or fractions.Fraction");
}

// Length, or a string in the length grammar ("2.5in", "2'9\"", "250/91ft").
Length to_length(const py::handle& obj) {
    if (py::isinstance<Length>(obj)) return obj.cast<Length>();
    if (py::isinstance<py::str>(obj)) return parse_length(obj.cast<std::string>());
    throw py::type_error("expected a Length or a length string such as '2.5in'");
}

py::dict threshold_dict(const Threshold& t) {
    py::dict d;
    d["kind"] = std::string(to_string(t.kind));
    d["bound"] = t.bound ? py::cast(*t.bound) : py::none();
    return d;
}

py::dict lbound_dict(const LBound& b) {
    py::dict d;
    d["kind"] = std::string(to_string(b.kind));
    d["bound"] = b.bound ? py::cast(*b.bound) : py::none();
    d["reach_threshold"] = threshold_dict(b.reach_threshold);
    return d;
}

}  // namespace

PYBIND11_MODULE(_goldbug, m) {
    m.doc() = "Two-hole dig site geometry with exact rational lengths";

    py::enum_<Convention>(m, "Convention")
        .value("FROM_DROP_POINT", Convention::FromDropPoint)
        .value("FROM_TRUNK", Convention::FromTrunk);

    py::class_<Length>(m, "Length")
        .def(py::init([](const std::string& text) { return parse_length(text); }), py::arg("text"))
        .def_static("from_inches", [](const py::object& v) { return Length::inches(to_rational(v)); })
        .def_static("from_feet", [](const py::object& v) { return Length::feet(to_rational(v)); })
        .def_property_readonly("inches", [](const Length& x) { return to_fraction(x.in_inches()); })
        .def_property_readonly("feet", [](const Length& x) { return to_fraction(x.in_feet()); })
        .def("__float__", [](const Length& x) { return to_real_feet(x); })
        .def("__eq__", [](const Length& a, const Length& b) { return a == b; })
        .def("__lt__", [](const Length& a, const Length& b) { return a < b; })
        .def("__le__", [](const Length& a, const Length& b) { return a <= b; })
        .def("__add__", [](const Length& a, const Length& b) { return a + b; })
        .def("__sub__", [](const Length& a, const Length& b) { return a - b; })
        .def("__hash__", [](const Length& x) { return py::hash(py::make_tuple(x.in_inches().num(), x.in_inches().den())); })
        .def("__str__", [](const Length& x) { return format_exact(x); })
        .def("__repr__", [](const Length& x) { return "Length('" + format_exact(x) + "')"; });

    py::class_<Scenario>(m, "Scenario")
        .def(py::init([](const py::object& r, const py::object& L, const py::object& d, const py::object& E,
                         const py::object& rA, const py::object& rB, Convention convention) {
                 Scenario s;
                 s.r = to_length(r);
                 s.L = to_length(L);
                 if (!d.is_none()) s.d = to_length(d);
                 if (!E.is_none()) s.E = to_length(E);
                 if (!rA.is_none()) s.r_A = to_length(rA);
                 if (!rB.is_none()) s.r_B = to_length(rB);
                 s.convention = convention;
                 validate(s);
                 return s;
             }),
             py::arg("r"), py::arg("L"), py::arg("d") = py::none(), py::arg("E") = py::none(),
             py::arg("rA") = py::none(), py::arg("rB") = py::none(),
             py::arg("convention") = Convention::FromDropPoint)
        .def_readonly("r", &Scenario::r)
        .def_readonly("L", &Scenario::L)
        .def_readonly("d", &Scenario::d)
        .def_readonly("E", &Scenario::E)
        .def_readonly("rA", &Scenario::r_A)
        .def_readonly("rB", &Scenario::r_B)
        .def_readonly("convention", &Scenario::convention)
        .def("__eq__", [](const Scenario& a, const Scenario& b) { return a == b; });

    py::class_<OverlapReport>(m, "OverlapReport")
        .def_readonly("ab", &OverlapReport::ab)
        .def_readonly("radii_sum", &OverlapReport::radii_sum)
        .def_readonly("overlaps", &OverlapReport::overlaps)
        .def_readonly("margin", &OverlapReport::margin)
        .def_readonly("lens_area_sqft", &OverlapReport::lens_area_sqft)
        .def_readonly("scenario", &OverlapReport::scenario);

    py::class_<CanvasSpec>(m, "CanvasSpec")
        .def(py::init<>())
        .def_readwrite("width_px", &CanvasSpec::width_px)
        .def_readwrite("height_px", &CanvasSpec::height_px)
        .def_readwrite("margin_px", &CanvasSpec::margin_px)
        .def_readwrite("feet_per_px", &CanvasSpec::feet_per_px)
        .def_readwrite("show_labels", &CanvasSpec::show_labels)
        .def_readwrite("angle_exaggeration", &CanvasSpec::angle_exaggeration);

    m.def("parse_length", &parse_length, py::arg("text"));
    m.def("to_real_feet", &to_real_feet, py::arg("x"));
    m.def("format_feet_inches", &format_feet_inches, py::arg("x"), py::arg("round_to_inch") = true);

    m.def("half_angle_sin", [](const Scenario& s) { return to_fraction(half_angle_sin(s)); });
    m.def("dig_center_radius", &dig_center_radius);
    m.def("center_distance", &center_distance);
    m.def("overlap_report", &overlap_report);
    m.def("lens_area", &lens_area, py::arg("ab"), py::arg("rA"), py::arg("rB"));

    m.def("nonoverlap_threshold",
          [](const py::object& rA, const py::object& rB, const py::object& d, const py::object& E) {
              return threshold_dict(nonoverlap_threshold(to_length(rA), to_length(rB), to_length(d), to_length(E)));
          },
          py::arg("rA"), py::arg("rB"), py::arg("d") = "5/2in", py::arg("E") = "50ft");
    m.def("nonoverlap_threshold_from_trunk",
          [](const py::object& r, const py::object& rA, const py::object& rB, const py::object& d,
             const py::object& E) {
              return threshold_dict(nonoverlap_threshold_from_trunk(to_length(r), to_length(rA), to_length(rB),
                                                                    to_length(d), to_length(E)));
          },
          py::arg("r"), py::arg("rA"), py::arg("rB"), py::arg("d") = "5/2in", py::arg("E") = "50ft");
    m.def("max_L_for_nonoverlap",
          [](const py::object& r, const py::object& rA, const py::object& rB, const py::object& d,
             const py::object& E, Convention c) {
              return lbound_dict(
                  max_L_for_nonoverlap(to_length(r), to_length(rA), to_length(rB), to_length(d), to_length(E), c));
          },
          py::arg("r"), py::arg("rA"), py::arg("rB"), py::arg("d") = "5/2in", py::arg("E") = "50ft",
          py::arg("convention") = Convention::FromDropPoint);

    m.def("sweep",
          [](const Scenario& base, const std::vector<std::tuple<std::string, py::object, py::object, py::object>>& axes) {
              std::vector<SweepAxis> parsed;
              for (const auto& [param, start, stop, step] : axes) {
                  parsed.push_back({parse_sweep_param(param), to_length(start), to_length(stop), to_length(step)});
              }
              py::list rows;
              for (const auto& row : sweep(base, parsed).rows) {
                  py::dict d;
                  d["values"] = row.values;
                  d["report"] = row.report ? py::cast(*row.report) : py::none();
                  d["error"] = row.error;
                  rows.append(d);
              }
              return rows;
          },
          py::arg("base"), py::arg("axes"));

    m.def("verify_paper_claims", [] {
        py::list out;
        for (const auto& c : verify_paper_claims()) {
            py::dict d;
            d["id"] = c.id;
            d["quote"] = c.quote;
            d["expected"] = c.expected;
            d["computed"] = c.computed;
            d["pass"] = c.pass;
            out.append(d);
        }
        return out;
    });

    m.def("center_distance_oracle", &center_distance_oracle);
    m.def("lens_area_mc",
          [](double ab, double rA, double rB, std::int64_t samples, std::uint64_t seed) {
              const auto e = lens_area_mc(ab, rA, rB, samples, seed);
              py::dict d;
              d["value"] = e.value;
              d["std_error"] = e.std_error;
              d["samples"] = e.samples;
              d["seed"] = e.seed;
              return d;
          },
          py::arg("ab"), py::arg("rA"), py::arg("rB"), py::arg("samples") = 100'000, py::arg("seed") = 1);
    m.def("overlap_oracle_grid", &overlap_oracle_grid, py::arg("scenario"), py::arg("cells_per_foot") = 64);

    m.def("render_svg", &render_svg, py::arg("scenario"), py::arg("canvas") = CanvasSpec{});
}
