// Python bindings. Words and polynomials cross the boundary as plain
// lists of canonical integer encodings (low-to-high coefficients for
// polynomials); reports cross as dicts mirroring their JSON form.

#include <optional>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "deephole/distance.hpp"
#include "deephole/report_json.hpp"
#include "deephole/tables.hpp"

namespace py = pybind11;
using namespace deephole;

namespace {

py::object json_to_py(const json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

Word make_word(const Field& f, const std::vector<uint32_t>& entries) {
    return Word(f, entries);
}

Poly make_poly(const Field& f, const std::vector<uint32_t>& coeffs) {
    return Poly(f, coeffs);
}

DeepHoleShape shape_from_name(const std::string& name) {
    if (name == "high" || name == "monomial_high") return DeepHoleShape::monomial_high;
    if (name == "k" || name == "monomial_k") return DeepHoleShape::monomial_k;
    if (name == "g1" || name == "cyclic_g1") return DeepHoleShape::cyclic_g1;
    if (name == "g2" || name == "cyclic_g2") return DeepHoleShape::cyclic_g2;
    throw Error("unknown shape '" + name + "' (use high, k, g1 or g2)");
}

SearchOptions options(unsigned workers, bool force) { return SearchOptions{workers, force}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Standard Reed-Solomon codes, exact error distances and deep holes";

    py::register_exception<Error>(m, "DeepholeError", PyExc_ValueError);

    py::class_<Field>(m, "Field")
        .def(py::init([](uint32_t p, uint32_t m_, std::optional<std::vector<uint32_t>> modulus) {
                 return std::make_unique<Field>(p, m_, std::move(modulus));
             }),
             py::arg("p"), py::arg("m") = 1, py::arg("modulus") = std::nullopt,
             "Construct GF(p^m); modulus coefficients run low to high and "
             "default to the built-in table")
        .def_property_readonly("p", &Field::p)
        .def_property_readonly("m", &Field::m)
        .def_property_readonly("q", &Field::q)
        .def_property_readonly("alpha", &Field::alpha)
        .def_property_readonly("modulus", &Field::modulus)
        .def("descriptor", &Field::descriptor)
        .def("add", &Field::add, py::arg("a"), py::arg("b"))
        .def("sub", &Field::sub, py::arg("a"), py::arg("b"))
        .def("neg", &Field::neg, py::arg("a"))
        .def("mul", &Field::mul, py::arg("a"), py::arg("b"))
        .def("inv", &Field::inv, py::arg("a"))
        .def("div", &Field::div, py::arg("a"), py::arg("b"))
        .def("pow", &Field::pow, py::arg("a"), py::arg("e"))
        .def("alpha_pow", &Field::alpha_pow, py::arg("j"))
        .def("log", &Field::log, py::arg("a"))
        .def("elements",
             [](const Field& f) {
                 std::vector<uint32_t> out;
                 for (auto e : f.elements()) out.push_back(e.value());
                 return out;
             })
        .def("alpha_order",
             [](const Field& f) {
                 std::vector<uint32_t> out;
                 for (auto e : f.nonzero_elements_in_alpha_order()) out.push_back(e.value());
                 return out;
             })
        .def("__repr__", [](const Field& f) { return "Field(" + f.descriptor() + ")"; });

    py::class_<RSCode>(m, "RSCode")
        .def(py::init<const Field&, uint32_t>(), py::arg("field"), py::arg("k"),
             py::keep_alive<1, 2>())
        .def_property_readonly("k", &RSCode::k)
        .def_property_readonly("n", &RSCode::n)
        .def_property_readonly("covering_radius", &RSCode::covering_radius)
        .def("encode",
             [](const RSCode& c, const std::vector<uint32_t>& msg) {
                 return c.encode(make_poly(c.field(), msg)).entries();
             },
             py::arg("message"))
        .def("is_codeword",
             [](const RSCode& c, const std::vector<uint32_t>& w) {
                 return c.is_codeword(make_word(c.field(), w));
             },
             py::arg("word"))
        .def("message_count", &RSCode::message_count)
        .def("message",
             [](const RSCode& c, uint64_t idx) { return c.message(idx).coeffs(); },
             py::arg("index"))
        .def("minimum_distance",
             [](const RSCode& c, bool exhaustive, unsigned workers, bool force) {
                 return c.minimum_distance(exhaustive ? DistanceMethod::exhaustive
                                                      : DistanceMethod::formula,
                                           options(workers, force));
             },
             py::arg("exhaustive") = false, py::arg("workers") = 0, py::arg("force") = false);

    py::class_<CyclicRSCode>(m, "CyclicRSCode")
        .def(py::init<const Field&, uint32_t>(), py::arg("field"), py::arg("k"),
             py::keep_alive<1, 2>())
        .def_property_readonly("k", &CyclicRSCode::k)
        .def_property_readonly("n", &CyclicRSCode::n)
        .def_property_readonly("d", &CyclicRSCode::d)
        .def_property_readonly("covering_radius", &CyclicRSCode::covering_radius)
        .def_property_readonly("g", [](const CyclicRSCode& c) { return c.g().coeffs(); })
        .def_property_readonly("g1", [](const CyclicRSCode& c) { return c.g1().coeffs(); })
        .def_property_readonly("g2", [](const CyclicRSCode& c) { return c.g2().coeffs(); })
        .def("encode",
             [](const CyclicRSCode& c, const std::vector<uint32_t>& msg) {
                 return c.encode(make_poly(c.field(), msg)).coeffs();
             },
             py::arg("message"))
        .def("is_codeword",
             [](const CyclicRSCode& c, const std::vector<uint32_t>& poly) {
                 return c.is_codeword(make_poly(c.field(), poly));
             },
             py::arg("poly"))
        .def("message_count", &CyclicRSCode::message_count)
        .def("message",
             [](const CyclicRSCode& c, uint64_t idx) { return c.message(idx).coeffs(); },
             py::arg("index"))
        .def("minimum_distance",
             [](const CyclicRSCode& c, bool exhaustive, unsigned workers, bool force) {
                 return c.minimum_distance(exhaustive ? DistanceMethod::exhaustive
                                                      : DistanceMethod::formula,
                                           options(workers, force));
             },
             py::arg("exhaustive") = false, py::arg("workers") = 0, py::arg("force") = false);

    // polynomials and words
    m.def("interpolate",
          [](const Field& f, const std::vector<uint32_t>& word) {
              return lagrange_interpolate(make_word(f, word)).coeffs();
          },
          py::arg("field"), py::arg("word"),
          "Coefficients (low to high) of the unique interpolant of degree <= q-2");
    m.def("eval_word",
          [](const Field& f, const std::vector<uint32_t>& coeffs) {
              return make_poly(f, coeffs).eval_word().entries();
          },
          py::arg("field"), py::arg("coeffs"));
    m.def("poly_str",
          [](const Field& f, const std::vector<uint32_t>& coeffs) {
              return make_poly(f, coeffs).str();
          },
          py::arg("field"), py::arg("coeffs"));
    m.def("degree_of_word",
          [](const Field& f, const std::vector<uint32_t>& word) -> std::optional<int> {
              return degree_of_word(make_word(f, word));
          },
          py::arg("field"), py::arg("word"), "Interpolant degree; None for the zero word");
    m.def("hamming_distance",
          [](const Field& f, const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
              return hamming_distance(make_word(f, a), make_word(f, b));
          },
          py::arg("field"), py::arg("a"), py::arg("b"));
    m.def("product_of_linear_factors",
          [](const Field& f, const std::vector<uint32_t>& roots) {
              return product_of_linear_factors(f, roots).coeffs();
          },
          py::arg("field"), py::arg("roots"));
    m.def("bch_designed_distance_check",
          [](const Field& f, const std::vector<uint32_t>& coeffs, uint32_t l, uint32_t delta) {
              return bch_designed_distance_check(f, make_poly(f, coeffs), l, delta);
          },
          py::arg("field"), py::arg("coeffs"), py::arg("l"), py::arg("delta"));

    // transforms
    m.def("dft",
          [](const Field& f, const std::vector<uint32_t>& v) {
              return dft(make_word(f, v)).entries();
          },
          py::arg("field"), py::arg("vector"));
    m.def("idft",
          [](const Field& f, const std::vector<uint32_t>& v) {
              return idft(make_word(f, v)).entries();
          },
          py::arg("field"), py::arg("vector"));
    m.def("dft_poly",
          [](const Field& f, const std::vector<uint32_t>& coeffs) {
              return dft_poly(make_poly(f, coeffs)).coeffs();
          },
          py::arg("field"), py::arg("coeffs"));
    m.def("idft_poly",
          [](const Field& f, const std::vector<uint32_t>& coeffs) {
              return idft_poly(make_poly(f, coeffs)).coeffs();
          },
          py::arg("field"), py::arg("coeffs"));
    m.def("poly_to_cyclic",
          [](const CyclicRSCode& c, const std::vector<uint32_t>& s) {
              return poly_to_cyclic(c, make_poly(c.field(), s)).coeffs();
          },
          py::arg("code"), py::arg("s"));
    m.def("cyclic_to_poly",
          [](const CyclicRSCode& c, const std::vector<uint32_t>& l) {
              return cyclic_to_poly(c, make_poly(c.field(), l)).coeffs();
          },
          py::arg("code"), py::arg("l"));
    m.def("deep_hole_image",
          [](const CyclicRSCode& c, const std::vector<uint32_t>& u) {
              DeepHoleImage img = deep_hole_image(c, make_poly(c.field(), u));
              py::dict out;
              out["a"] = img.a;
              out["l"] = img.l.coeffs();
              out["which"] = img.which == DeepHoleCenter::g1 ? "g1" : "g2";
              return out;
          },
          py::arg("code"), py::arg("u"));
    m.def("distance_preservation_check",
          [](const Field& f, const std::vector<uint32_t>& s, const std::vector<uint32_t>& t) {
              return distance_preservation_check(make_poly(f, s), make_poly(f, t));
          },
          py::arg("field"), py::arg("s"), py::arg("t"));

    // exact decoding and deep holes
    m.def("error_distance",
          [](const RSCode& c, const std::vector<uint32_t>& word, unsigned workers, bool force) {
              return json_to_py(
                  to_json(error_distance_exact(c, make_word(c.field(), word),
                                               options(workers, force))));
          },
          py::arg("code"), py::arg("word"), py::arg("workers") = 0, py::arg("force") = false,
          "Exhaustive maximum-likelihood decoding report");
    m.def("cyclic_error_distance",
          [](const CyclicRSCode& c, const std::vector<uint32_t>& poly, unsigned workers,
             bool force) {
              return json_to_py(
                  to_json(error_distance_exact(c, make_poly(c.field(), poly),
                                               options(workers, force))));
          },
          py::arg("code"), py::arg("poly"), py::arg("workers") = 0, py::arg("force") = false);
    m.def("lemma11_bounds",
          [](const RSCode& c, const std::vector<uint32_t>& word) {
              return lemma11_bounds(c, make_word(c.field(), word));
          },
          py::arg("code"), py::arg("word"), "(n - deg(u), n - k) for k <= deg(u) <= n-1");
    m.def("construct_deep_hole",
          [](const RSCode& c, const std::string& shape, uint32_t a,
             const std::vector<uint32_t>& tail) {
              return construct_deep_hole(
                         c, DeepHoleFamily{shape_from_name(shape), a,
                                           make_poly(c.field(), tail)})
                  .entries();
          },
          py::arg("code"), py::arg("shape"), py::arg("a") = 1,
          py::arg("tail") = std::vector<uint32_t>{});
    m.def("construct_cyclic_deep_hole",
          [](const CyclicRSCode& c, const std::string& shape, uint32_t a,
             const std::vector<uint32_t>& tail) {
              return construct_cyclic_deep_hole(
                         c, DeepHoleFamily{shape_from_name(shape), a,
                                           make_poly(c.field(), tail)})
                  .coeffs();
          },
          py::arg("code"), py::arg("shape"), py::arg("a") = 1,
          py::arg("tail") = std::vector<uint32_t>{});
    m.def("count_trivial_deep_holes", &count_trivial_deep_holes, py::arg("code"));
    m.def("count_theorem12_deep_holes", &count_theorem12_deep_holes, py::arg("code"));
    m.def("verify_theorem12",
          [](const RSCode& c, std::optional<uint64_t> samples, std::optional<uint64_t> seed,
             unsigned workers, bool force) {
              if (samples) {
                  if (!seed) throw Error("sampled mode requires a seed");
                  return json_to_py(to_json(
                      verify_theorem12_sampled(c, *samples, *seed, options(workers, force))));
              }
              return json_to_py(to_json(verify_theorem12(c, options(workers, force))));
          },
          py::arg("code"), py::arg("samples") = std::nullopt, py::arg("seed") = std::nullopt,
          py::arg("workers") = 0, py::arg("force") = false);
    m.def("census_conjecture43",
          [](const RSCode& c, std::optional<uint64_t> samples, std::optional<uint64_t> seed,
             unsigned workers, bool force) {
              if (samples) {
                  if (!seed) throw Error("sampled mode requires a seed");
                  return json_to_py(to_json(census_conjecture43_sampled(
                      c, *samples, *seed, options(workers, force))));
              }
              return json_to_py(to_json(census_conjecture43(c, options(workers, force))));
          },
          py::arg("code"), py::arg("samples") = std::nullopt, py::arg("seed") = std::nullopt,
          py::arg("workers") = 0, py::arg("force") = false);
    m.def("reproduce_table",
          [](const std::string& name, unsigned workers) {
              return json_to_py(to_json(
                  reproduce_table(reference_table_from_name(name), options(workers, false))));
          },
          py::arg("table"), py::arg("workers") = 0,
          "Re-derive one bundled reference table ('1'..'4' or 'e424')");

#ifdef VERSION_INFO
#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
