#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "clusterword/bwt.hpp"
#include "clusterword/iet_continuous.hpp"
#include "clusterword/iet_discrete.hpp"
#include "clusterword/oracle.hpp"
#include "json.hpp"

namespace py = pybind11;
using namespace clusterword;

namespace {

// Words cross the boundary in the CLI text format ("122131313" or "10,2,1").
Word word_arg(const std::string& text) { return parse_word(text); }

std::optional<std::string> optional_word(const std::optional<Word>& w) {
  if (!w) return std::nullopt;
  return format_word(*w);
}

std::vector<ExactReal> reals(const std::vector<std::string>& texts) {
  std::vector<ExactReal> out;
  for (const auto& t : texts) out.push_back(parse_exact_real(t));
  return out;
}

ContinuousIET continuous(const std::vector<std::string>& alphas, const std::vector<Letter>& pi) {
  return ContinuousIET(reals(alphas), Permutation(pi));
}

py::object json_to_python(const std::string& text) {
  return py::module_::import("json").attr("loads")(text);
}

}  // namespace

PYBIND11_MODULE(_clusterword, m) {
  m.doc() = "Burrows-Wheeler clustering and interval exchanges";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::invalid_argument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const std::domain_error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("bwt", [](const std::string& w) { return format_word(bwt(word_arg(w))); }, py::arg("word"));
  m.def("is_primitive", [](const std::string& w) { return is_primitive(word_arg(w)); }, py::arg("word"));
  m.def("canonical_conjugate", [](const std::string& w) { return format_word(canonical_conjugate(word_arg(w))); },
        py::arg("word"));

  m.def(
      "inverse_bwt",
      [](const std::string& b) {
        const auto result = inverse_bwt(word_arg(b));
        py::dict d;
        d["status"] = to_string(result.status);
        d["root"] = result.antecedent ? py::object(py::str(format_word(result.antecedent->root))) : py::none();
        d["power"] = result.antecedent ? py::object(py::int_(result.antecedent->power)) : py::none();
        py::list cycles;
        for (const auto& c : result.cycle_words) cycles.append(format_word(c));
        d["cycle_words"] = cycles;
        return d;
      },
      py::arg("word"));

  m.def(
      "clustering_report",
      [](const std::string& w) {
        const auto report = clustering_report(word_arg(w));
        py::dict d;
        d["clustering"] = report.is_clustering;
        d["permutation"] = report.permutation ? py::object(py::cast(report.permutation->images())) : py::none();
        d["perfect"] = report.perfect;
        d["bwt"] = format_word(report.bwt_image);
        d["occurring_letters"] = report.occurring_letters;
        return d;
      },
      py::arg("word"));

  m.def(
      "clustering_image",
      [](const std::vector<Letter>& pi, const std::vector<std::size_t>& counts) {
        return format_word(clustering_image(Permutation(pi), ParikhVector(counts)));
      },
      py::arg("permutation"), py::arg("counts"));

  py::class_<DiscreteIET>(m, "DiscreteIET")
      .def(py::init([](const std::vector<std::size_t>& lengths, const std::vector<Letter>& pi) {
             return DiscreteIET(lengths, Permutation(pi));
           }),
           py::arg("lengths"), py::arg("permutation"))
      .def_property_readonly("lengths", &DiscreteIET::lengths)
      .def_property_readonly("permutation", [](const DiscreteIET& t) { return t.permutation().images(); })
      .def_property_readonly("offsets", &DiscreteIET::offsets)
      .def_property_readonly("point_count", &DiscreteIET::point_count)
      .def("letter", &DiscreteIET::letter, py::arg("point"))
      .def("apply", &DiscreteIET::apply, py::arg("point"))
      .def("is_minimal", &DiscreteIET::is_minimal)
      .def("orbits",
           [](const DiscreteIET& t) {
             const auto o = t.orbit_decomposition();
             py::list out;
             for (std::size_t c = 0; c < o.cycles.size(); ++c)
               out.append(py::make_tuple(o.cycles[c], format_word(o.words[c])));
             return out;
           })
      .def("clustering_word", [](const DiscreteIET& t) { return optional_word(t.clustering_word()); })
      .def("nonminimality_witness", [](const DiscreteIET& t) { return optional_word(t.nonminimality_witness()); })
      .def(
          "trajectory",
          [](const DiscreteIET& t, std::size_t start, std::size_t length) {
            return format_word(t.trajectory(start, length));
          },
          py::arg("start"), py::arg("length"))
      .def("__eq__", [](const DiscreteIET& a, const DiscreteIET& b) { return a == b; })
      .def("__repr__", [](const DiscreteIET& t) {
        std::string lengths;
        for (auto n : t.lengths()) lengths += (lengths.empty() ? "" : ",") + std::to_string(n);
        return "DiscreteIET(lengths=" + lengths + ", permutation=" + format_permutation(t.permutation()) + ")";
      });

  m.def("from_clustering_word", [](const std::string& w) { return from_clustering_word(word_arg(w)); },
        py::arg("word"));
  m.def("minimality_criterion_r3",
        [](const std::vector<std::size_t>& lengths, const std::vector<Letter>& pi) {
          return minimality_criterion_r3(lengths, Permutation(pi));
        },
        py::arg("lengths"), py::arg("permutation"));

  m.def(
      "continuous_trajectory",
      [](const std::vector<std::string>& alphas, const std::vector<Letter>& pi, const std::string& start,
         std::size_t length) { return format_word(continuous(alphas, pi).trajectory(parse_exact_real(start), length)); },
      py::arg("alphas"), py::arg("permutation"), py::arg("start"), py::arg("length"));
  m.def(
      "continuous_taus",
      [](const std::vector<std::string>& alphas, const std::vector<Letter>& pi) {
        const auto t = continuous(alphas, pi);
        std::vector<std::string> out;
        for (const auto& tau : t.taus()) out.push_back(tau.to_string());
        return out;
      },
      py::arg("alphas"), py::arg("permutation"));
  m.def(
      "sturmian_word",
      [](const std::string& alpha, std::size_t length) {
        const ExactReal a = alpha == "golden" ? ExactReal::golden_conjugate() : parse_exact_real(alpha);
        return format_word(sturmian_word(a, length));
      },
      py::arg("alpha"), py::arg("length"));
  m.def(
      "keane_check",
      [](const std::vector<std::string>& alphas, const std::vector<Letter>& pi, std::size_t depth) {
        const auto verdict = keane_check(continuous(alphas, pi), depth);
        py::dict d;
        if (const auto* hit = std::get_if<CollisionFound>(&verdict)) {
          d["verdict"] = "collision";
          d["from_cut"] = hit->from_cut;
          d["to_cut"] = hit->to_cut;
          d["steps"] = hit->steps;
        } else {
          d["verdict"] = "no-collision";
          d["depth"] = std::get<NoCollisionUpTo>(verdict).depth;
        }
        return d;
      },
      py::arg("alphas"), py::arg("permutation"), py::arg("depth"));

  m.def(
      "verify",
      [](const std::string& suite, std::size_t r, std::size_t bound, std::size_t threads) {
        VerifyOptions options;
        options.threads = threads;
        VerificationReport report;
        {
          py::gil_scoped_release release;
          if (suite == "theorem1") {
            report = verify_theorem1(r, bound, options);
          } else if (suite == "injectivity") {
            report = verify_injectivity(r, bound, options);
          } else if (suite == "nonsurjectivity") {
            report = verify_nonsurjectivity(r, bound, options);
          } else {
            throw std::invalid_argument("unknown suite '" + suite + "'");
          }
        }
        return json_to_python(report_to_json(report));
      },
      py::arg("suite"), py::arg("r"), py::arg("bound"), py::arg("threads") = 0);

  m.def(
      "census",
      [](std::size_t r, std::size_t n) {
        py::list out;
        for (const auto& e : clustering_census(r, n)) out.append(py::make_tuple(format_word(e.word), e.permutation.images()));
        return out;
      },
      py::arg("r"), py::arg("n"));
}
