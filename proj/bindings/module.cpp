#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "pearson/canonical.hpp"
#include "pearson/channel.hpp"
#include "pearson/codebook.hpp"
#include "pearson/commands.hpp"
#include "pearson/counting.hpp"
#include "pearson/detection.hpp"
#include "pearson/enumerate.hpp"
#include "pearson/word.hpp"

namespace py = pybind11;
using namespace pearson;

namespace {

// Counts overflow doubles long before they overflow python ints, so the
// big integers cross the boundary as exact decimal strings.
py::int_ to_py_int(const BigCount& v) {
  const std::string s = v.str();
  PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::tuple word_to_tuple(const Word& w) {
  py::tuple t(w.n());
  for (std::uint32_t i = 0; i < w.n(); ++i) t[i] = w[i];
  return t;
}

Codebook make_codebook(std::uint32_t q,
                       const std::vector<std::vector<Symbol>>& words) {
  if (words.empty()) throw std::invalid_argument("empty codebook");
  Codebook cb(q, static_cast<std::uint32_t>(words.front().size()));
  for (const auto& symbols : words) cb.add(Word(q, symbols));
  return cb;
}

py::list enumerate_to_list(const Codebook& cb) {
  py::list out;
  for (const auto& w : cb.words()) out.append(word_to_tuple(w));
  return out;
}

py::object verify_to_py(const std::optional<PearsonViolation>& v) {
  if (!v) return py::none();
  py::dict d;
  d["property"] = v->kind == ViolationKind::PropertyA ? "A" : "B";
  d["word"] = word_to_tuple(v->witness_a);
  d["other"] = v->witness_b ? py::object(word_to_tuple(*v->witness_b))
                            : py::object(py::none());
  d["c1"] = v->shift_c1 ? py::object(py::str(v->shift_c1->to_string()))
                        : py::object(py::none());
  d["c2"] = v->scale_c2 ? py::object(py::str(v->scale_c2->to_string()))
                        : py::object(py::none());
  d["message"] = v->to_string();
  return d;
}

py::dict stats_to_py(const TrialStats& s) {
  py::dict d;
  d["trials"] = s.trials;
  d["errors_pearson"] = s.word_errors_pearson;
  d["errors_euclidean"] = s.word_errors_euclidean;
  d["ties_pearson"] = s.ties_pearson;
  d["wer_pearson"] = s.wer_pearson;
  d["wer_euclidean"] = s.wer_euclidean;
  d["ci_pearson"] = s.wer_ci_pearson;
  d["ci_euclidean"] = s.wer_ci_euclidean;
  return d;
}

}  // namespace

PYBIND11_MODULE(_pearsoncodes, m) {
  m.doc() = "Pearson codes: counting, enumeration, verification, detection, "
            "and gain/offset channel simulation";
  m.attr("__version__") = kToolVersion;

  m.def("mobius", &mobius, py::arg("m"));
  m.def("totient", &totient, py::arg("m"));

  m.def(
      "count_t_constrained",
      [](std::uint32_t q, std::uint32_t n, std::uint32_t t) {
        return to_py_int(count_t_constrained(q, n, t));
      },
      py::arg("q"), py::arg("n"), py::arg("t"),
      "Exact number of length-n words over 0..q-1 containing t fixed "
      "reference symbols");
  m.def(
      "count_pearson",
      [](std::uint32_t q, std::uint32_t n) {
        return to_py_int(count_pearson_closed(q, n));
      },
      py::arg("q"), py::arg("n"),
      "Exact size of the optimal Pearson codebook (Mobius closed form)");
  m.def(
      "count_pearson_recursive",
      [](std::uint32_t q, std::uint32_t n) {
        return to_py_int(count_pearson_recursive(q, n));
      },
      py::arg("q"), py::arg("n"),
      "Same count through the divisor recursion, for cross checking");

  m.def(
      "redundancy",
      [](std::uint32_t q, std::uint32_t n) {
        const RedundancyReport r = redundancy_report(q, n);
        py::dict d;
        d["q"] = r.q;
        d["n"] = r.n;
        d["r1"] = r.r1;
        d["r2"] = r.r2;
        d["rP"] = r.rP;
        d["r1_approx"] = r.r1_approx;
        d["r2_approx"] = r.r2_approx;
        d["rP_approx"] = r.rP_approx;
        d["r0_approx"] = r.r0_applicable ? py::object(py::float_(r.r0_approx))
                                         : py::object(py::none());
        return d;
      },
      py::arg("q"), py::arg("n"));

  m.def(
      "enumerate_pearson",
      [](std::uint32_t q, std::uint32_t n, std::uint64_t budget) {
        return enumerate_to_list(make_pearson_codebook(q, n, budget));
      },
      py::arg("q"), py::arg("n"),
      py::arg("budget") = kDefaultEnumerationBudget);
  m.def(
      "enumerate_t_constrained",
      [](std::uint32_t q, std::uint32_t n, const std::vector<Symbol>& refs,
         std::uint64_t budget) {
        return enumerate_to_list(
            make_t_constrained_codebook(q, n, refs, budget));
      },
      py::arg("q"), py::arg("n"), py::arg("refs"),
      py::arg("budget") = kDefaultEnumerationBudget);

  m.def(
      "canonicalize",
      [](std::uint32_t q, const std::vector<Symbol>& symbols) {
        return word_to_tuple(canonicalize(Word(q, symbols)));
      },
      py::arg("q"), py::arg("word"),
      "Shift to minimum 0 and divide by the gcd of the entries");

  m.def(
      "verify_codebook",
      [](std::uint32_t q, const std::vector<std::vector<Symbol>>& words) {
        return verify_to_py(verify_pearson(make_codebook(q, words)));
      },
      py::arg("q"), py::arg("words"),
      "None when the codebook is a Pearson code, else a violation dict");

  m.def(
      "pearson_distance",
      [](const std::vector<double>& r, const std::vector<double>& x) {
        return pearson_distance(r, x);
      },
      py::arg("r"), py::arg("x"));

  m.def(
      "detect",
      [](std::uint32_t q, const std::vector<std::vector<Symbol>>& words,
         const std::vector<double>& received, const std::string& metric) {
        if (metric != "pearson" && metric != "euclidean") {
          throw std::invalid_argument("metric must be pearson or euclidean");
        }
        const Codebook cb = make_codebook(q, words);
        const Detector det(cb);
        DetectionResult res = metric == "euclidean"
                                  ? det.min_euclidean(received)
                                  : det.min_pearson(received);
        py::dict d;
        d["word"] = word_to_tuple(res.decided);
        d["distance"] = res.distance;
        d["tie"] = res.tie;
        return d;
      },
      py::arg("q"), py::arg("words"), py::arg("received"),
      py::arg("metric") = "pearson");

  m.def(
      "simulate",
      [](std::uint32_t q, std::uint32_t n, double gain, double offset,
         double sigma, std::uint64_t trials, std::uint64_t seed,
         const std::string& family, const std::vector<Symbol>& refs,
         std::uint64_t budget, unsigned workers) {
        if (family != "pearson" && family != "tconstrained") {
          throw std::invalid_argument("family must be pearson or tconstrained");
        }
        Codebook cb = family == "tconstrained"
                          ? make_t_constrained_codebook(q, n, refs, budget)
                          : make_pearson_codebook(q, n, budget);
        ChannelParams p;
        p.gain_a = gain;
        p.offset_b = offset;
        p.noise_sigma = sigma;
        p.seed = seed;
        return stats_to_py(run_experiment(cb, p, trials, DetectorSet{},
                                          workers));
      },
      py::arg("q"), py::arg("n"), py::arg("gain") = 1.0,
      py::arg("offset") = 0.0, py::arg("sigma") = 0.0,
      py::arg("trials") = 10000, py::arg("seed") = 1,
      py::arg("family") = "pearson",
      py::arg("refs") = std::vector<Symbol>{},
      py::arg("budget") = kDefaultEnumerationBudget,
      py::arg("workers") = 1);
}
