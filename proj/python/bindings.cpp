#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lstab/census.hpp"
#include "lstab/continuum.hpp"
#include "lstab/freiman.hpp"
#include "lstab/intset.hpp"
#include "lstab/set_literal.hpp"
#include "lstab/stability.hpp"

namespace py = pybind11;
using namespace lstab;

namespace {

using Pairs = std::vector<std::pair<py::object, py::object>>;

IntSet to_set(const std::vector<std::int64_t>& v) { return IntSet::from_elements(v); }

// Accepts int, str ("p/q") or fractions.Fraction.
Rational to_rational(const py::handle& h) { return Rational::parse(py::str(h).cast<std::string>()); }

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(r.numerator_str())), py::int_(py::str(r.denominator_str())));
}

IntervalUnion to_union(const Pairs& pairs) {
  std::vector<Interval> ivs;
  ivs.reserve(pairs.size());
  for (const auto& [lo, hi] : pairs) ivs.push_back(Interval{to_rational(lo), to_rational(hi)});
  return IntervalUnion(std::move(ivs));
}

py::list from_union(const IntervalUnion& u) {
  py::list out;
  for (const auto& iv : u.intervals()) out.append(py::make_tuple(to_fraction(iv.lo), to_fraction(iv.hi)));
  return out;
}

py::dict from_report(const Report& r) {
  py::dict d;
  for (const auto& [k, v] : r.fields) d[py::str(k)] = v;
  d["RESULT"] = std::string(to_string(r.result));
  return d;
}

}  // namespace

PYBIND11_MODULE(leftstable, m) {
  m.doc() = "Left-stable sets of integers and finite unions of rational intervals";

  static py::exception<InconsistencyError> inconsistency(m, "InconsistencyError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InconsistencyError& e) {
      py::set_error(inconsistency, e.what());
    } catch (const Error& e) {
      py::set_error(PyExc_ValueError, e.what());
    }
  });

  // Integer sets are plain lists of nonnegative ints.
  m.def("parse_set_literal", [](const std::string& s) { return parse_set_literal(s).elements(); });
  m.def("format_set_literal", [](const std::vector<std::int64_t>& a) { return format_set_literal(to_set(a)); });
  m.def("sumset", [](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    return sumset(to_set(a), to_set(b)).elements();
  });
  m.def("k_fold_sum", [](const std::vector<std::int64_t>& a, int k) { return k_fold_sum(to_set(a), k).elements(); });
  m.def("set_stats", [](const std::vector<std::int64_t>& a) {
    const auto s = stats(to_set(a));
    py::dict d;
    d["min"] = s.min;
    d["max"] = s.max;
    d["diam"] = s.diam;
    d["gcd_star"] = s.gcd_star;
    d["n_a"] = s.n_a;
    d["cardinality"] = s.cardinality;
    return d;
  });

  m.def("is_left_stable", [](const std::vector<std::int64_t>& a) { return is_left_stable(to_set(a)).stable; });
  m.def("stability_witness", [](const std::vector<std::int64_t>& a) -> py::object {
    const auto r = is_left_stable(to_set(a));
    if (!r.witness) return py::none();
    return py::make_tuple(r.witness->a, r.witness->b, r.witness->sum);
  });
  m.def("h_disc", [](std::int64_t n, std::int64_t x) {
    const auto h = h_disc(n, x);
    return py::make_tuple(h.k, h.value);
  }, "Returns (k, h).");
  m.def("lemma_disc_bound", [](const std::vector<std::int64_t>& a, std::int64_t x, std::int64_t k) {
    return to_fraction(lemma_disc_bound(to_set(a), x, k));
  });
  m.def("construct_extremal_disc", [](std::int64_t n, std::int64_t x) {
    return construct_extremal_disc(n, x).elements();
  });

  m.def("classify", [](const std::vector<std::int64_t>& a) {
    const auto c = classify(to_set(a));
    py::dict d;
    d["cardinality"] = c.cardinality;
    d["n_a"] = c.n_a;
    d["sumset_size"] = c.sum_size;
    d["bound"] = c.bound;
    d["category"] = std::string(to_string(c.category));
    return d;
  });
  m.def("decompose_critical", [](const std::vector<std::int64_t>& a) {
    const auto dc = decompose_critical(to_set(a));
    py::dict d;
    d["a1"] = dc.a1.elements();
    d["interval"] = py::make_tuple(dc.run_start, dc.run_end);
    d["a2"] = dc.a2.elements();
    d["step"] = dc.step;
    d["offset"] = dc.offset;
    d["n_a"] = dc.n_a;
    return d;
  });
  m.def("freiman_3k4_pair_check", [](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    return from_report(freiman_3k4_pair_check(to_set(a), to_set(b)).to_report());
  });
  m.def("grynkiewicz_params", [](std::int64_t size_a, std::int64_t size_b) {
    const auto p = grynkiewicz_params(size_a, size_b);
    return py::make_tuple(p.s, p.s_prime_max);
  }, "Returns (s, largest admissible s').");
  m.def("grynkiewicz_check",
        [](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b, std::int64_t s_prime) {
          return from_report(grynkiewicz_check(to_set(a), to_set(b), s_prime).to_report());
        });

  m.def("theorem_class", [](std::int64_t n, unsigned jobs) {
    CensusOptions o;
    o.jobs = jobs;
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& s : theorem_class(n, o)) out.push_back(s.elements());
    return out;
  }, py::arg("n"), py::arg("jobs") = 1);
  m.def("count_left_stable", [](std::int64_t n) {
    std::int64_t count = 0;
    enumerate_left_stable(n, EnumerateConstraints{}, [&](const IntSet&) { ++count; });
    return count;
  }, "Number of left-stable sets containing 0 and n.");
  m.def("sharpness_census", [](std::int64_t n, std::int64_t x) {
    const auto r = sharpness_census(n, x);
    py::dict d;
    d["n"] = r.n;
    d["x"] = r.x;
    d["bound"] = r.bound;
    d["achieved_max"] = r.achieved_max;
    d["total_enumerated"] = r.total_enumerated;
    std::vector<std::vector<std::int64_t>> sets;
    for (const auto& s : r.extremal_sets) sets.push_back(s.elements());
    d["extremal_sets"] = sets;
    return d;
  });
  m.def("verify_remark_sets", [] { return from_report(verify_remark_sets()); });

  // Interval unions are lists of (lo, hi) pairs; endpoints come back as Fraction.
  m.def("normalize_intervals", [](const Pairs& u) { return from_union(to_union(u)); });
  m.def("measure", [](const Pairs& u) { return to_fraction(measure(to_union(u))); });
  m.def("minkowski_sum", [](const Pairs& u, const Pairs& v) {
    return from_union(minkowski_sum(to_union(u), to_union(v)));
  });
  m.def("is_left_stable_cont", [](const Pairs& u) { return is_left_stable_cont(to_union(u)).stable; });
  m.def("h_cont", [](const py::object& x, const py::object& d) {
    return to_fraction(h_cont(to_rational(x), to_rational(d)));
  }, py::arg("x"), py::arg("d") = 1);
  m.def("lemma_cont_bound", [](const Pairs& u, const py::object& x, std::int64_t k) {
    return to_fraction(lemma_cont_bound(to_union(u), to_rational(x), k));
  });
  m.def("construct_extremal_cont", [](const py::object& x, const py::object& d) {
    return from_union(construct_extremal_cont(to_rational(x), to_rational(d)));
  }, py::arg("x"), py::arg("d") = 1);
  m.def("ruzsa_check", [](const Pairs& a, const Pairs& b) {
    return from_report(ruzsa_check(to_union(a), to_union(b)).to_report());
  });
  m.def("critical_envelope_check", [](const Pairs& a) {
    return from_report(critical_envelope_check(to_union(a)).to_report());
  });
  m.def("envelope_check_at", [](const Pairs& a, const py::object& b) {
    const auto c = envelope_check_at(to_union(a), to_rational(b));
    py::dict d;
    d["b"] = to_fraction(c.b);
    d["pass"] = c.pass;
    if (!c.pass) {
      d["piece"] = c.failing_piece;
      d["breakpoint"] = to_fraction(*c.failing_x);
    }
    return d;
  });
}
