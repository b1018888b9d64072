#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "setlab/classifiers.hpp"
#include "setlab/family_algebra.hpp"
#include "setlab/family_lab.hpp"
#include "setlab/filter_conditions.hpp"
#include "setlab/generators.hpp"
#include "setlab/partitioner.hpp"
#include "setlab/set_io.hpp"
#include "setlab/shiftpunch.hpp"
#include "setlab/spec_json.hpp"
#include "setlab/symbolic.hpp"

namespace py = pybind11;
using namespace setlab;

namespace {

py::object opt(const std::optional<std::size_t>& v) { return v ? py::cast(*v) : py::none(); }

py::dict verdict_dict(const WindowVerdict& v) {
  py::dict d;
  d["holds"] = v.holds();
  d["status"] = to_string(v.status);
  d["interval"] = v.interval ? py::cast(std::make_pair(v.interval->start, v.interval->start + v.interval->length))
                             : py::none();
  d["elements"] = v.elements;
  return d;
}

py::dict search_dict(const SearchResult& s) {
  py::dict d;
  d["found"] = s.found();
  d["status"] = to_string(s.status);
  d["witness"] = s.witness;
  return d;
}

py::dict profile_dict(const GapProfile& p) {
  py::dict d;
  d["covering_gap"] = opt(p.covering_gap);
  d["longest_run"] = p.longest_run;
  d["head"] = opt(p.head);
  d["tail_slack"] = opt(p.tail_slack);
  return d;
}

Polynomial poly_from(const std::vector<std::int64_t>& c) { return Polynomial{c}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite-horizon combinatorics of large sets of integers";

  // Translators run newest first, so the derived type goes last.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<WindowSet>(m, "WindowSet")
      .def(py::init([](std::size_t e, const std::vector<std::size_t>& members, std::size_t coded) {
             return WindowSet::from_members(e, members, coded);
           }),
           py::arg("effective_horizon"), py::arg("members") = std::vector<std::size_t>{}, py::arg("coded_horizon") = 0)
      .def_static("full", &WindowSet::full, py::arg("effective_horizon"), py::arg("coded_horizon") = 0)
      .def_static("parse", &parse_set_text)
      .def_static("read", &read_set_file)
      .def_property_readonly("effective_horizon", &WindowSet::effective_horizon)
      .def_property_readonly("coded_horizon", &WindowSet::coded_horizon)
      .def("members", &WindowSet::members)
      .def("runs", &WindowSet::runs)
      .def("restricted", &WindowSet::restricted)
      .def("write", [](const WindowSet& a, const std::string& path) { write_set_file(path, a); })
      .def("to_text", [](const WindowSet& a) { return to_text(a); })
      .def("__contains__", &WindowSet::contains)
      .def("__len__", &WindowSet::count)
      .def("__eq__", [](const WindowSet& a, const WindowSet& b) { return a == b; })
      .def("__repr__", [](const WindowSet& a) {
        return "WindowSet(E=" + std::to_string(a.effective_horizon()) + ", count=" + std::to_string(a.count()) + ")";
      });

  m.def("translate_down", &translate_down);
  m.def("translate_up", &translate_up);
  m.def("dilate", &dilate);
  m.def("contract", &contract);
  m.def("union", &set_union);
  m.def("intersection", &set_intersection);
  m.def("difference", &set_difference);
  m.def("complement", &complement);
  m.def("is_subset", &is_subset);
  m.def("difference_union", &difference_union);
  m.def("gap_profile", [](const WindowSet& a, std::size_t first) { return profile_dict(gap_profile(a, first)); },
        py::arg("a"), py::arg("first") = 0);

  m.def("syndetic_on_window",
        [](const WindowSet& a, std::size_t n, std::size_t first) { return verdict_dict(syndetic_on_window(a, n, first)); },
        py::arg("a"), py::arg("n"), py::arg("first") = 0);
  m.def("thick_on_window", [](const WindowSet& a, std::size_t l) { return verdict_dict(thick_on_window(a, l)); });
  m.def("piecewise_syndetic_on_window", [](const WindowSet& a, std::size_t n, std::size_t l) {
    return verdict_dict(piecewise_syndetic_on_window(a, n, l));
  });
  m.def("thickly_syndetic_on_window", [](const WindowSet& a, std::size_t k, std::size_t n) {
    return verdict_dict(thickly_syndetic_on_window(a, k, n));
  });
  m.def("dyadic_cover_check", [](const WindowSet& a, std::size_t k) { return verdict_dict(dyadic_cover_check(a, k)); });
  m.def("ip_n_member", [](const WindowSet& a, std::size_t n, std::size_t bound) {
    return search_dict(ip_n_member(a, n, bound));
  });
  m.def("ps_shift_witness", [](const WindowSet& a, std::size_t n, std::size_t l) {
    return search_dict(ps_shift_witness(a, n, l));
  });
  m.def(
      "brauer_search",
      [](const WindowSet& a, const std::vector<std::vector<std::int64_t>>& polys) {
        std::vector<Polynomial> ps;
        for (const auto& c : polys) ps.push_back(poly_from(c));
        return search_dict(brauer_search(a, ps));
      },
      py::arg("a"), py::arg("polys"), "each polynomial is the coefficient list of y, y^2, ...");

  m.def(
      "cssd_check",
      [](const WindowSet& b, std::size_t f_max, std::size_t f_bound, std::size_t gap, std::optional<std::size_t> multiple) {
        CssdBudget budget{f_max, f_bound, gap};
        return verdict_dict(multiple ? cssd_upgraded_check(b, budget, *multiple) : cssd_check(b, budget));
      },
      py::arg("b"), py::arg("f_max") = 2, py::arg("f_bound") = 64, py::arg("gap_bound") = 64,
      py::arg("multiple") = py::none());
  m.def(
      "ds_check",
      [](const WindowSet& a, const WindowSet& b, std::size_t f_max, std::size_t f_bound, std::size_t gap) {
        return verdict_dict(ds_check(a, b, {f_max, f_bound, gap}));
      },
      py::arg("a"), py::arg("b"), py::arg("f_max") = 2, py::arg("f_bound") = 64, py::arg("gap_bound") = 64);
  m.def(
      "dthick_search",
      [](const WindowSet& b, std::size_t f_max, std::size_t l, std::size_t f_bound) {
        return search_dict(dthick_search(b, f_max, l, f_bound));
      },
      py::arg("b"), py::arg("f_max"), py::arg("l"), py::arg("f_bound") = 64);
  m.def(
      "dct_search",
      [](const WindowSet& b, std::size_t f_max, std::size_t l, std::size_t f_bound) {
        return search_dict(dct_search(b, f_max, l, f_bound));
      },
      py::arg("b"), py::arg("f_max"), py::arg("l"), py::arg("f_bound") = 64);

  // Generators take the same JSON document the CLI reads.
  m.def("generate", [](const std::string& spec_json) { return generate(spec_from_json(spec_json)); });
  m.def("chacon_word", &chacon_word);
  m.def("golden_convergent", [](std::int64_t q) {
    auto r = golden_convergent(q);
    return std::make_pair(r.numerator, r.denominator);
  });
  m.def("battery", [](std::size_t horizon) {
    std::vector<std::pair<std::string, WindowSet>> out;
    for (const auto& b : rotation_battery(horizon)) out.emplace_back(b.name, generate(b.spec));
    return out;
  });

  m.def("pattern_return_set", &pattern_return_set);
  m.def("uniform_recurrence_gaps", [](const WindowSet& x, const std::vector<std::size_t>& depths) {
    py::dict d;
    for (const auto& [depth, p] : uniform_recurrence_gaps(x, depths)) d[py::cast(depth)] = profile_dict(p);
    return d;
  });

  py::class_<PunchTrace>(m, "PunchTrace")
      .def_property_readonly("step_count", &PunchTrace::step_count)
      .def_readonly("derived_b", &PunchTrace::derived_b)
      .def_readonly("exactness_bound", &PunchTrace::exactness_bound)
      .def("window_lengths", [](const PunchTrace& t) {
        std::vector<std::size_t> out;
        for (const auto& st : t.steps) out.push_back(st.window_length(t.input.effective_horizon()));
        return out;
      })
      .def("l_set", [](const PunchTrace& t, std::size_t l) { return l_set(t, l); })
      .def("csv", [](const PunchTrace& t) { return trace_csv(t); })
      .def("verify", [](const PunchTrace& t, const std::vector<std::size_t>& sample) {
        auto r = verify_trace(t, sample);
        py::dict d;
        d["checks"] = r.checks;
        py::list fails;
        for (const auto& f : r.failures) fails.append(py::make_tuple(f.assertion, f.indices, f.detail));
        d["failures"] = fails;
        return d;
      });
  m.def("punch_run", &run, py::arg("a"), py::arg("steps"));

  m.def("split_syndetic", [](const WindowSet& a) {
    auto p = split_syndetic(a);
    return std::make_pair(p.first, p.second);
  });
  m.def("split_thick_greedy", [](const WindowSet& a, std::size_t l_max) {
    auto p = split_thick_greedy(a, l_max);
    return std::make_pair(p.first, p.second);
  });
  m.def("rotation_partition_pair", [](std::int64_t p, std::int64_t q, std::size_t horizon) {
    auto pair = rotation_partition_pair(Rational(p, q), horizon);
    return std::make_pair(pair.first, pair.second);
  });

  py::class_<FiniteFamily>(m, "FiniteFamily")
      .def(py::init<unsigned>())
      .def_static("power_set", &FiniteFamily::power_set)
      .def_static("principal", &FiniteFamily::principal)
      .def_static("delta", &FiniteFamily::delta)
      .def_static("upward_closure", &upward_closure)
      .def_property_readonly("ground_size", &FiniteFamily::ground_size)
      .def("members", &FiniteFamily::members)
      .def("minimal_members", &FiniteFamily::minimal_members)
      .def("__contains__", &FiniteFamily::contains)
      .def("__len__", &FiniteFamily::size)
      .def("__eq__", [](const FiniteFamily& a, const FiniteFamily& b) { return a == b; })
      .def("__repr__", &family_str);

  m.def("dual", &dual);
  m.def("meet", &meet);
  m.def("family_sum", &sum);
  m.def("translate_set_by_family", &translate_set_by_family);
  m.def("classify_family", [](const FiniteFamily& f) {
    auto flags = classify_family(f);
    py::dict d;
    d["is_filter"] = flags.is_filter;
    d["is_partition_regular"] = flags.is_partition_regular;
    d["is_idempotent"] = flags.is_idempotent;
    d["is_translation_invariant"] = flags.is_translation_invariant;
    d["is_ultrafilter"] = flags.is_ultrafilter;
    return d;
  });
  m.def("all_upward_closed_families", &all_upward_closed_families);
  m.def("family_lab_transcript", [](unsigned n) { return lab_transcript(run_exhaustive_lab(n)); });
}
