#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "circmin/oracle.hpp"

namespace py = pybind11;
using namespace circmin;

namespace {

CircularMatrix matrix_from_args(py::object rows, py::object dense, int n,
                                bool drop_dominated) {
  if (!rows.is_none() && !dense.is_none()) {
    throw py::value_error("pass rows or dense, not both");
  }
  if (!rows.is_none()) {
    return CircularMatrix::from_intervals(
        n, rows.cast<std::vector<std::pair<int, int>>>(), drop_dominated);
  }
  if (!dense.is_none()) {
    return CircularMatrix::from_dense(
        dense.cast<std::vector<std::vector<int>>>(), drop_dominated);
  }
  throw py::value_error("pass rows or dense");
}

std::vector<Arc> arcs_from_tuples(
    const std::vector<std::tuple<int, int, std::string>>& raw) {
  std::vector<Arc> arcs;
  arcs.reserve(raw.size());
  for (const auto& [tail, head, kind] : raw) {
    ArcKind k;
    if (kind == "row") {
      k = ArcKind::Row;
    } else if (kind == "fwd") {
      k = ArcKind::Forward;
    } else if (kind == "rev") {
      k = ArcKind::Reverse;
    } else if (kind == "long") {
      k = ArcKind::Long;
    } else {
      throw py::value_error("arc kind must be row|fwd|rev|long");
    }
    arcs.push_back({tail, head, k, 0});
  }
  return arcs;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Circulant contraction minors of circular 0/1 matrices via "
            "directed circuit families";

  static py::exception<DomainError> domain_error(m, "DomainError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      py::set_error(domain_error, e.what());
    }
  });

  py::class_<CirculantPattern>(m, "CirculantPattern")
      .def_readonly("order", &CirculantPattern::order)
      .def_readonly("weight", &CirculantPattern::weight)
      .def("__repr__", [](const CirculantPattern& p) {
        return "CirculantPattern(order=" + std::to_string(p.order) +
               ", weight=" + std::to_string(p.weight) + ")";
      });

  py::class_<CircularMatrix>(m, "CircularMatrix")
      .def(py::init(&matrix_from_args), py::arg("rows") = py::none(),
           py::arg("dense") = py::none(), py::arg("n") = 0,
           py::arg("drop_dominated") = false)
      .def_static("circulant", &CircularMatrix::circulant, py::arg("n"),
                  py::arg("k"))
      .def_property_readonly("n", &CircularMatrix::column_count)
      .def_property_readonly("row_count", &CircularMatrix::row_count)
      .def_property_readonly("rows",
                             [](const CircularMatrix& a) {
                               std::vector<std::pair<int, int>> out;
                               for (const auto& r : a.rows()) {
                                 out.emplace_back(r.lo, r.hi);
                               }
                               return out;
                             })
      .def_property_readonly("pattern",
                             [](const CircularMatrix& a) -> py::object {
                               if (!a.pattern()) return py::none();
                               return py::cast(*a.pattern());
                             })
      .def("row_support", &CircularMatrix::row_support, py::arg("i"));

  py::class_<Minor>(m, "Minor")
      .def_readonly("columns", &Minor::columns)
      .def_readonly("traces", &Minor::traces)
      .def_readonly("source_rows", &Minor::source_rows)
      .def_property_readonly("kind", [](const Minor& m2) {
        return m2.kind == MinorKind::Contraction ? "contraction" : "deletion";
      });

  py::class_<Arc>(m, "Arc")
      .def_readonly("tail", &Arc::tail)
      .def_readonly("head", &Arc::head)
      .def_readonly("row", &Arc::row)
      .def_property_readonly(
          "kind", [](const Arc& a) { return std::string(to_string(a.kind)); })
      .def("__repr__", [](const Arc& a) {
        return "Arc(" + std::to_string(a.tail) + "->" +
               std::to_string(a.head) + " " + std::string(to_string(a.kind)) +
               ")";
      });

  py::class_<ArcDigraph>(m, "ArcDigraph")
      .def_static("for_matrix", &ArcDigraph::for_matrix, py::arg("matrix"))
      .def_static("circulant_reverse", &ArcDigraph::circulant_reverse,
                  py::arg("n"), py::arg("k"))
      .def_static("circulant_jump", &ArcDigraph::circulant_jump, py::arg("n"),
                  py::arg("k"))
      .def_property_readonly("n",
                             [](const ArcDigraph& d) {
                               return d.ground().size();
                             })
      .def_property_readonly(
          "flavor",
          [](const ArcDigraph& d) { return std::string(to_string(d.flavor())); })
      .def_property_readonly("arcs", &ArcDigraph::arcs)
      .def_property_readonly("row_arcs", &ArcDigraph::row_arcs)
      .def("jumped", &ArcDigraph::jumped, py::arg("arc"), py::arg("vertices"))
      .def("dump", &ArcDigraph::dump);

  py::class_<Block>(m, "Block")
      .def_readonly("bullet", &Block::bullet)
      .def_readonly("end", &Block::end)
      .def_readonly("leave_tail", &Block::leave_tail)
      .def_readonly("enter_head", &Block::enter_head)
      .def_readonly("member", &Block::member)
      .def_property_readonly("kind", [](const Block& b) {
        return std::string(to_string(b.kind));
      });

  py::class_<Classification>(m, "Classification")
      .def_readonly("circles", &Classification::circles)
      .def_readonly("crosses", &Classification::crosses)
      .def_readonly("bullets", &Classification::bullets)
      .def_readonly("essential_bullets", &Classification::essential_bullets)
      .def_readonly("blocks", &Classification::blocks);

  py::class_<Circuit>(m, "Circuit")
      .def_readonly("arcs", &Circuit::arcs)
      .def_readonly("vertices", &Circuit::vertices)
      .def_readonly("row_arc_count", &Circuit::row_arc_count)
      .def_readonly("long_arc_count", &Circuit::long_arc_count)
      .def_readonly("winding", &Circuit::winding);

  py::class_<CircuitFamily>(m, "CircuitFamily")
      .def_readonly("circuits", &CircuitFamily::circuits)
      .def_readonly("row_arc_total", &CircuitFamily::row_arc_total)
      .def_readonly("winding_total", &CircuitFamily::winding_total)
      .def_readonly("classes", &CircuitFamily::classes)
      .def_property_readonly("size", &CircuitFamily::size);

  py::class_<BadArc>(m, "BadArc")
      .def_readonly("arc", &BadArc::arc)
      .def_readonly("member", &BadArc::member)
      .def_readonly("jumped", &BadArc::jumped);

  py::class_<MinorWitness>(m, "MinorWitness")
      .def_readonly("bullets", &MinorWitness::bullets)
      .def_readonly("removed", &MinorWitness::removed)
      .def_readonly("order", &MinorWitness::order)
      .def_readonly("weight", &MinorWitness::weight)
      .def_readonly("circuit_count", &MinorWitness::circuit_count);

  py::class_<WindowSelection>(m, "WindowSelection")
      .def_readonly("index", &WindowSelection::index)
      .def_readonly("bullet", &WindowSelection::bullet)
      .def_readonly("candidates", &WindowSelection::candidates)
      .def_readonly("row", &WindowSelection::row)
      .def_readonly("offset", &WindowSelection::offset)
      .def_readonly("rewritten", &WindowSelection::rewritten);

  py::class_<SynthesisTrace>(m, "SynthesisTrace")
      .def_readonly("bullets", &SynthesisTrace::bullets)
      .def_readonly("normalized", &SynthesisTrace::normalized)
      .def_readonly("table", &SynthesisTrace::table)
      .def_readonly("passes", &SynthesisTrace::passes)
      .def_readonly("selected_row_arcs", &SynthesisTrace::selected_row_arcs)
      .def_readonly("forward_join_indices",
                    &SynthesisTrace::forward_join_indices)
      .def_readonly("forward_join_vertices",
                    &SynthesisTrace::forward_join_vertices)
      .def_readonly("forward_paths", &SynthesisTrace::forward_paths)
      .def_readonly("reverse_join_indices",
                    &SynthesisTrace::reverse_join_indices)
      .def_readonly("reverse_join_vertices",
                    &SynthesisTrace::reverse_join_vertices)
      .def_readonly("reverse_paths", &SynthesisTrace::reverse_paths);

  py::class_<ReverseFamilyParams>(m, "ReverseFamilyParams")
      .def_readonly("count", &ReverseFamilyParams::count)
      .def_readonly("row_arcs", &ReverseFamilyParams::row_arcs)
      .def_readonly("winding", &ReverseFamilyParams::winding)
      .def_readonly("reverse_steps", &ReverseFamilyParams::reverse_steps);

  py::class_<JumpFamilyParams>(m, "JumpFamilyParams")
      .def_readonly("count", &JumpFamilyParams::count)
      .def_readonly("winding", &JumpFamilyParams::winding)
      .def_readonly("short_jumps", &JumpFamilyParams::short_jumps)
      .def_readonly("long_jumps", &JumpFamilyParams::long_jumps);

  py::class_<ReverseTranslation>(m, "ReverseTranslation")
      .def_readonly("params", &ReverseTranslation::params)
      .def_readonly("pooled_order", &ReverseTranslation::pooled_order)
      .def_readonly("pooled_weight", &ReverseTranslation::pooled_weight);

  py::class_<MinorHit>(m, "MinorHit")
      .def_readonly("bullets", &MinorHit::bullets)
      .def_readonly("normalized", &MinorHit::normalized)
      .def_readonly("order", &MinorHit::order)
      .def_readonly("weight", &MinorHit::weight);

  py::class_<FamilyRecord>(m, "FamilyRecord")
      .def_readonly("bullets", &FamilyRecord::bullets)
      .def_readonly("order", &FamilyRecord::order)
      .def_readonly("weight", &FamilyRecord::weight)
      .def_readonly("family_count", &FamilyRecord::family_count);

  py::class_<CrossReport>(m, "CrossReport")
      .def_readonly("columns", &CrossReport::columns)
      .def_readonly("rows", &CrossReport::rows)
      .def_readonly("subset_hits", &CrossReport::subset_hits)
      .def_readonly("family_sets", &CrossReport::family_sets)
      .def_readonly("discrepancies", &CrossReport::discrepancies)
      .def_readonly("boundary_families", &CrossReport::boundary_families)
      .def_readonly("capped", &CrossReport::capped);

  py::class_<OracleLimits>(m, "OracleLimits")
      .def(py::init<>())
      .def_readwrite("max_columns", &OracleLimits::max_columns)
      .def_readwrite("max_circuits", &OracleLimits::max_circuits)
      .def_readwrite("max_families", &OracleLimits::max_families);

  m.def("circ_dist", [](int a, int b, int n) {
    return circ_dist(a, b, GroundSet(n));
  });
  m.def("interval_members",
        [](int lo, int hi, int n, const std::string& closure) {
          Closure c;
          if (closure == "closed") {
            c = Closure::Closed;
          } else if (closure == "half-open-left") {
            c = Closure::HalfOpenLeft;
          } else if (closure == "half-open-right") {
            c = Closure::HalfOpenRight;
          } else if (closure == "open") {
            c = Closure::Open;
          } else {
            throw py::value_error("closure must be closed|half-open-left|"
                                  "half-open-right|open");
          }
          return interval_members({lo, hi}, GroundSet(n), c);
        },
        py::arg("lo"), py::arg("hi"), py::arg("n"),
        py::arg("closure") = "closed");

  m.def("trace", &trace, py::arg("matrix"), py::arg("row"), py::arg("kept"));
  m.def("contract", &contract, py::arg("matrix"), py::arg("removed"));
  m.def("delete_columns", &delete_columns, py::arg("matrix"),
        py::arg("removed"));
  m.def("recognize_circulant", [](const Minor& mm) -> py::object {
    auto rec = recognize_circulant(mm);
    if (!rec) return py::none();
    return py::cast(*rec);
  });

  m.def("validate_circuit",
        [](const ArcDigraph& d,
           const std::vector<std::tuple<int, int, std::string>>& raw) {
          return validate_circuit(d, arcs_from_tuples(raw));
        },
        py::arg("digraph"), py::arg("arcs"));
  m.def("circuit_from_vertices", &circuit_from_vertices, py::arg("digraph"),
        py::arg("vertices"));
  m.def("classify",
        [](const ArcDigraph& d, const std::vector<Circuit>& circuits) {
          return classify(d.ground(), std::span<const Circuit>(circuits));
        },
        py::arg("digraph"), py::arg("circuits"));
  m.def("validate_family", &validate_family, py::arg("digraph"),
        py::arg("circuits"));
  m.def("bad_arcs",
        [](const ArcDigraph& d, const CircuitFamily& f) {
          return bad_arcs(d, f);
        },
        py::arg("digraph"), py::arg("family"));

  m.def("circuits_to_minor", &circuits_to_minor, py::arg("matrix"),
        py::arg("family"));
  m.def("window_rows", &window_rows, py::arg("matrix"), py::arg("bullets"),
        py::arg("weight"));
  m.def("select_window_row", &select_window_row, py::arg("matrix"),
        py::arg("bullets"), py::arg("weight"), py::arg("j"));
  m.def("normalize_bullets", &normalize_bullets, py::arg("matrix"),
        py::arg("bullets"), py::arg("weight"));
  m.def("minor_to_circuits", &minor_to_circuits, py::arg("matrix"),
        py::arg("bullets"), py::arg("weight"));

  m.def("decompose_shift_digraph", &decompose_shift_digraph, py::arg("s"),
        py::arg("p"));
  m.def("translate_reverse_to_jump", &translate_reverse_to_jump, py::arg("n"),
        py::arg("k"), py::arg("count"), py::arg("row_arcs"),
        py::arg("winding"));
  m.def("translate_jump_to_reverse", &translate_jump_to_reverse, py::arg("n"),
        py::arg("k"), py::arg("count"), py::arg("winding"),
        py::arg("short_jumps"), py::arg("long_jumps"));
  m.def("reverse_family_exists",
        [](int n, int k, int count) -> py::object {
          auto w = reverse_family_exists(n, k, count);
          if (!w) return py::none();
          return py::cast(*w);
        },
        py::arg("n"), py::arg("k"), py::arg("count"));
  m.def("jump_family_exists",
        [](int n, int k, int count) -> py::object {
          auto w = jump_family_exists(n, k, count);
          if (!w) return py::none();
          return py::cast(*w);
        },
        py::arg("n"), py::arg("k"), py::arg("count"));

  m.def("brute_minors", &brute_minors, py::arg("matrix"),
        py::arg("limits") = OracleLimits{});
  m.def("enumerate_circuits",
        [](const ArcDigraph& d, const OracleLimits& limits) {
          return enumerate_circuits(d, limits).circuits;
        },
        py::arg("digraph"), py::arg("limits") = OracleLimits{});
  m.def("enumerate_families",
        [](const ArcDigraph& d, const OracleLimits& limits) {
          return enumerate_families(d, limits).families;
        },
        py::arg("digraph"), py::arg("limits") = OracleLimits{});
  m.def("cross_validate", &cross_validate, py::arg("matrix"),
        py::arg("limits") = OracleLimits{});
  m.def("circulant_isomorphic", [](const Minor& mm) -> py::object {
    auto rec = circulant_isomorphic(mm);
    if (!rec) return py::none();
    return py::cast(*rec);
  });
  m.def("random_circular_matrix",
        [](unsigned long seed, int min_n, int max_n) {
          std::mt19937_64 rng(seed);
          return random_circular_matrix(rng, min_n, max_n);
        },
        py::arg("seed"), py::arg("min_n") = 5, py::arg("max_n") = 12);
}
