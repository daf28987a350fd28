#include "circmin/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace circmin {

CircularMatrix matrix_from_json(const json& doc, bool drop_dominated) {
  if (!doc.is_object() || !doc.contains("n")) {
    throw ParseError("matrix document needs an object with field 'n'");
  }
  bool has_rows = doc.contains("rows");
  bool has_dense = doc.contains("dense");
  if (has_rows == has_dense) {
    throw ParseError("matrix document needs exactly one of 'rows'/'dense'");
  }
  try {
    int n = doc.at("n").get<int>();
    if (has_rows) {
      std::vector<std::pair<int, int>> rows;
      for (const auto& r : doc.at("rows")) {
        if (!r.is_array() || r.size() != 2) {
          throw ParseError("each row must be a [lo, hi] pair");
        }
        rows.emplace_back(r[0].get<int>(), r[1].get<int>());
      }
      return CircularMatrix::from_intervals(n, rows, drop_dominated);
    }
    std::vector<std::vector<int>> dense;
    for (const auto& r : doc.at("dense")) {
      dense.push_back(r.get<std::vector<int>>());
    }
    auto a = CircularMatrix::from_dense(dense, drop_dominated);
    if (a.column_count() != n) {
      throw ParseError("dense rows disagree with field 'n'");
    }
    return a;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed matrix document: ") + e.what());
  }
}

json matrix_to_json(const CircularMatrix& a) {
  json rows = json::array();
  for (const auto& r : a.rows()) rows.push_back({r.lo, r.hi});
  json doc;
  doc["n"] = a.column_count();
  doc["rows"] = std::move(rows);
  return doc;
}

namespace {

ArcKind kind_from_string(const std::string& s) {
  if (s == "row") return ArcKind::Row;
  if (s == "fwd") return ArcKind::Forward;
  if (s == "rev") return ArcKind::Reverse;
  if (s == "long") return ArcKind::Long;
  throw ParseError("unknown arc kind '" + s + "'");
}

}  // namespace

std::vector<Circuit> circuits_from_json(const ArcDigraph& d, const json& doc) {
  if (!doc.is_object() || !doc.contains("circuits") ||
      !doc.at("circuits").is_array()) {
    throw ParseError("circuit document needs an array field 'circuits'");
  }
  std::vector<Circuit> out;
  try {
    for (const auto& entry : doc.at("circuits")) {
      if (!entry.is_array() || entry.empty()) {
        throw ParseError("each circuit must be a non-empty array");
      }
      if (entry.front().is_number()) {
        out.push_back(
            circuit_from_vertices(d, entry.get<std::vector<int>>()));
        continue;
      }
      std::vector<Arc> arcs;
      for (const auto& a : entry) {
        arcs.push_back({a.at("tail").get<int>(), a.at("head").get<int>(),
                        kind_from_string(a.at("kind").get<std::string>()), 0});
      }
      out.push_back(validate_circuit(d, arcs));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed circuit document: ") + e.what());
  }
  return out;
}

json arc_to_json(const Arc& a) {
  json j;
  j["tail"] = a.tail;
  j["head"] = a.head;
  j["kind"] = std::string(to_string(a.kind));
  if (a.kind == ArcKind::Row) j["row"] = a.row;
  return j;
}

json circuit_to_json(const Circuit& c) {
  json arcs = json::array();
  for (const Arc& a : c.arcs) arcs.push_back(arc_to_json(a));
  json j;
  j["vertices"] = c.vertices;
  j["arcs"] = std::move(arcs);
  j["row_arcs"] = c.row_arc_count;
  if (c.long_arc_count > 0) j["long_arcs"] = c.long_arc_count;
  j["winding"] = c.winding;
  return j;
}

json classification_to_json(const Classification& cl) {
  json blocks = json::array();
  for (const Block& b : cl.blocks) {
    json jb;
    jb["bullet"] = b.bullet;
    jb["end"] = b.end;
    jb["kind"] = std::string(to_string(b.kind));
    jb["leave_tail"] = b.leave_tail;
    jb["enter_head"] = b.enter_head;
    jb["member"] = b.member;
    blocks.push_back(std::move(jb));
  }
  json j;
  j["circles"] = cl.circles;
  j["crosses"] = cl.crosses;
  j["bullets"] = cl.bullets;
  j["essential_bullets"] = cl.essential_bullets;
  j["blocks"] = std::move(blocks);
  return j;
}

json witness_to_json(const MinorWitness& w) {
  json j;
  j["bullets"] = w.bullets;
  j["removed"] = w.removed;
  j["order"] = w.order;
  j["weight"] = w.weight;
  j["circuit_count"] = w.circuit_count;
  return j;
}

json trace_to_json(const SynthesisTrace& t) {
  json table = json::array();
  for (const WindowSelection& ws : t.table) {
    json row;
    row["index"] = ws.index;
    row["bullet"] = ws.bullet;
    row["candidate_rows"] = ws.candidates;
    row["selected_row"] = ws.row;
    row["offset"] = ws.offset;
    row["rewritten"] = ws.rewritten;
    table.push_back(std::move(row));
  }
  json selected = json::array();
  for (const Arc& a : t.selected_row_arcs) selected.push_back(arc_to_json(a));
  auto paths = [](const std::vector<int>& indices,
                  const std::vector<std::vector<Arc>>& arcs) {
    json out = json::array();
    for (std::size_t i = 0; i < indices.size(); ++i) {
      json p;
      p["index"] = indices[i];
      json steps = json::array();
      for (const Arc& a : arcs[i]) steps.push_back(arc_to_json(a));
      p["arcs"] = std::move(steps);
      out.push_back(std::move(p));
    }
    return out;
  };
  json j;
  j["bullets"] = t.bullets;
  j["normalized"] = t.normalized;
  j["passes"] = t.passes;
  j["table"] = std::move(table);
  j["selected_row_arcs"] = std::move(selected);
  j["forward_join_indices"] = t.forward_join_indices;
  j["forward_join_vertices"] = t.forward_join_vertices;
  j["forward_paths"] = paths(t.forward_join_indices, t.forward_paths);
  j["reverse_join_indices"] = t.reverse_join_indices;
  j["reverse_join_vertices"] = t.reverse_join_vertices;
  j["reverse_paths"] = paths(t.reverse_join_indices, t.reverse_paths);
  return j;
}

json minor_to_json(const Minor& m) {
  json j;
  j["columns"] = m.columns;
  j["kind"] = m.kind == MinorKind::Contraction ? "contraction" : "deletion";
  json traces = json::array();
  for (std::size_t i = 0; i < m.traces.size(); ++i) {
    json t;
    t["source_row"] = m.source_rows[i];
    t["columns"] = m.traces[i];
    traces.push_back(std::move(t));
  }
  j["traces"] = std::move(traces);
  return j;
}

json cross_report_to_json(const CrossReport& r) {
  json j;
  j["columns"] = r.columns;
  j["rows"] = r.rows;
  json hits = json::array();
  for (const MinorHit& h : r.subset_hits) {
    json jh;
    jh["bullets"] = h.bullets;
    jh["normalized"] = h.normalized;
    jh["order"] = h.order;
    jh["weight"] = h.weight;
    hits.push_back(std::move(jh));
  }
  j["subset_hits"] = std::move(hits);
  json fams = json::array();
  for (const FamilyRecord& f : r.family_sets) {
    json jf;
    jf["bullets"] = f.bullets;
    jf["order"] = f.order;
    jf["weight"] = f.weight;
    jf["family_count"] = f.family_count;
    fams.push_back(std::move(jf));
  }
  j["family_sets"] = std::move(fams);
  json counts = json::array();
  for (const auto& [key, value] : r.counts) {
    json jc;
    jc["order"] = key.first;
    jc["weight"] = key.second;
    jc["distinct_bullet_sets"] = value;
    counts.push_back(std::move(jc));
  }
  j["counts"] = std::move(counts);
  j["boundary_families"] = r.boundary_families;
  j["capped"] = r.capped;
  j["discrepancies"] = r.discrepancies;
  return j;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("cannot parse '" + path + "': " + e.what());
  }
}

std::string dump_json(const json& doc) { return doc.dump(2) + "\n"; }

namespace {

bool is_scalar_array(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& v : j) {
    if (v.is_object() || v.is_array()) return false;
  }
  return true;
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render(const json& j, int depth, std::ostringstream& out) {
  std::string pad(2 * depth, ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      render(value, depth + 1, out);
    } else if (is_scalar_array(value)) {
      out << pad << key << ": [";
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i) out << ", ";
        out << scalar_text(value[i]);
      }
      out << "]\n";
    } else if (value.is_array()) {
      if (value.empty()) {
        out << pad << key << ": []\n";
        continue;
      }
      for (std::size_t i = 0; i < value.size(); ++i) {
        const json& e = value[i];
        std::string label = key + "[" + std::to_string(i) + "]";
        if (e.is_object()) {
          out << pad << label << ":\n";
          render(e, depth + 1, out);
        } else if (is_scalar_array(e)) {
          out << pad << label << ": [";
          for (std::size_t t = 0; t < e.size(); ++t) {
            if (t) out << ", ";
            out << scalar_text(e[t]);
          }
          out << "]\n";
        } else {
          out << pad << label << ": " << scalar_text(e) << "\n";
        }
      }
    } else {
      out << pad << key << ": " << scalar_text(value) << "\n";
    }
  }
}

}  // namespace

std::string render_text(const json& doc) {
  std::ostringstream out;
  render(doc, 0, out);
  return out.str();
}

}  // namespace circmin
