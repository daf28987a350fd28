#pragma once

#include <string>

#include "circmin/oracle.hpp"

#include <nlohmann/json_fwd.hpp>

namespace circmin {

using json = nlohmann::ordered_json;

/// Matrix document: {"n": ..., "rows": [[lo,hi],...]} or
/// {"n": ..., "dense": [[0,1,...],...]}; exactly one of rows/dense.
CircularMatrix matrix_from_json(const json& doc, bool drop_dominated = false);
json matrix_to_json(const CircularMatrix& a);

/// Circuit document: {"circuits": [...]} where each circuit is either a list
/// of {"tail","head","kind"} arcs (kind in row|fwd|rev) or a vertex-sequence
/// shorthand [v1, v2, ...].
std::vector<Circuit> circuits_from_json(const ArcDigraph& d, const json& doc);

json arc_to_json(const Arc& a);
json circuit_to_json(const Circuit& c);
json classification_to_json(const Classification& cl);
json witness_to_json(const MinorWitness& w);
json trace_to_json(const SynthesisTrace& t);
json minor_to_json(const Minor& m);
json cross_report_to_json(const CrossReport& r);

/// Read a file, parse as JSON; throws ParseError on I/O or syntax problems.
json load_json(const std::string& path);

/// Canonical serialization used by every command: two-space indent plus a
/// trailing newline, so parse + dump round-trips byte-identically.
std::string dump_json(const json& doc);

/// Render a report document as indented "key: value" text. Scalars and
/// scalar arrays print on one line; nested objects and object arrays indent.
std::string render_text(const json& doc);

}  // namespace circmin
