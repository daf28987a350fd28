#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "circmin/io.hpp"

namespace {

using circmin::json;

void emit(const json& report, bool as_json) {
  if (as_json) {
    std::cout << circmin::dump_json(report);
  } else {
    std::cout << circmin::render_text(report);
  }
}

json family_to_json(const circmin::CircuitFamily& f) {
  json j;
  j["circuit_count"] = f.size();
  j["row_arc_total"] = f.row_arc_total;
  j["winding_total"] = f.winding_total;
  json circuits = json::array();
  for (const auto& c : f.circuits) circuits.push_back(circmin::circuit_to_json(c));
  j["circuits"] = std::move(circuits);
  j["classification"] = circmin::classification_to_json(f.classes);
  return j;
}

int default_oracle_bound() {
  if (const char* env = std::getenv("CIRCMIN_ORACLE_MAX_N")) {
    try {
      return std::stoi(env);
    } catch (...) {
      throw circmin::ParseError("CIRCMIN_ORACLE_MAX_N is not an integer");
    }
  }
  return 14;
}

int run_analyze(const std::string& path, bool drop_dominated, bool as_json) {
  auto a = circmin::matrix_from_json(circmin::load_json(path), drop_dominated);
  auto d = circmin::ArcDigraph::for_matrix(a);
  json report;
  report["command"] = "analyze";
  report["matrix"] = circmin::matrix_to_json(a);
  report["row_count"] = a.row_count();
  if (a.pattern()) {
    report["circulant"] = {{"order", a.pattern()->order},
                           {"weight", a.pattern()->weight}};
  }
  json dump = json::array();
  for (const auto& line : d.dump()) dump.push_back(line);
  report["digraph"] = {{"flavor", std::string(to_string(d.flavor()))},
                       {"arc_count", d.arcs().size()},
                       {"arcs", std::move(dump)}};
  emit(report, as_json);
  return 0;
}

int run_minors(const std::string& path, const std::string& via, int max_n,
               bool as_json) {
  auto a = circmin::matrix_from_json(circmin::load_json(path));
  circmin::OracleLimits limits;
  limits.max_columns = max_n;
  json report;
  report["command"] = "minors";
  report["via"] = via;

  bool subsets = via == "subsets" || via == "both";
  bool families = via == "families" || via == "both";
  std::vector<circmin::MinorHit> hits;
  if (subsets) {
    hits = circmin::brute_minors(a, limits);
    json jh = json::array();
    for (const auto& h : hits) {
      jh.push_back({{"bullets", h.bullets},
                    {"normalized", h.normalized},
                    {"order", h.order},
                    {"weight", h.weight}});
    }
    report["subset_hits"] = std::move(jh);
  }
  if (families) {
    auto d = circmin::ArcDigraph::for_matrix(a);
    auto fe = circmin::enumerate_families(d, limits);
    int boundary = 0;
    std::map<std::vector<int>, json> sets;
    for (const auto& f : fe.families) {
      const auto& bullets = f.classes.essential_bullets;
      if (f.winding_total < 2 || f.winding_total >= f.row_arc_total ||
          static_cast<int>(bullets.size()) > a.column_count() - 1) {
        ++boundary;
        continue;
      }
      auto it = sets.find(bullets);
      if (it == sets.end()) {
        sets.emplace(bullets, json{{"bullets", bullets},
                                   {"order", f.row_arc_total},
                                   {"weight", f.winding_total},
                                   {"family_count", 1}});
      } else {
        it->second["family_count"] = it->second["family_count"].get<int>() + 1;
      }
    }
    json jf = json::array();
    for (auto& [bullets, entry] : sets) jf.push_back(std::move(entry));
    report["family_sets"] = std::move(jf);
    report["boundary_families"] = boundary;
    report["capped"] = fe.capped;
  }
  if (via == "both") {
    auto cross = circmin::cross_validate(a, limits);
    report["discrepancies"] = cross.discrepancies;
    report["agreement"] = cross.discrepancies.empty();
  }
  emit(report, as_json);
  return 0;
}

int run_from_circuits(const std::string& matrix_path,
                      const std::string& circuits_path, bool as_json) {
  auto a = circmin::matrix_from_json(circmin::load_json(matrix_path));
  auto d = circmin::ArcDigraph::for_matrix(a);
  auto circuits = circmin::circuits_from_json(d, circmin::load_json(circuits_path));
  auto family = circmin::validate_family(d, std::move(circuits));
  auto witness = circmin::circuits_to_minor(a, family);

  json report;
  report["command"] = "from-circuits";
  report["family"] = family_to_json(family);
  report["witness"] = circmin::witness_to_json(witness);
  report["minor"] = circmin::minor_to_json(circmin::contract(a, witness.removed));
  emit(report, as_json);
  return 0;
}

int run_to_circuits(const std::string& matrix_path,
                    const std::vector<int>& bullets, bool as_json) {
  auto a = circmin::matrix_from_json(circmin::load_json(matrix_path));
  std::vector<int> sorted = bullets;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<int> removed;
  {
    std::vector<char> keep(a.column_count() + 1, 0);
    for (int b : sorted) {
      a.ground().check(b);
      keep[b] = 1;
    }
    for (int c = 1; c <= a.column_count(); ++c) {
      if (!keep[c]) removed.push_back(c);
    }
  }
  auto rec = circmin::recognize_circulant(circmin::contract(a, removed));
  if (!rec) {
    throw circmin::DomainError(circmin::ErrorCode::NotCirculantMinor,
                               "contraction at the given bullets is not a "
                               "circulant minor");
  }
  auto [family, trace] = circmin::minor_to_circuits(a, sorted, rec->weight);

  json report;
  report["command"] = "to-circuits";
  report["order"] = rec->order;
  report["weight"] = rec->weight;
  report["trace"] = circmin::trace_to_json(trace);
  report["family"] = family_to_json(family);
  emit(report, as_json);
  return 0;
}

int run_circulant(int n, int k, const std::string& exists_side,
                  int exists_count, const std::string& translate,
                  const std::vector<int>& params,
                  const std::vector<int>& shift, bool as_json) {
  json report;
  report["command"] = "circulant";
  report["n"] = n;
  report["k"] = k;

  if (!shift.empty()) {
    if (shift.size() != 2) {
      throw circmin::ParseError("--shift needs s,p");
    }
    auto circuits = circmin::decompose_shift_digraph(shift[0], shift[1]);
    json jc = json::array();
    for (const auto& c : circuits) jc.push_back(c);
    report["shift_decomposition"] = {{"order", shift[0]},
                                     {"step", shift[1]},
                                     {"circuits", std::move(jc)}};
  }

  if (!translate.empty()) {
    if (translate == "d:g") {
      if (params.size() != 3) {
        throw circmin::ParseError("--translate d:g needs --params a,s,p");
      }
      auto out = circmin::translate_reverse_to_jump(n, k, params[0], params[1],
                                                    params[2]);
      report["translation"] = {{"direction", "reverse-to-jump"},
                               {"count", out.count},
                               {"winding", out.winding},
                               {"short_jumps", out.short_jumps},
                               {"long_jumps", out.long_jumps}};
    } else if (translate == "g:d") {
      if (params.size() != 4) {
        throw circmin::ParseError("--translate g:d needs --params d,n1,n2,n3");
      }
      auto out = circmin::translate_jump_to_reverse(n, k, params[0], params[1],
                                                    params[2], params[3]);
      report["translation"] = {{"direction", "jump-to-reverse"},
                               {"count", out.params.count},
                               {"row_arcs", out.params.row_arcs},
                               {"winding", out.params.winding},
                               {"reverse_steps", out.params.reverse_steps},
                               {"pooled_order", out.pooled_order},
                               {"pooled_weight", out.pooled_weight}};
    } else {
      throw circmin::ParseError("--translate must be d:g or g:d");
    }
  }

  auto reverse_json = [](const circmin::ReverseFamilyParams& w) {
    return json{{"count", w.count},
                {"row_arcs", w.row_arcs},
                {"winding", w.winding},
                {"reverse_steps", w.reverse_steps}};
  };
  auto jump_json = [](const circmin::JumpFamilyParams& w) {
    return json{{"count", w.count},
                {"winding", w.winding},
                {"short_jumps", w.short_jumps},
                {"long_jumps", w.long_jumps}};
  };

  if (!exists_side.empty()) {
    json entry;
    entry["count"] = exists_count;
    if (exists_side == "d" || exists_side == "D") {
      auto w = circmin::reverse_family_exists(n, k, exists_count);
      entry["side"] = "reverse";
      entry["witness"] = w ? reverse_json(*w) : json(nullptr);
      json boundary = json::array();
      for (const auto& b : circmin::reverse_family_boundary(n, k, exists_count)) {
        boundary.push_back(reverse_json(b));
      }
      entry["boundary"] = std::move(boundary);
    } else if (exists_side == "g" || exists_side == "G") {
      auto w = circmin::jump_family_exists(n, k, exists_count);
      entry["side"] = "jump";
      entry["witness"] = w ? jump_json(*w) : json(nullptr);
    } else {
      throw circmin::ParseError("--exists must be d or g");
    }
    report["exists"] = std::move(entry);
  }

  if (shift.empty() && translate.empty() && exists_side.empty()) {
    // Default: parameter tables over all feasible member counts.
    json table = json::array();
    for (int count = 1; count <= k - 1; ++count) {
      json row;
      row["count"] = count;
      auto wd = circmin::reverse_family_exists(n, k, count);
      row["reverse"] = wd ? reverse_json(*wd) : json(nullptr);
      auto wg = circmin::jump_family_exists(n, k, count);
      row["jump"] = wg ? jump_json(*wg) : json(nullptr);
      json boundary = json::array();
      for (const auto& b : circmin::reverse_family_boundary(n, k, count)) {
        boundary.push_back(reverse_json(b));
      }
      row["reverse_boundary"] = std::move(boundary);
      table.push_back(std::move(row));
    }
    report["table"] = std::move(table);
  }
  emit(report, as_json);
  return 0;
}

int run_oracle(const std::string& path, int max_n, int random_count,
               unsigned long seed, int min_n, int random_max_n, bool as_json) {
  circmin::OracleLimits limits;
  limits.max_columns = max_n;
  json report;
  report["command"] = "oracle";

  if (!path.empty()) {
    auto a = circmin::matrix_from_json(circmin::load_json(path));
    report["report"] = circmin::cross_report_to_json(
        circmin::cross_validate(a, limits));
  } else {
    std::mt19937_64 rng(seed);
    json sweeps = json::array();
    int failures = 0;
    for (int i = 0; i < random_count; ++i) {
      auto a = circmin::random_circular_matrix(rng, min_n, random_max_n);
      auto r = circmin::cross_validate(a, limits);
      json entry;
      entry["index"] = i;
      entry["columns"] = r.columns;
      entry["rows"] = r.rows;
      entry["minor_sets"] = r.family_sets.size();
      entry["discrepancies"] = r.discrepancies;
      if (!r.discrepancies.empty()) ++failures;
      sweeps.push_back(std::move(entry));
    }
    report["seed"] = seed;
    report["sweep"] = std::move(sweeps);
    report["failures"] = failures;
  }
  emit(report, as_json);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"circulant contraction minors of circular 0/1 matrices"};
  app.require_subcommand(1);
  app.fallthrough();  // let subcommands hand --json back to the app
  bool as_json = false;
  app.add_flag("--json", as_json, "emit the report as JSON");

  auto* analyze = app.add_subcommand(
      "analyze", "validate a matrix and dump its arc digraph");
  std::string analyze_path;
  bool drop_dominated = false;
  analyze->add_option("matrix", analyze_path)->required();
  analyze->add_flag("--drop-dominated", drop_dominated,
                    "remove dominating rows instead of rejecting them");

  auto* minors = app.add_subcommand(
      "minors", "catalog circulant minors via circuits, subsets, or both");
  std::string minors_path, via = "both";
  int minors_max_n = default_oracle_bound();
  minors->add_option("matrix", minors_path)->required();
  minors->add_option("--via", via)
      ->check(CLI::IsMember({"families", "subsets", "both"}));
  minors->add_option("--max-n", minors_max_n, "subset enumeration bound");

  auto* fromc = app.add_subcommand(
      "from-circuits", "turn a disjoint circuit family into a minor witness");
  std::string fromc_matrix, fromc_circuits;
  fromc->add_option("matrix", fromc_matrix)->required();
  fromc->add_option("circuits", fromc_circuits)->required();

  auto* toc = app.add_subcommand(
      "to-circuits", "construct a circuit family from a circulant minor");
  std::string toc_matrix;
  std::vector<int> bullets;
  toc->add_option("matrix", toc_matrix)->required();
  toc->add_option("--bullets", bullets, "surviving columns")
      ->required()
      ->delimiter(',');

  auto* circ = app.add_subcommand(
      "circulant", "existence and translation arithmetic for C(n,k)");
  int n = 0, k = 0, exists_count = 1;
  std::string exists_side, translate;
  std::vector<int> params, shift;
  circ->add_option("--n", n)->required();
  circ->add_option("--k", k)->required();
  circ->add_option("--exists", exists_side, "search witnesses: d or g");
  circ->add_option("--count", exists_count, "member count for --exists");
  circ->add_option("--translate", translate, "d:g or g:d");
  circ->add_option("--params", params, "family parameters for --translate")
      ->delimiter(',');
  circ->add_option("--shift", shift, "decompose the shift digraph: s,p")
      ->delimiter(',');

  auto* oracle = app.add_subcommand(
      "oracle", "cross-validate subset minors against circuit families");
  std::string oracle_path;
  int oracle_max_n = default_oracle_bound();
  int random_count = 0, min_n = 5, random_max_n = 12;
  unsigned long seed = 20240915;
  oracle->add_option("matrix", oracle_path);
  oracle->add_option("--max-n", oracle_max_n, "column bound");
  oracle->add_option("--random", random_count, "sweep seeded random matrices");
  oracle->add_option("--seed", seed, "seed for --random");
  oracle->add_option("--min-n", min_n, "smallest random matrix");
  oracle->add_option("--random-max-n", random_max_n, "largest random matrix");

  try {
    app.parse(argc, argv);
    if (analyze->parsed()) {
      return run_analyze(analyze_path, drop_dominated, as_json);
    }
    if (minors->parsed()) {
      return run_minors(minors_path, via, minors_max_n, as_json);
    }
    if (fromc->parsed()) {
      return run_from_circuits(fromc_matrix, fromc_circuits, as_json);
    }
    if (toc->parsed()) {
      return run_to_circuits(toc_matrix, bullets, as_json);
    }
    if (circ->parsed()) {
      return run_circulant(n, k, exists_side, exists_count, translate, params,
                           shift, as_json);
    }
    if (oracle->parsed()) {
      if (oracle_path.empty() && random_count <= 0) {
        throw circmin::ParseError("oracle needs a matrix file or --random");
      }
      return run_oracle(oracle_path, oracle_max_n, random_count, seed, min_n,
                        random_max_n, as_json);
    }
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  } catch (const circmin::DomainError& e) {
    std::cerr << "error[" << to_string(e.code()) << "]: " << e.what() << "\n";
    return 1;
  } catch (const circmin::ParseError& e) {
    std::cerr << "error[parse]: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error[parse]: " << e.what() << "\n";
    return 2;
  }
}
