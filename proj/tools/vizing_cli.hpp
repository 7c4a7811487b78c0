#pragma once

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vizing/vizing.hpp"

namespace vizing::cli {

using nlohmann::json;

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 2,
  kCapacityError = 3,
  kFinding = 4,
};

enum class Format { Json, Csv, Text };

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t k_max = 0;
  std::string rho_h;
  std::optional<std::size_t> delta_h;
  std::size_t max_rounds = 64;
  std::string format;
  std::string cache_path;
  std::size_t jobs = 1;
  std::size_t max_vertices = kDefaultVertexLimit;
  bool allow_large = false;
  bool paper_table = false;
  bool transpose = false;
  std::string resume_path;
};

/// Bad command-line input that is not tied to a byte offset.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Graph load_graph(const std::string& path) {
  try {
    return parse_graph_text(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const PreconditionError& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline json members(const VertexSet& s) { return s.members(); }

inline json verdict_json(const CriterionVerdict& v) {
  return json{{"name", v.name},
              {"satisfied", v.satisfied},
              {"lhs", to_string(v.lhs)},
              {"rhs", to_string(v.rhs)},
              {"lhs_approx", to_double(v.lhs)},
              {"rhs_approx", to_double(v.rhs)},
              {"boundary", v.boundary},
              {"in_hypothesis", v.in_hypothesis},
              {"note", v.note}};
}

/// Flattens nested objects into dotted keys, preserving insertion order of `columns`.
inline void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_string()) {
    out.emplace_back(prefix, j.get<std::string>());
  } else if (j.is_array()) {
    std::string joined;
    for (const auto& e : j) {
      if (!joined.empty()) joined += ' ';
      joined += e.is_string() ? e.get<std::string>() : e.dump();
    }
    out.emplace_back(prefix, joined);
  } else {
    out.emplace_back(prefix, j.dump());
  }
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void write_csv(std::ostream& out, const std::vector<json>& rows) {
  if (rows.empty()) return;
  std::vector<std::pair<std::string, std::string>> header;
  flatten(rows.front(), "", header);
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << csv_escape(header[i].first);
  out << '\n';
  for (const auto& row : rows) {
    std::vector<std::pair<std::string, std::string>> cells;
    flatten(row, "", cells);
    for (std::size_t i = 0; i < header.size(); ++i) {
      auto it = std::find_if(cells.begin(), cells.end(), [&](const auto& c) { return c.first == header[i].first; });
      out << (i ? "," : "") << (it == cells.end() ? "" : csv_escape(it->second));
    }
    out << '\n';
  }
}

inline void write_text(std::ostream& out, const json& j) {
  std::vector<std::pair<std::string, std::string>> cells;
  flatten(j, "", cells);
  std::size_t width = 0;
  for (const auto& [k, v] : cells) width = std::max(width, k.size());
  for (const auto& [k, v] : cells) out << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << '\n';
}

inline void emit(std::ostream& out, Format format, const json& j) {
  switch (format) {
    case Format::Json:
      out << j.dump(2) << '\n';
      break;
    case Format::Csv:
      write_csv(out, {j});
      break;
    case Format::Text:
      write_text(out, j);
      break;
  }
}

inline Format parse_format(const std::string& s, Format fallback) {
  if (s.empty()) return fallback;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  return Format::Text;
}

struct Regularity {
  std::size_t k = 0;
  std::size_t n = 0;  // side size
};

/// Balanced k-regular bipartite shape of g, if it has one.
inline std::optional<Regularity> balanced_regular(const Graph& g) {
  auto k = regular_degree(g);
  auto bg = bipartition(g);
  if (!k || *k == 0 || !bg || bg->size_a() != bg->size_b()) return std::nullopt;
  return Regularity{*k, bg->size_a()};
}

}  // namespace detail

inline int cmd_gamma(const RunConfig& cfg, std::ostream& out) {
  const Graph g = detail::load_graph(cfg.inputs.at(0));
  auto solved = gamma_exact(g);
  json j{{"command", "gamma"},
         {"order", g.order()},
         {"edges", g.edge_count()},
         {"gamma", solved.gamma},
         {"witness", detail::members(solved.witness.vertices)},
         {"rho", to_string(make_rational(solved.gamma, g.order()))},
         {"connected", is_connected(g)},
         {"max_degree", max_degree(g)},
         {"degree_lower_bound", degree_lower_bound(g)}};
  if (auto bg = bipartition(g)) {
    auto ub = bipartition_upper_bound(*bg);
    j["bipartite"] = true;
    j["bipartition_upper_bound"] = ub.value;
    j["upper_bound_in_hypothesis"] = ub.in_hypothesis;
  } else {
    j["bipartite"] = false;
    j["bipartition_upper_bound"] = nullptr;
  }
  detail::emit(out, detail::parse_format(cfg.format, Format::Text), j);
  return kSuccess;
}

inline int cmd_check_vizing(const RunConfig& cfg, std::ostream& out, GammaCache* cache) {
  const Graph g = detail::load_graph(cfg.inputs.at(0));
  const Graph h = detail::load_graph(cfg.inputs.at(1));
  VizingOptions opts{cfg.max_vertices, cache};
  auto report = check_vizing(g, h, opts);
  auto density = density_vizing_check(g, h, opts);

  json criteria = json::array();
  auto bg = bipartition(g);
  auto bh = bipartition(h);
  if (bg && bh && bg->size_a() > 0 && bh->size_a() > 0)
    criteria.push_back(detail::verdict_json(imbalance_criterion(*bg, *bh)));
  if (bg && bg->size_a() > 0)
    criteria.push_back(detail::verdict_json(imbalance_vs_arbitrary(*bg, max_degree(h), density.rho_h.value)));
  if (bh && bh->size_a() > 0) {
    auto v = imbalance_vs_arbitrary(*bh, max_degree(g), density.rho_g.value);
    v.name += " (factors swapped)";
    criteria.push_back(detail::verdict_json(v));
  }
  auto rg = detail::balanced_regular(g);
  auto rh = detail::balanced_regular(h);
  json regular = json::object();
  if (rg) regular["g"] = {{"k", rg->k}, {"n", rg->n}, {"conj_bound", conjectured_kreg_bound(rg->n, rg->k)}};
  if (rh) regular["h"] = {{"k", rh->k}, {"n", rh->n}, {"conj_bound", conjectured_kreg_bound(rh->n, rh->k)}};
  if (rg && rh && rg->k == rh->k) {
    auto v = detail::verdict_json(threshold_condition(rg->k, rg->n, rh->n));
    if (rg->k >= 3) {
      auto e = n_of_k(rg->k);
      v["n_of_k"] = e.n;
      v["n_of_k_boundary"] = e.boundary;
      if (cfg.paper_table && reference_thresholds().count(rg->k)) v["n_of_k_reference"] = reference_thresholds().at(rg->k);
    }
    criteria.push_back(v);
  }

  const auto degree_g = regular_degree(g);
  const auto degree_h = regular_degree(h);
  auto known_degree = [](std::optional<std::size_t> d) { return d && (*d <= 3 || *d >= 27); };
  json j{{"command", "check-vizing"},
         {"order_g", g.order()},
         {"order_h", h.order()},
         {"gamma_g", report.gamma_g},
         {"gamma_h", report.gamma_h},
         {"gamma_product", report.gamma_product},
         {"holds", report.holds},
         {"witness_g", detail::members(report.witness_g.vertices)},
         {"witness_h", detail::members(report.witness_h.vertices)},
         {"witness_product", report.witness_product ? detail::members(report.witness_product->vertices) : json(nullptr)},
         {"rho_g", to_string(density.rho_g.value)},
         {"rho_h", to_string(density.rho_h.value)},
         {"rho_product", to_string(density.rho_product.value)},
         {"density_holds", density.holds},
         {"criteria", criteria},
         {"regular", regular},
         {"literature",
          {{"known_gamma_le_3_regime", std::min(report.gamma_g, report.gamma_h) <= 3},
           {"known_regular_degree_regime", known_degree(degree_g) || known_degree(degree_h)}}}};
  int status = kSuccess;
  if (!report.holds) {
    j["finding"] = "inequality violated";
    status = kFinding;
  }
  if (density.holds != report.holds) {
    j["finding"] = "density and integer forms disagree";
    status = kFinding;
  }
  auto format = detail::parse_format(cfg.format, Format::Text);
  if (format == Format::Csv) j.erase("criteria");
  detail::emit(out, format, j);
  return status;
}

inline json scan_record_json(const ScanRecord& r, const ObstructionReport& o) {
  return json{{"key", r.key},
              {"n", r.n},
              {"k", r.k},
              {"gamma", r.gamma},
              {"conj_bound", r.conj_bound},
              {"order_bound", r.order_bound ? json(*r.order_bound) : json(nullptr)},
              {"case", r.case_tag},
              {"connected", r.connected},
              {"unique_form", r.unique_form},
              {"rank", o.rank},
              {"full_rank", o.full_rank},
              {"cover_rows", o.m},
              {"cover_rows_integral", o.m_integral},
              {"cover_exists", o.cover_exists},
              {"cover_witness", o.cover_witness ? json(*o.cover_witness) : json(nullptr)},
              {"obstruction_holds", o.implication_holds}};
}

inline int cmd_scan(const RunConfig& cfg, std::ostream& out, GammaCache* cache) {
  EnumerationOptions opts{cfg.allow_large, cfg.transpose, cfg.jobs};
  auto classes = enumerate_kreg(cfg.n, cfg.k, opts);

  std::set<std::string> done;
  if (!cfg.resume_path.empty()) {
    std::ifstream in(cfg.resume_path);
    std::string line;
    while (std::getline(in, line)) {
      auto j = json::parse(line, nullptr, false);
      if (!j.is_discarded() && j.is_object() && j.contains("key")) done.insert(j["key"].get<std::string>());
    }
  }

  struct Row {
    std::string key;
    const BiadjacencyMatrix* matrix;
    ScanRecord record;
    ObstructionReport obstruction;
  };
  std::vector<Row> rows;
  std::size_t skipped = 0;
  for (const auto& m : classes) {
    auto key = cfg.transpose ? canonical_key_up_to_transpose(m) : canonical_key(m);
    if (done.count(key)) {
      ++skipped;
      continue;
    }
    rows.push_back(Row{std::move(key), &m, {}, {}});
  }

  auto work = [&](Row& row) {
    row.record = scan_class(*row.matrix, row.key, cache);
    row.obstruction = obstruction_report(*row.matrix);
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(cfg.jobs, rows.size()));
  if (jobs <= 1) {
    for (auto& row : rows) work(row);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) work(rows[i]);
      });
    for (auto& t : pool) t.join();
  }

  std::vector<json> records, findings;
  std::size_t max_gamma = 0, connected = 0, conj = 0, unconfirmed = 0, order = 0, mismatch = 0, obstruction = 0;
  std::size_t unique_forms = 0;
  for (const auto& row : rows) {
    const auto& r = row.record;
    records.push_back(scan_record_json(r, row.obstruction));
    max_gamma = std::max(max_gamma, r.gamma);
    connected += r.connected;
    unique_forms += r.unique_form;
    auto finding = [&](const std::string& what) { findings.push_back(json{{"finding", what}, {"key", r.key}, {"gamma", r.gamma}}); };
    if (r.conj_violation) {
      (r.violation_confirmed ? conj : unconfirmed) += 1;
      finding(r.violation_confirmed ? "conjectured bound exceeded" : "solver disagrees with exhaustive oracle");
    }
    if (r.order_violation) {
      ++order;
      finding("order bound 2r exceeded");
    }
    if (r.classification_mismatch) {
      ++mismatch;
      finding("n = k + 2 classification disagrees with gamma");
    }
    if (!row.obstruction.implication_holds) {
      ++obstruction;
      finding("full rank but disjoint row cover exists");
    }
  }
  json summary{{"n", cfg.n},
               {"k", cfg.k},
               {"classes", records.size()},
               {"skipped_resumed", skipped},
               {"connected_classes", connected},
               {"unique_form_classes", unique_forms},
               {"max_gamma", max_gamma},
               {"conj_violations", conj},
               {"unconfirmed_violations", unconfirmed},
               {"order_violations", order},
               {"classification_mismatches", mismatch},
               {"obstruction_failures", obstruction}};

  const auto format = detail::parse_format(cfg.format, Format::Json);
  if (format == Format::Json) {
    for (const auto& r : records) out << r.dump() << '\n';
    for (const auto& f : findings) out << f.dump() << '\n';
    out << json{{"summary", summary}}.dump() << '\n';
  } else if (format == Format::Csv) {
    detail::write_csv(out, records);
    out << "# summary " << summary.dump() << '\n';
  } else {
    out << "key                       gamma conj order case                 conn rank cover\n";
    for (const auto& r : records)
      out << std::left << std::setw(26) << r["key"].get<std::string>() << std::setw(6) << r["gamma"].dump()
          << std::setw(5) << r["conj_bound"].dump() << std::setw(6) << r["order_bound"].dump() << std::setw(21)
          << r["case"].get<std::string>() << std::setw(5) << (r["connected"].get<bool>() ? "yes" : "no")
          << std::setw(5) << r["rank"].dump() << (r["cover_exists"].get<bool>() ? "yes" : "no") << '\n';
    for (const auto& f : findings) out << "FINDING " << f.dump() << '\n';
    detail::write_text(out, json{{"summary", summary}});
  }
  return findings.empty() ? kSuccess : kFinding;
}

inline int cmd_thresholds(const RunConfig& cfg, std::ostream& out) {
  if (cfg.k_max < 3) throw PreconditionError("thresholds needs kmax >= 3");
  auto table = threshold_table(cfg.k_max);
  std::vector<json> rows;
  for (const auto& e : table.entries) {
    json row{{"k", e.k}, {"N", e.n}, {"boundary", e.boundary}, {"N_strict", e.strict_n},
             {"auto", e.n == e.k}};
    auto ref = reference_thresholds().find(e.k);
    row["reference"] = ref != reference_thresholds().end() ? json(ref->second) : json(nullptr);
    row["matches_reference"] = ref != reference_thresholds().end() ? json(ref->second == e.n) : json(nullptr);
    rows.push_back(row);
  }
  const auto format = detail::parse_format(cfg.format, Format::Text);
  if (format == Format::Json) {
    out << json{{"command", "thresholds"},
                {"rows", rows},
                {"auto_regime_from", table.auto_regime ? json(*table.auto_regime) : json(nullptr)}}
               .dump(2)
        << '\n';
  } else if (format == Format::Csv) {
    detail::write_csv(out, rows);
  } else {
    out << " k  N(k)  boundary  N_strict  reference  regime\n";
    for (const auto& r : rows) {
      out << std::right << std::setw(2) << r["k"].dump() << std::setw(6) << r["N"].dump() << std::setw(10)
          << (r["boundary"].get<bool>() ? "equality" : "-") << std::setw(10) << r["N_strict"].dump()
          << std::setw(11) << (r["reference"].is_null() ? "-" : r["reference"].dump()) << "  "
          << (r["auto"].get<bool>() ? "auto (n >= k)" : "") << '\n';
      if (!r["reference"].is_null() && !r["matches_reference"].get<bool>())
        out << "    note: k=" << r["k"].dump() << " reference value " << r["reference"].dump()
            << " differs; equality holds at n=" << r["N"].dump() << " under the non-strict inequality\n";
    }
  }
  return kSuccess;
}

inline json choice_json(const TransformChoice& c) {
  return json{{"side", to_string(c.side)},
              {"x_size", c.x_size},
              {"dx_size", c.dx_size},
              {"m_star", c.m_star},
              {"dominating_set", detail::members(c.dset.vertices)},
              {"targets", detail::members(c.targets)}};
}

inline int cmd_transform(const RunConfig& cfg, std::ostream& out, GammaCache* cache) {
  const Graph g = detail::load_graph(cfg.inputs.at(0));
  auto bg = bipartition(g);
  if (!bg) throw InputError(cfg.inputs.at(0) + ": transform needs a bipartite graph");
  std::optional<Graph> h;
  if (cfg.inputs.size() > 1) h = detail::load_graph(cfg.inputs[1]);

  Rational rho_h;
  std::size_t delta_h = 0;
  if (!cfg.rho_h.empty()) rho_h = parse_rational(cfg.rho_h);
  else if (h) rho_h = rho(*h, cache).value;
  else throw InputError("transform needs --rho-h or --with");
  if (cfg.delta_h) delta_h = *cfg.delta_h;
  else if (h) delta_h = max_degree(*h);
  else throw InputError("transform needs --delta-h or --with");
  if (rho_h < 0 || rho_h > 1) throw InputError("rho_h must lie in [0, 1]");

  auto trace = iterate_leaves(*bg, delta_h, rho_h, cfg.max_rounds);
  json j{{"command", "transform"},
         {"rho_h", to_string(rho_h)},
         {"delta_h", delta_h},
         {"hypothesis_met", trace.hypothesis_met},
         {"gate_disagreement", trace.gate_disagreement},
         {"policy", trace.policy}};
  int status = kSuccess;
  if (!trace.choice) {
    j["record"] = "hypothesis not met";
  } else {
    j["choice"] = choice_json(*trace.choice);
    j["round_bound"] = trace.round_bound;
    j["final_round"] = trace.final_round ? json(*trace.final_round) : json(nullptr);
    j["gamma_invariant"] = trace.gamma_invariant;
    json rounds = json::array();
    for (const auto& r : trace.rounds)
      rounds.push_back(json{{"round", r.round},
                            {"graph", r.graph_key},
                            {"order", r.order},
                            {"max_degree", r.max_degree},
                            {"x_size", r.x_size},
                            {"opposite_size", r.opposite_size},
                            {"a_size", r.a_size},
                            {"b_size", r.b_size},
                            {"relabeled", r.relabeled},
                            {"gamma", r.gamma},
                            {"gamma_by_brute_force", r.gamma_by_brute_force},
                            {"verdict", detail::verdict_json(r.verdict)},
                            {"normalized_verdict", detail::verdict_json(r.normalized_verdict)}});
    j["rounds"] = rounds;
    if (!trace.gamma_invariant) {
      j["finding"] = "gamma changed under leaf attachment";
      status = kFinding;
    }
  }
  if (h) {
    auto c = constructive_inequality_check(*bg, *h, VizingOptions{cfg.max_vertices, cache});
    json cj{{"hypothesis_met", c.hypothesis_met},
            {"gamma_g", c.gamma_g},
            {"gamma_h", c.gamma_h},
            {"gamma_product", c.gamma_product},
            {"order_h", c.order_h},
            {"rho_h", to_string(c.rho_h.value)}};
    if (c.choice) {
      cj["m_star"] = c.choice->m_star;
      cj["side"] = to_string(c.choice->side);
      cj["lhs"] = c.lhs;
      cj["rhs"] = c.rhs;
      cj["holds"] = c.holds;
      if (!c.holds) {
        j["finding"] = "constructive inequality violated";
        status = kFinding;
      }
    }
    j["constructive"] = cj;
  }
  detail::emit(out, detail::parse_format(cfg.format, Format::Json), j);
  return status;
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Domination-density toolkit for Vizing's inequality on graph products", "vizing"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->envname("VIZING_FORMAT");
  app.add_option("--cache", cfg.cache_path, "Persistent gamma cache file")->envname("VIZING_CACHE");
  app.add_option("--jobs", cfg.jobs, "Worker threads for scans")->check(CLI::Range(1, 256))->envname("VIZING_JOBS");
  app.add_option("--max-vertices", cfg.max_vertices, "Vertex cap for product graphs")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 16))
      ->envname("VIZING_MAX_VERTICES");
  app.add_flag("--allow-large", cfg.allow_large, "Permit n = 8 exhaustive scans")->envname("VIZING_ALLOW_LARGE");
  app.add_flag("--paper-table", cfg.paper_table, "Print published reference values next to computed ones")
      ->envname("VIZING_PAPER_TABLE");

  auto* gamma = app.add_subcommand("gamma", "Domination number of a graph file, with witness and bounds");
  gamma->add_option("graph", cfg.inputs, "graph6, edge-list or biadjacency file")->required()->expected(1);

  auto* check = app.add_subcommand("check-vizing", "Evaluate gamma(G x H) >= gamma(G) gamma(H) and every criterion");
  check->add_option("graphs", cfg.inputs, "G and H graph files")->required()->expected(2);

  auto* scan = app.add_subcommand("scan", "Exhaustive scan of k-regular bipartite classes (JSON lines)");
  scan->add_option("n", cfg.n, "side size")->required();
  scan->add_option("k", cfg.k, "regularity")->required();
  scan->add_flag("--transpose", cfg.transpose, "Also identify a matrix with its transpose");
  scan->add_option("--resume", cfg.resume_path, "Skip classes whose key appears in this JSON-lines file");

  auto* thresholds = app.add_subcommand("thresholds", "Table of N(k) balanced-order thresholds");
  thresholds->add_option("kmax", cfg.k_max, "largest k")->required();

  auto* transform = app.add_subcommand("transform", "Leaf-attachment trace toward the imbalance regime");
  transform->add_option("graph", cfg.inputs, "bipartite graph file")->required()->expected(1);
  transform->add_option("--rho-h", cfg.rho_h, "domination density of H, e.g. 1/3");
  transform->add_option("--delta-h", cfg.delta_h, "maximum degree of H");
  transform->add_option("--max-rounds", cfg.max_rounds, "leaf-attachment rounds")->check(CLI::Range(1, 100000));
  std::string with;
  transform->add_option("--with", with, "graph file for H (enables the constructive inequality check)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  if (!with.empty()) cfg.inputs.push_back(with);

  try {
    std::optional<GammaCache> cache;
    if (!cfg.cache_path.empty()) cache.emplace(cfg.cache_path);
    GammaCache* cache_ptr = cache ? &*cache : nullptr;
    if (*gamma) return cmd_gamma(cfg, out);
    if (*check) return cmd_check_vizing(cfg, out, cache_ptr);
    if (*scan) return cmd_scan(cfg, out, cache_ptr);
    if (*thresholds) return cmd_thresholds(cfg, out);
    if (*transform) return cmd_transform(cfg, out, cache_ptr);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const DegenerateInputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kCapacityError;
  }
  return kInputError;
}

}  // namespace vizing::cli
