#include "htg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "htg/census.hpp"
#include "htg/classifier.hpp"
#include "htg/errors.hpp"
#include "htg/graph_io.hpp"
#include "htg/htg.hpp"

namespace htg {

namespace {

using Json = nlohmann::ordered_json;

// Thrown for --out failures; maps to kExitIo.
struct IoFailure {
  std::string message;
};

Json big_json(const BigInt& value) {
  if (value <= std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<std::uint64_t>(value);
  }
  return value.str();
}

std::string arc_action(int s_transitive, const std::optional<int>& regular) {
  if (regular) return std::to_string(*regular) + "-arc-regular";
  if (s_transitive == 0) return "not arc-transitive";
  return std::to_string(s_transitive) + "-arc-transitive";
}

std::string yes_no(bool value) { return value ? "yes" : "no"; }

// Writes to --out when given, else to `out`.
void emit(const std::string& path, std::ostream& out,
          const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoFailure{"cannot open " + path + " for writing"};
  write(file);
  file.flush();
  if (!file) throw IoFailure{"write to " + path + " failed"};
}

struct Triple {
  int m = 0;
  int n = 0;
  int ell = 0;
};

void add_triple(CLI::App* cmd, Triple& t) {
  cmd->add_option("m", t.m, "number of rows")->required();
  cmd->add_option("n", t.n, "length of the vertical cycles (even)")->required();
  cmd->add_option("ell", t.ell, "wrap-around shift")->required();
}

// classify

struct ClassifyOptions {
  Triple triple;
  bool verify = false;
  std::string format = "text";
};

Json classification_json(const ClassificationResult& c, const HtgParams& raw) {
  Json j;
  j["m"] = c.params.m();
  j["n"] = c.params.n();
  j["ell"] = raw.ell();
  j["ell_normal"] = c.params.ell();
  j["order"] = c.params.order();
  j["girth"] = c.girth;
  j["category"] = category_name(c.category);
  j["named_iso"] = c.exceptional ? Json(c.exceptional->name()) : Json(nullptr);
  j["c1"] = c.flags.c1;
  j["c2"] = c.flags.c2;
  j["c3"] = c.flags.c3;
  j["c4"] = c.flags.c4;
  j["aut_order"] = big_json(c.predicted_aut_order);
  j["stabilizer"] = big_json(c.predicted_stabilizer);
  j["normal_cayley"] = c.is_normal_cayley;
  j["s_transitive_up_to"] = c.s_transitive_up_to;
  j["s_regular_at"] = c.s_regular_at ? Json(*c.s_regular_at) : Json(nullptr);
  return j;
}

int run_classify(const ClassifyOptions& o, std::ostream& out, std::ostream& err) {
  const HtgParams raw = validate_params(o.triple.m, o.triple.n, o.triple.ell);
  const ClassificationResult c = classify(raw);
  if (!raw.is_normal_form()) {
    err << "note: " << raw.to_string() << " normalized to " << c.params.to_string()
        << '\n';
  }
  std::optional<Verification> v;
  if (o.verify) v = verify_triple(raw);

  if (o.format == "json") {
    Json j = classification_json(c, raw);
    if (v) {
      j["oracle_aut_order"] = big_json(v->aut_order);
      j["oracle_stabilizer"] = big_json(v->stabilizer);
      j["verified"] = v->agrees();
      j["mismatches"] = v->mismatches;
    }
    out << j.dump() << '\n';
  } else {
    out << c.params.to_string() << '\n'
        << "  order:        " << c.params.order() << '\n'
        << "  girth:        " << c.girth << '\n'
        << "  conditions:   c1=" << c.flags.c1 << " c2=" << c.flags.c2
        << " c3=" << c.flags.c3 << " c4=" << c.flags.c4 << '\n'
        << "  category:     " << category_name(c.category);
    if (c.exceptional) out << " (" << c.exceptional->name() << ')';
    out << '\n'
        << "  |Aut|:        " << c.predicted_aut_order << '\n'
        << "  stabilizer:   " << c.predicted_stabilizer << '\n'
        << "  arc action:   " << arc_action(c.s_transitive_up_to, c.s_regular_at) << '\n'
        << "  normal Cayley: " << yes_no(c.is_normal_cayley) << '\n';
    if (v) {
      out << "  oracle |Aut|: " << v->aut_order << '\n'
          << "  oracle stabilizer: " << v->stabilizer << '\n'
          << "  oracle arc action: " << arc_action(v->s_transitive_up_to, v->s_regular_at)
          << '\n'
          << "  verified:     " << (v->agrees() ? "true" : "false") << '\n';
    }
  }
  if (v && !v->agrees()) {
    for (const auto& line : v->mismatches) err << "mismatch: " << line << '\n';
    return kExitMismatch;
  }
  return kExitOk;
}

// census

struct CensusOptions {
  int max_order = 0;
  std::string out;
  std::string format = "csv";
  bool verify = false;
  bool force = false;
  unsigned jobs = 0;
};

int run_census_command(const CensusOptions& o, std::ostream& out, std::ostream& err) {
  if (o.max_order < 4) {
    err << "error: --max-order must be at least 4\n";
    return kExitUsage;
  }
  if (o.verify && o.max_order > kVerifyGuardOrder && !o.force) {
    err << "error: --verify above order " << kVerifyGuardOrder << " needs --force\n";
    return kExitUsage;
  }
  const auto rows = run_census(o.max_order, o.verify, o.jobs);
  emit(o.out, out, [&](std::ostream& s) {
    if (o.format == "jsonl") {
      write_jsonl(s, rows);
    } else {
      write_csv(s, rows);
    }
  });
  const auto failed = std::count_if(rows.begin(), rows.end(), [](const CensusRow& r) {
    return r.verified && !*r.verified;
  });
  if (failed > 0) {
    err << failed << " row(s) disagree with the oracle\n";
    return kExitMismatch;
  }
  return kExitOk;
}

// verify

struct VerifyOptions {
  int max_order = 0;
  unsigned jobs = 0;
  bool force = false;
};

int run_verify_command(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  if (o.max_order < 4) {
    err << "error: --max-order must be at least 4\n";
    return kExitUsage;
  }
  if (o.max_order > kVerifyGuardOrder && !o.force) {
    err << "error: --max-order above " << kVerifyGuardOrder << " needs --force\n";
    return kExitUsage;
  }
  const VerifySummary summary = run_verify(o.max_order, o.jobs);
  out << "triples verified: " << summary.results.size() << '\n';
  for (const auto& [label, count] : summary.category_counts) {
    out << "  " << label << ": " << count << '\n';
  }
  out << "mismatches: " << summary.mismatches << '\n';
  for (const Verification& v : summary.results) {
    for (const auto& line : v.mismatches) err << "mismatch: " << line << '\n';
  }
  return summary.mismatches == 0 ? kExitOk : kExitMismatch;
}

// export

struct ExportOptions {
  Triple triple;
  std::string format;
  std::string out;
};

Json export_json(const ColoredHtg& colored) {
  const HtgParams& p = colored.params();
  const Graph& g = colored.graph();
  Json j;
  j["m"] = p.m();
  j["n"] = p.n();
  j["ell"] = p.ell();
  j["order"] = g.order();
  Json vertices = Json::array();
  for (Vertex v = 0; v < g.order(); ++v) {
    const GroupElement& e = colored.element_of(v);
    vertices.push_back({{"index", v},
                        {"row", v / p.n()},
                        {"column", v % p.n()},
                        {"j", e.j},
                        {"i", e.i},
                        {"eps", e.eps}});
  }
  j["vertices"] = std::move(vertices);
  Json adjacency = Json::array();
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto nb = g.neighbors(v);
    adjacency.push_back(std::vector<Vertex>(nb.begin(), nb.end()));
  }
  j["adjacency"] = std::move(adjacency);
  Json edges = Json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"u", e.u},
                     {"v", e.v},
                     {"color", std::string(color_name(colored.color_of_edge(e.u, e.v)))}});
  }
  j["edges"] = std::move(edges);
  return j;
}

int run_export(const ExportOptions& o, std::ostream& out) {
  const HtgParams p = validate_params(o.triple.m, o.triple.n, o.triple.ell);
  const ColoredHtg colored = build_htg(p);
  emit(o.out, out, [&](std::ostream& s) {
    if (o.format == "graph6") {
      s << to_graph6(colored.graph()) << '\n';
    } else if (o.format == "dot") {
      std::string name = "HTG_" + std::to_string(p.m()) + "_" + std::to_string(p.n()) +
                         "_" + std::to_string(p.ell());
      s << to_dot(colored.graph(), name, [&](Edge e) {
        return "color=" + std::string(color_name(colored.color_of_edge(e.u, e.v)));
      });
    } else {
      s << export_json(colored).dump() << '\n';
    }
  });
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Honeycomb toroidal graphs: classification, census and export", "htg"};
  app.require_subcommand(1);

  ClassifyOptions classify_opts;
  auto* classify_cmd = app.add_subcommand("classify", "classify one triple");
  add_triple(classify_cmd, classify_opts.triple);
  classify_cmd->add_flag("--verify", classify_opts.verify, "cross-check with the oracle");
  classify_cmd->add_option("--format", classify_opts.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CensusOptions census_opts;
  auto* census_cmd = app.add_subcommand("census", "classify every triple up to an order");
  census_cmd->add_option("--max-order", census_opts.max_order, "largest m*n")->required();
  census_cmd->add_option("--out", census_opts.out, "output file (default stdout)");
  census_cmd->add_option("--format", census_opts.format, "csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  census_cmd->add_flag("--verify", census_opts.verify, "cross-check every row");
  census_cmd->add_flag("--force", census_opts.force, "lift the verification size guard");
  census_cmd->add_option("--jobs", census_opts.jobs, "worker threads (0: all cores)");

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "oracle cross-check of the census");
  verify_cmd->add_option("--max-order", verify_opts.max_order, "largest m*n")->required();
  verify_cmd->add_option("--jobs", verify_opts.jobs, "worker threads (0: all cores)");
  verify_cmd->add_flag("--force", verify_opts.force, "lift the size guard");

  ExportOptions export_opts;
  auto* export_cmd = app.add_subcommand("export", "write one graph");
  add_triple(export_cmd, export_opts.triple);
  export_cmd->add_option("--format", export_opts.format, "graph6, dot or json")
      ->required()
      ->check(CLI::IsMember({"graph6", "dot", "json"}));
  export_cmd->add_option("--out", export_opts.out, "output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify_cmd) return run_classify(classify_opts, out, err);
    if (*census_cmd) return run_census_command(census_opts, out, err);
    if (*verify_cmd) return run_verify_command(verify_opts, out, err);
    return run_export(export_opts, out);
  } catch (const HtgError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoFailure& e) {
    err << "error: " << e.message << '\n';
    return kExitIo;
  }
}

}  // namespace htg
