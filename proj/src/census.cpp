#include "htg/census.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <stdexcept>
#include <mutex>
#include <thread>

#include "json.hpp"

#include "htg/automorphisms.hpp"
#include "htg/htg.hpp"
#include "htg/named_graphs.hpp"

namespace htg {

std::vector<HtgParams> normal_form_triples(int max_order) {
  std::vector<HtgParams> out;
  for (int m = 1; 4 * m <= max_order; ++m) {
    for (int n = 4; m * n <= max_order; n += 2) {
      for (int ell = m % 2; 2 * ell <= n; ell += 2) {
        if (m == 1 && (ell == 1 || ell == n - 1)) continue;
        out.push_back(validate_params(m, n, ell));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const HtgParams& a, const HtgParams& b) {
    return std::tuple(a.order(), a.m(), a.n(), a.ell()) <
           std::tuple(b.order(), b.m(), b.n(), b.ell());
  });
  return out;
}

namespace {

// The named graphs of order `order` that an HTG could be isomorphic to.
std::vector<ExceptionalId> named_candidates(int order) {
  std::vector<ExceptionalId> out;
  auto add = [&](NamedKind kind, int vertices) {
    if (vertices == order) out.push_back(ExceptionalId{.kind = kind});
  };
  add(NamedKind::K33, 6);
  add(NamedKind::Cube, 8);
  add(NamedKind::Heawood, 14);
  add(NamedKind::MoebiusKantor, 16);
  add(NamedKind::Pappus, 18);
  if (order % 4 == 0 && order / 4 > 2) {
    out.push_back(ExceptionalId{.kind = NamedKind::GeneralizedPrism, .gpr_parameter = order / 4});
  }
  return out;
}

// Oracle-side recognition: isomorphism with a named graph, prefiltered by
// girth and automorphism group order.
std::optional<std::string> named_isomorph(const Graph& g, const BigInt& aut_order) {
  const auto g_girth = girth(g);
  for (const ExceptionalId& candidate : named_candidates(g.order())) {
    const Graph h = candidate.graph();
    if (girth(h) != g_girth) continue;
    if (automorphisms(h).order() != aut_order) continue;
    if (are_isomorphic(g, h)) return candidate.name();
  }
  return std::nullopt;
}

std::string oracle_category_of(const BigInt& stabilizer, bool named) {
  if (named) return "Exceptional";
  if (stabilizer == 6) return "TwoArcRegular";
  if (stabilizer == 3) return "OneArcRegular";
  if (stabilizer == 2) return "StabilizerTwo";
  if (stabilizer == 1) return "RegularAut";
  return "Unexpected(stabilizer " + stabilizer.str() + ")";
}

std::string arc_level(int s_transitive, const std::optional<int>& regular) {
  std::string text = "s-transitive up to " + std::to_string(s_transitive);
  if (regular) text += ", " + std::to_string(*regular) + "-arc-regular";
  return text;
}

}  // namespace

Verification verify_triple(const HtgParams& p) {
  Verification v{.predicted = classify(p)};
  const ClassificationResult& c = v.predicted;
  const ColoredHtg colored = build_htg(c.params);
  const Graph& g = colored.graph();

  const PermGroup group = automorphisms(g);
  const SArcReport report = s_arc_regularity(g, group);
  v.aut_order = group.order();
  v.stabilizer = report.vertex_stabilizer_order;
  v.s_transitive_up_to = report.s_transitive_up_to;
  v.s_regular_at = report.regular_at;
  for (const auto& gen : group.generators()) {
    if (!is_color_permuting(colored, gen)) {
      v.all_generators_color_permuting = false;
      break;
    }
  }
  const auto isomorph = named_isomorph(g, v.aut_order);
  v.oracle_category = oracle_category_of(v.stabilizer, isomorph.has_value());

  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) v.mismatches.push_back(c.params.to_string() + ": " + what);
  };
  expect(v.aut_order == c.predicted_aut_order,
         "|Aut| oracle " + v.aut_order.str() + " vs predicted " +
             c.predicted_aut_order.str());
  expect(v.stabilizer == c.predicted_stabilizer,
         "stabilizer oracle " + v.stabilizer.str() + " vs predicted " +
             c.predicted_stabilizer.str());
  expect(v.s_transitive_up_to == c.s_transitive_up_to && v.s_regular_at == c.s_regular_at,
         "arc action oracle (" + arc_level(v.s_transitive_up_to, v.s_regular_at) +
             ") vs predicted (" + arc_level(c.s_transitive_up_to, c.s_regular_at) + ")");
  expect(v.all_generators_color_permuting == c.is_normal_cayley,
         std::string("normal Cayley oracle ") +
             (v.all_generators_color_permuting ? "yes" : "no") + " vs predicted " +
             (c.is_normal_cayley ? "yes" : "no"));
  expect(v.oracle_category == category_name(c.category),
         "category oracle " + v.oracle_category + " vs predicted " +
             category_name(c.category));
  expect(c.flags.consistent(),
         "condition flags hold for exactly " + std::to_string(c.flags.count()));
  expect(group.orbit(0).size() == static_cast<std::size_t>(g.order()),
         "oracle group is not vertex-transitive");
  if (c.exceptional) {
    v.isomorphic_to_named = isomorph == c.exceptional->name();
    expect(*v.isomorphic_to_named, "not isomorphic to " + c.exceptional->name());
  } else if (isomorph) {
    expect(false, "isomorphic to " + *isomorph + " but not recognized as exceptional");
  }
  return v;
}

CensusRow census_row(const ClassificationResult& c, int raw_ell) {
  if (!c.flags.consistent()) {
    throw std::logic_error("condition flags for " + c.params.to_string() +
                           " hold for exactly " + std::to_string(c.flags.count()));
  }
  CensusRow row;
  row.m = c.params.m();
  row.n = c.params.n();
  row.ell = raw_ell;
  row.ell_normal = c.params.ell();
  row.order = c.params.order();
  row.girth = c.girth;
  row.category = category_name(c.category);
  row.flags = c.flags;
  row.aut_order = c.predicted_aut_order;
  row.stabilizer = c.predicted_stabilizer;
  if (c.exceptional) row.named_iso = c.exceptional->name();
  return row;
}

void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& work) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(count, 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      try {
        work(k);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

std::vector<CensusRow> run_census(int max_order, bool verify, unsigned jobs) {
  const auto triples = normal_form_triples(max_order);
  std::vector<CensusRow> rows(triples.size());
  parallel_for(triples.size(), jobs, [&](std::size_t k) {
    const HtgParams& p = triples[k];
    if (verify) {
      const Verification v = verify_triple(p);
      rows[k] = census_row(v.predicted, p.ell());
      rows[k].verified = v.agrees();
    } else {
      rows[k] = census_row(classify(p), p.ell());
    }
  });
  return rows;
}

namespace {

nlohmann::json big_to_json(const BigInt& value) {
  if (value <= std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<std::uint64_t>(value);
  }
  return value.str();
}

const char* flag(bool value) { return value ? "true" : "false"; }

}  // namespace

void write_csv(std::ostream& out, const std::vector<CensusRow>& rows) {
  out << kCsvVersionLine << '\n' << kCsvColumns << '\n';
  for (const CensusRow& r : rows) {
    out << r.m << ',' << r.n << ',' << r.ell << ',' << r.ell_normal << ','
        << r.order << ',' << r.girth << ',' << r.category << ','
        << flag(r.flags.c1) << ',' << flag(r.flags.c2) << ','
        << flag(r.flags.c3) << ',' << flag(r.flags.c4) << ','
        << r.aut_order.str() << ',' << r.stabilizer.str()
        << ',' << r.named_iso.value_or("") << ',';
    if (r.verified) out << flag(*r.verified);
    out << '\n';
  }
}

void write_jsonl(std::ostream& out, const std::vector<CensusRow>& rows) {
  for (const CensusRow& r : rows) {
    nlohmann::ordered_json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["ell"] = r.ell;
    j["ell_normal"] = r.ell_normal;
    j["order"] = r.order;
    j["girth"] = r.girth;
    j["category"] = r.category;
    j["c1"] = r.flags.c1;
    j["c2"] = r.flags.c2;
    j["c3"] = r.flags.c3;
    j["c4"] = r.flags.c4;
    j["aut_order"] = big_to_json(r.aut_order);
    j["stabilizer"] = big_to_json(r.stabilizer);
    j["named_iso"] = r.named_iso ? nlohmann::ordered_json(*r.named_iso) : nullptr;
    j["verified"] = r.verified ? nlohmann::ordered_json(*r.verified) : nullptr;
    out << j.dump() << '\n';
  }
}

VerifySummary run_verify(int max_order, unsigned jobs) {
  const auto triples = normal_form_triples(max_order);
  std::vector<std::optional<Verification>> slots(triples.size());
  parallel_for(triples.size(), jobs,
               [&](std::size_t k) { slots[k] = verify_triple(triples[k]); });

  VerifySummary summary;
  for (auto& slot : slots) {
    const Verification& v = *slot;
    ++summary.category_counts[v.predicted.label()];
    if (!v.agrees()) ++summary.mismatches;
    summary.results.push_back(std::move(*slot));
  }
  return summary;
}

}  // namespace htg
