#pragma once

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "htg/classifier.hpp"
#include "htg/params.hpp"
#include "htg/perm_group.hpp"

namespace htg {

/// Every valid normal-form triple with m*n <= max_order, ordered by
/// (m*n, m, n, ell).
std::vector<HtgParams> normal_form_triples(int max_order);

/// Oracle cross-check of one triple's classification.
struct Verification {
  ClassificationResult predicted;
  BigInt aut_order = 0;
  BigInt stabilizer = 0;
  int s_transitive_up_to = 0;
  std::optional<int> s_regular_at{};
  bool all_generators_color_permuting = true;
  std::optional<bool> isomorphic_to_named{};  // exceptional triples only
  /// "Exceptional" when the graph is isomorphic to a named candidate of its
  /// order, else read off the oracle stabilizer order.
  std::string oracle_category{};
  std::vector<std::string> mismatches{};

  bool agrees() const { return mismatches.empty(); }
};

/// Builds the graph, computes Aut with the oracle and compares category,
/// |Aut|, stabilizer order, arc-regularity level, the normal-Cayley property
/// and, for exceptional triples, isomorphism with the named graph.
Verification verify_triple(const HtgParams& p);

struct CensusRow {
  int m = 0;
  int n = 0;
  int ell = 0;
  int ell_normal = 0;
  int order = 0;
  int girth = 0;
  std::string category;
  ConditionFlags flags;
  BigInt aut_order = 0;
  BigInt stabilizer = 0;
  std::optional<std::string> named_iso;
  std::optional<bool> verified;
};

CensusRow census_row(const ClassificationResult& c, int raw_ell);

/// Runs `work(k)` for k in 0..count-1 on `jobs` threads (0: hardware
/// concurrency). Exceptions are rethrown after all workers finish.
void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& work);

/// One row per normal-form triple with m*n <= max_order, in the order of
/// normal_form_triples(). With `verify`, each row carries the oracle verdict.
std::vector<CensusRow> run_census(int max_order, bool verify = false,
                                  unsigned jobs = 0);

inline constexpr std::string_view kCsvVersionLine = "# htg-census v1";
inline constexpr std::string_view kCsvColumns =
    "m,n,ell,ell_normal,order,girth,category,c1,c2,c3,c4,aut_order,stabilizer,"
    "named_iso,verified";

void write_csv(std::ostream& out, const std::vector<CensusRow>& rows);
void write_jsonl(std::ostream& out, const std::vector<CensusRow>& rows);

struct VerifySummary {
  std::vector<Verification> results;
  std::map<std::string, int> category_counts;
  int mismatches = 0;
};

VerifySummary run_verify(int max_order, unsigned jobs = 0);

}  // namespace htg
