#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "gauss_lintel/criteria.hpp"
#include "gauss_lintel/lintel.hpp"

namespace gauss_lintel {

enum class Criterion { C2, B3, B, GL, STZ, R, CA };

std::string_view criterion_name(Criterion c);
Criterion parse_criterion(std::string_view token);

// An all-of filter over canonical diagrams: optional primality plus a set of
// criteria. Parsed from comma-separated lowercase tokens
// ("prime,c2,b3,b,gl,stz,r,ca"); rendered as "prime+B" / "all" for display
// and result-file headers.
struct FilterSpec {
  bool require_prime = false;
  std::vector<Criterion> criteria;  // kept sorted cheap-to-expensive

  static FilterSpec parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const FilterSpec&, const FilterSpec&) = default;
};

enum class DedupMode {
  // Insert canonical forms into a hash set; memory grows with the number of
  // equivalence classes.
  Set,
  // Count a sorted lintel iff it equals its own canonical form. O(1) memory;
  // the default.
  LyndonTest,
};

DedupMode parse_dedup_mode(std::string_view token);

struct EnumerationOptions {
  int workers = 0;  // <= 0: hardware concurrency
  DedupMode dedup = DedupMode::LyndonTest;
  int max_size = 11;
  bool collect = true;  // keep the matching canonical lintels, not just counts
};

struct EnumerationReport {
  int size = 0;
  FilterSpec filter;
  std::uint64_t total_canonical = 0;  // equivalence classes visited
  std::uint64_t count = 0;            // classes whose representative passes
  double elapsed_seconds = 0.0;
};

struct EnumerationResult {
  EnumerationReport report;
  std::vector<SortedLintel> lintels;  // canonical, distinct, L-sorted
};

// Sweeps all n! sorted lintels via beta over permutations, visits each
// equivalence class exactly once, and counts/collects the classes whose
// canonical representative passes the filter. Deterministic regardless of
// worker count. Throws SizeTooLarge beyond options.max_size.
EnumerationResult enumerate_lintels(int n, const FilterSpec& filter,
                                    const EnumerationOptions& options = {});

// Same sweep evaluated against several filters at once; criteria results are
// shared per representative, so this is much cheaper than repeated
// single-filter runs.
std::vector<EnumerationResult> enumerate_many(
    int n, const std::vector<FilterSpec>& filters,
    const EnumerationOptions& options = {});

struct DiscrepancyRecord {
  SortedLintel lintel;
  CriteriaReport report;
};

// Canonical prime lintels of size n on which criteria a and b disagree,
// L-sorted, with full reports.
std::vector<DiscrepancyRecord> find_discrepancies(
    int n, Criterion a, Criterion b, const EnumerationOptions& options = {});

// Results file:
//   # gauss-lintel v1 size=<n> filter=<spec>
//   one canonical lintel per line
//   # count=<k> elapsed=<seconds>
void save_results(const std::filesystem::path& path,
                  const EnumerationResult& result);

// Round-trips save_results output; also accepts hand-written files in the
// same shape. Invalid chords are reported with their line number.
EnumerationResult load_results(const std::filesystem::path& path);

// Appends one `size<TAB>filter<TAB>count` row, writing the header row first
// when the file does not exist yet.
void append_summary_tsv(const std::filesystem::path& path,
                        const EnumerationReport& report);

}  // namespace gauss_lintel
