#include "gauss_lintel/enumeration.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <utility>

#include "canon.hpp"
#include "gauss_lintel/format.hpp"
#include "gauss_lintel/generator.hpp"
#include "gauss_lintel/interlacement.hpp"

namespace gauss_lintel {

std::string_view criterion_name(Criterion c) {
  switch (c) {
    case Criterion::C2: return "C2";
    case Criterion::B3: return "B3";
    case Criterion::B: return "B";
    case Criterion::GL: return "GL";
    case Criterion::STZ: return "STZ";
    case Criterion::R: return "R";
    case Criterion::CA: return "CA";
  }
  throw OutOfRange("unknown criterion");
}

Criterion parse_criterion(std::string_view token) {
  std::string t;
  for (char c : token) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "c2") return Criterion::C2;
  if (t == "b3") return Criterion::B3;
  if (t == "b") return Criterion::B;
  if (t == "gl") return Criterion::GL;
  if (t == "stz") return Criterion::STZ;
  if (t == "r") return Criterion::R;
  if (t == "ca") return Criterion::CA;
  throw ParseError("unknown criterion '" + std::string(token) + "'");
}

FilterSpec FilterSpec::parse(std::string_view text) {
  FilterSpec spec;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    if (token == "prime") {
      spec.require_prime = true;
    } else if (token == "all") {
      // pure enumeration marker; nothing to add
    } else {
      const Criterion c = parse_criterion(token);
      if (std::find(spec.criteria.begin(), spec.criteria.end(), c) ==
          spec.criteria.end()) {
        spec.criteria.push_back(c);
      }
    }
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == '+' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      token += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  flush();
  // evaluation order: cheapest and most selective first (enum order)
  std::sort(spec.criteria.begin(), spec.criteria.end());
  return spec;
}

std::string FilterSpec::str() const {
  std::string out;
  if (require_prime) out = "prime";
  for (Criterion c : criteria) {
    if (!out.empty()) out += '+';
    out += criterion_name(c);
  }
  return out.empty() ? "all" : out;
}

DedupMode parse_dedup_mode(std::string_view token) {
  if (token == "set") return DedupMode::Set;
  if (token == "lyndon-test" || token == "lyndon") return DedupMode::LyndonTest;
  throw ParseError("unknown dedup mode '" + std::string(token) +
                   "' (expected 'set' or 'lyndon-test')");
}

namespace {

// Criteria of one canonical representative, evaluated on demand and memoized
// so that several filters share the work.
class RepCriteria {
 public:
  explicit RepCriteria(const SortedLintel& L)
      : lintel_(L), graph_(interlacement_graph(L)) {}

  bool prime() {
    if (!prime_) prime_ = is_prime(graph_);
    return *prime_;
  }

  bool get(Criterion c) {
    auto& memo = memo_[static_cast<int>(c)];
    if (!memo) memo = evaluate(c);
    return *memo;
  }

  CriteriaReport report() {
    CriteriaReport r;
    r.prime = prime();
    r.c1 = check_c1(graph_);
    r.c2 = get(Criterion::C2);
    r.b3 = get(Criterion::B3);
    r.b = get(Criterion::B);
    r.gl = get(Criterion::GL);
    r.stz_certificate = check_stz(graph_);
    r.stz = r.stz_certificate.has_value();
    r.r_certificate = check_r(graph_);
    r.r = r.r_certificate.has_value();
    r.realizable = get(Criterion::CA);
    return r;
  }

 private:
  bool evaluate(Criterion c) {
    switch (c) {
      case Criterion::C2: return check_c2(graph_);
      case Criterion::B3: return check_b3(graph_);
      case Criterion::B: return check_b(graph_);
      case Criterion::GL: return check_gl(graph_);
      case Criterion::STZ: return check_stz(graph_).has_value();
      case Criterion::R: return check_r(graph_).has_value();
      case Criterion::CA: return is_realizable(lintel_);
    }
    throw OutOfRange("unknown criterion");
  }

  const SortedLintel& lintel_;
  InterlacementGraph graph_;
  std::optional<bool> prime_;
  std::optional<bool> memo_[7];
};

bool passes(const FilterSpec& spec, RepCriteria& rep) {
  if (spec.require_prime && !rep.prime()) return false;
  for (Criterion c : spec.criteria) {
    if (!rep.get(c)) return false;
  }
  return true;
}

struct SweepConfig {
  int n = 0;
  std::vector<FilterSpec> filters;
  bool collect = true;
  DedupMode dedup = DedupMode::LyndonTest;
  int workers = 1;
  bool discrepancies = false;
  Criterion disc_a{};
  Criterion disc_b{};
};

struct WorkerResult {
  std::uint64_t total = 0;
  std::vector<std::uint64_t> counts;
  std::vector<std::vector<SortedLintel>> hits;
  std::vector<DiscrepancyRecord> records;
  // set mode: flattened canonical form -> bitmask of passing filters
  std::unordered_map<std::string, std::uint32_t> seen;
};

std::string key_of(const std::vector<Chord>& chords) {
  std::string key(chords.size() * 2, '\0');
  for (std::size_t i = 0; i < chords.size(); ++i) {
    key[2 * i] = static_cast<char>(chords[i].first);
    key[2 * i + 1] = static_cast<char>(chords[i].second);
  }
  return key;
}

std::vector<Chord> chords_of_key(const std::string& key) {
  std::vector<Chord> chords(key.size() / 2);
  for (std::size_t i = 0; i < chords.size(); ++i) {
    chords[i] = {key[2 * i], key[2 * i + 1]};
  }
  return chords;
}

// Evaluates the filters (and the discrepancy pair) on one canonical
// representative and returns the filter pass bitmask.
std::uint32_t process_representative(const SweepConfig& cfg,
                                     const std::vector<Chord>& chords,
                                     WorkerResult& out) {
  const SortedLintel rep = detail::make_sorted_unchecked(chords);
  RepCriteria criteria(rep);
  std::uint32_t bits = 0;
  for (std::size_t f = 0; f < cfg.filters.size(); ++f) {
    if (passes(cfg.filters[f], criteria)) {
      bits |= 1u << f;
      ++out.counts[f];
      if (cfg.collect) out.hits[f].push_back(rep);
    }
  }
  if (cfg.discrepancies && criteria.prime() &&
      criteria.get(cfg.disc_a) != criteria.get(cfg.disc_b)) {
    out.records.push_back({rep, criteria.report()});
  }
  return bits;
}

void sweep_range(const SweepConfig& cfg, std::uint64_t first,
                 std::uint64_t last, WorkerResult& out) {
  const int n = cfg.n;
  const int m = 2 * n;
  out.counts.assign(cfg.filters.size(), 0);
  out.hits.assign(cfg.filters.size(), {});
  if (first >= last) return;

  std::vector<int> images = permutation_at_rank(n, first).images();
  std::vector<int> pairing(static_cast<std::size_t>(m));
  std::vector<Chord> chords;
  chords.reserve(n);
  std::vector<Chord> canon;

  for (std::uint64_t rank = first; rank < last; ++rank) {
    for (int i = 0; i < n; ++i) {
      const int odd = 2 * i + 1;
      const int even = 2 * images[i];
      pairing[odd] = even;
      pairing[even] = odd;
    }
    detail::sorted_chords_of_pairing(pairing, chords);

    if (cfg.dedup == DedupMode::LyndonTest) {
      if (detail::is_self_canonical(pairing, chords)) {
        ++out.total;
        process_representative(cfg, chords, out);
      }
    } else {
      canon = chords;
      detail::canonical_chords(pairing, canon);
      std::string key = key_of(canon);
      if (out.seen.find(key) == out.seen.end()) {
        WorkerResult scratch;
        scratch.counts.assign(cfg.filters.size(), 0);
        scratch.hits.assign(cfg.filters.size(), {});
        const std::uint32_t bits = process_representative(cfg, canon, scratch);
        for (auto& rec : scratch.records) out.records.push_back(std::move(rec));
        out.seen.emplace(std::move(key), bits);
      }
    }
    std::next_permutation(images.begin(), images.end());
  }
}

struct SweepOutcome {
  std::uint64_t total = 0;
  std::vector<std::uint64_t> counts;
  std::vector<std::vector<SortedLintel>> hits;
  std::vector<DiscrepancyRecord> records;
  double elapsed_seconds = 0;
};

SweepOutcome run_sweep(SweepConfig cfg) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t total_ranks = factorial(cfg.n);

  int workers = cfg.workers;
  if (workers <= 0) {
    workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
  }
  if (static_cast<std::uint64_t>(workers) > total_ranks) {
    workers = static_cast<int>(total_ranks);
  }

  std::vector<WorkerResult> parts(static_cast<std::size_t>(workers));
  if (workers == 1) {
    sweep_range(cfg, 0, total_ranks, parts[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    const std::uint64_t chunk = total_ranks / workers;
    const std::uint64_t extra = total_ranks % workers;
    std::uint64_t begin = 0;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t end =
          begin + chunk + (static_cast<std::uint64_t>(w) < extra ? 1 : 0);
      threads.emplace_back([&cfg, begin, end, &part = parts[w]] {
        sweep_range(cfg, begin, end, part);
      });
      begin = end;
    }
    for (auto& t : threads) t.join();
  }

  SweepOutcome out;
  out.counts.assign(cfg.filters.size(), 0);
  out.hits.assign(cfg.filters.size(), {});

  if (cfg.dedup == DedupMode::LyndonTest) {
    for (auto& part : parts) {
      out.total += part.total;
      for (std::size_t f = 0; f < cfg.filters.size(); ++f) {
        out.counts[f] += part.counts[f];
        for (auto& L : part.hits[f]) out.hits[f].push_back(std::move(L));
      }
      for (auto& rec : part.records) out.records.push_back(std::move(rec));
    }
  } else {
    // A class straddling two rank ranges is evaluated by each worker that
    // first meets it; the merged map keeps one copy.
    std::unordered_map<std::string, std::uint32_t> merged;
    for (auto& part : parts) {
      merged.merge(part.seen);
      for (auto& rec : part.records) out.records.push_back(std::move(rec));
    }
    out.total = merged.size();
    for (const auto& [key, bits] : merged) {
      for (std::size_t f = 0; f < cfg.filters.size(); ++f) {
        if ((bits >> f) & 1u) {
          ++out.counts[f];
          if (cfg.collect) {
            out.hits[f].push_back(
                detail::make_sorted_unchecked(chords_of_key(key)));
          }
        }
      }
    }
    // set mode may record the same discrepancy in several workers
    std::sort(out.records.begin(), out.records.end(),
              [](const DiscrepancyRecord& a, const DiscrepancyRecord& b) {
                return a.lintel < b.lintel;
              });
    out.records.erase(
        std::unique(out.records.begin(), out.records.end(),
                    [](const DiscrepancyRecord& a, const DiscrepancyRecord& b) {
                      return a.lintel == b.lintel;
                    }),
        out.records.end());
  }

  for (auto& hits : out.hits) std::sort(hits.begin(), hits.end());
  std::sort(out.records.begin(), out.records.end(),
            [](const DiscrepancyRecord& a, const DiscrepancyRecord& b) {
              return a.lintel < b.lintel;
            });

  out.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return out;
}

void check_size(int n, const EnumerationOptions& options) {
  if (n < 1) throw OutOfRange("size must be at least 1");
  if (n > options.max_size) {
    throw SizeTooLarge("size " + std::to_string(n) +
                       " exceeds the configured maximum of " +
                       std::to_string(options.max_size));
  }
  if (n > 20) throw SizeTooLarge("size " + std::to_string(n) + " exceeds 20");
}

}  // namespace

std::vector<EnumerationResult> enumerate_many(
    int n, const std::vector<FilterSpec>& filters,
    const EnumerationOptions& options) {
  check_size(n, options);
  SweepConfig cfg;
  cfg.n = n;
  cfg.filters = filters;
  cfg.collect = options.collect;
  cfg.dedup = options.dedup;
  cfg.workers = options.workers;
  SweepOutcome outcome = run_sweep(std::move(cfg));

  std::vector<EnumerationResult> results;
  results.reserve(filters.size());
  for (std::size_t f = 0; f < filters.size(); ++f) {
    EnumerationResult r;
    r.report.size = n;
    r.report.filter = filters[f];
    r.report.total_canonical = outcome.total;
    r.report.count = outcome.counts[f];
    r.report.elapsed_seconds = outcome.elapsed_seconds;
    r.lintels = std::move(outcome.hits[f]);
    results.push_back(std::move(r));
  }
  return results;
}

EnumerationResult enumerate_lintels(int n, const FilterSpec& filter,
                                    const EnumerationOptions& options) {
  return std::move(enumerate_many(n, {filter}, options)[0]);
}

std::vector<DiscrepancyRecord> find_discrepancies(
    int n, Criterion a, Criterion b, const EnumerationOptions& options) {
  check_size(n, options);
  SweepConfig cfg;
  cfg.n = n;
  cfg.collect = false;
  cfg.dedup = options.dedup;
  cfg.workers = options.workers;
  cfg.discrepancies = true;
  cfg.disc_a = a;
  cfg.disc_b = b;
  return std::move(run_sweep(std::move(cfg)).records);
}

void save_results(const std::filesystem::path& path,
                  const EnumerationResult& result) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << "# gauss-lintel v1 size=" << result.report.size
      << " filter=" << result.report.filter.str() << "\n";
  for (const SortedLintel& L : result.lintels) {
    out << format_lintel(L) << "\n";
  }
  char footer[64];
  std::snprintf(footer, sizeof footer, "# count=%llu elapsed=%.3f",
                static_cast<unsigned long long>(result.report.count),
                result.report.elapsed_seconds);
  out << footer << "\n";
  if (!out) throw IoError("failed writing " + path.string());
}

EnumerationResult load_results(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");

  EnumerationResult result;
  bool have_header = false;
  bool have_footer = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    while (!view.empty() && std::isspace(static_cast<unsigned char>(view.front()))) {
      view.remove_prefix(1);
    }
    if (view.empty()) continue;
    if (view.front() == '#') {
      std::istringstream hs{std::string(view.substr(1))};
      std::string word;
      hs >> word;
      if (!have_header && word == "gauss-lintel") {
        std::string version, field;
        hs >> version;
        if (version != "v1") {
          throw ParseError(path.string() + ":" + std::to_string(line_no) +
                           ": unsupported results version '" + version + "'");
        }
        while (hs >> field) {
          if (field.rfind("size=", 0) == 0) {
            result.report.size = std::stoi(field.substr(5));
          } else if (field.rfind("filter=", 0) == 0) {
            result.report.filter = FilterSpec::parse(field.substr(7));
          }
        }
        have_header = true;
      } else if (word.rfind("count=", 0) == 0) {
        result.report.count = std::stoull(word.substr(6));
        have_footer = true;
        std::string field;
        while (hs >> field) {
          if (field.rfind("elapsed=", 0) == 0) {
            result.report.elapsed_seconds = std::stod(field.substr(8));
          }
        }
      }
      continue;  // other # lines are comments
    }
    if (!have_header) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) +
                       ": missing '# gauss-lintel v1' header");
    }
    try {
      SortedLintel L = parse_lintel(view);
      if (L.size() != result.report.size) {
        throw ParseError("lintel of size " + std::to_string(L.size()) +
                         " in a size=" + std::to_string(result.report.size) +
                         " file");
      }
      result.lintels.push_back(std::move(L));
    } catch (const C1Violation& e) {
      throw C1Violation(path.string() + ":" + std::to_string(line_no) + ": " +
                        e.what());
    } catch (const InvalidLintel& e) {
      throw InvalidLintel(path.string() + ":" + std::to_string(line_no) +
                          ": " + e.what());
    } catch (const ParseError& e) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) + ": " +
                       e.what());
    }
  }
  if (!have_header) {
    throw ParseError(path.string() + ": missing '# gauss-lintel v1' header");
  }
  if (have_footer) {
    if (result.report.count != result.lintels.size()) {
      throw ParseError(path.string() + ": footer count=" +
                       std::to_string(result.report.count) + " but " +
                       std::to_string(result.lintels.size()) + " lintels");
    }
  } else {
    result.report.count = result.lintels.size();
  }
  return result;
}

void append_summary_tsv(const std::filesystem::path& path,
                        const EnumerationReport& report) {
  const bool fresh = !std::filesystem::exists(path);
  std::ofstream out(path, std::ios::app);
  if (!out) throw IoError("cannot open " + path.string() + " for appending");
  if (fresh) out << "size\tfilter\tcount\n";
  out << report.size << '\t' << report.filter.str() << '\t' << report.count
      << "\n";
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace gauss_lintel
