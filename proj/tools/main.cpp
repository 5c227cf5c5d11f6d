// gauss-lintel: enumerate, check, canonize, convert, search and render
// Gauss diagrams represented as lintels.
//
// Exit codes: 0 success (and realizable, for `check`); 1 user error;
// 2 valid input that is not realizable (`check` only); 3 internal error.

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "gauss_lintel/criteria.hpp"
#include "gauss_lintel/enumeration.hpp"
#include "gauss_lintel/format.hpp"
#include "gauss_lintel/render.hpp"

namespace gl = gauss_lintel;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUserError = 1;
constexpr int kExitNotRealizable = 2;
constexpr int kExitInternal = 3;

int max_size_from_env() {
  const char* env = std::getenv("GAUSS_LINTEL_MAX_SIZE");
  if (!env) return 11;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || value < 1 || value > 20) {
    throw gl::ParseError("GAUSS_LINTEL_MAX_SIZE must be an integer in 1..20");
  }
  return static_cast<int>(value);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw gl::IoError("cannot open " + path + " for writing");
  out << content;
  if (!out) throw gl::IoError("failed writing " + path);
}

struct EnumerateArgs {
  int size = 0;
  std::string filter;
  std::string out;
  int workers = 0;
  std::string dedup = "lyndon-test";
  std::string tsv;
};

int run_enumerate(const EnumerateArgs& args) {
  gl::EnumerationOptions options;
  options.workers = args.workers;
  options.dedup = gl::parse_dedup_mode(args.dedup);
  options.max_size = max_size_from_env();
  options.collect = !args.out.empty();
  if (args.size >= 12 && args.size <= options.max_size) {
    std::fprintf(stderr,
                 "warning: size %d sweeps %d! = a very large permutation "
                 "space; expect a long run\n",
                 args.size, args.size);
  }
  const gl::FilterSpec filter = gl::FilterSpec::parse(args.filter);
  const gl::EnumerationResult result =
      gl::enumerate_lintels(args.size, filter, options);
  if (!args.out.empty()) gl::save_results(args.out, result);
  if (!args.tsv.empty()) gl::append_summary_tsv(args.tsv, result.report);
  std::printf("size=%d filter=%s count=%llu classes=%llu elapsed=%.3f\n",
              result.report.size, result.report.filter.str().c_str(),
              static_cast<unsigned long long>(result.report.count),
              static_cast<unsigned long long>(result.report.total_canonical),
              result.report.elapsed_seconds);
  return kExitOk;
}

// Accepts either a lintel line or a Gauss word.
gl::SortedLintel parse_diagram(const std::string& text) {
  if (gl::looks_like_lintel(text)) return gl::parse_lintel(text);
  return gl::from_gauss_word(gl::parse_gauss_word(text));
}

int run_check(const std::string& input, bool use_stdin) {
  std::vector<std::string> inputs;
  if (use_stdin) {
    std::string line;
    while (std::getline(std::cin, line)) {
      std::string_view view(line);
      while (!view.empty() &&
             std::isspace(static_cast<unsigned char>(view.front()))) {
        view.remove_prefix(1);
      }
      if (view.empty() || view.front() == '#') continue;
      inputs.emplace_back(view);
    }
  } else {
    inputs.push_back(input);
  }
  bool all_realizable = true;
  for (const std::string& text : inputs) {
    const gl::SortedLintel L = parse_diagram(text);
    const gl::CriteriaReport report = gl::full_report(L);
    std::printf("%s\n", gl::format_report_line(L, report).c_str());
    all_realizable = all_realizable && report.realizable;
  }
  return all_realizable ? kExitOk : kExitNotRealizable;
}

int run_canon(const std::string& input) {
  const gl::SortedLintel L = gl::parse_lintel(input);
  std::printf("%s\n", gl::format_lintel(gl::canonical_lintel(L)).c_str());
  return kExitOk;
}

int run_convert(const std::string& input) {
  if (gl::looks_like_lintel(input)) {
    const gl::SortedLintel L = gl::parse_lintel(input);
    std::printf("%s\n", gl::format_gauss_word(gl::to_gauss_word(L)).c_str());
  } else {
    const gl::SortedLintel L = gl::from_gauss_word(gl::parse_gauss_word(input));
    std::printf("%s\n", gl::format_lintel(L).c_str());
  }
  return kExitOk;
}

struct DiscrepancyArgs {
  int size = 0;
  std::string a;
  std::string b;
  std::string out;
  int workers = 0;
};

int run_discrepancies(const DiscrepancyArgs& args) {
  gl::EnumerationOptions options;
  options.workers = args.workers;
  options.max_size = max_size_from_env();
  const gl::Criterion a = gl::parse_criterion(args.a);
  const gl::Criterion b = gl::parse_criterion(args.b);
  const auto records = gl::find_discrepancies(args.size, a, b, options);
  if (!args.out.empty()) {
    std::string content = "# gauss-lintel v1 size=" + std::to_string(args.size) +
                          " discrepancy=" + std::string(gl::criterion_name(a)) +
                          "/" + std::string(gl::criterion_name(b)) + "\n";
    for (const auto& rec : records) {
      content += gl::format_report_line(rec.lintel, rec.report) + "\n";
    }
    content += "# count=" + std::to_string(records.size()) + "\n";
    write_file(args.out, content);
  }
  std::printf("size=%d a=%s b=%s count=%zu\n", args.size,
              std::string(gl::criterion_name(a)).c_str(),
              std::string(gl::criterion_name(b)).c_str(), records.size());
  return kExitOk;
}

struct RenderArgs {
  std::string input;
  std::string format = "svg";
  std::string out;
  gl::SvgOptions svg;
};

int run_render(const RenderArgs& args) {
  const gl::SortedLintel L = gl::parse_lintel(args.input);
  std::string content;
  if (args.format == "svg") {
    content = gl::render_svg(L, args.svg);
  } else if (args.format == "dot") {
    content = gl::to_dot(gl::interlacement_graph(L));
  } else {
    throw gl::ParseError("unknown format '" + args.format +
                         "' (expected svg or dot)");
  }
  if (args.out.empty()) {
    std::fputs(content.c_str(), stdout);
  } else {
    write_file(args.out, content);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gauss diagram (lintel) enumeration and realizability toolkit"};
  app.require_subcommand(1);

  EnumerateArgs en;
  auto* enumerate =
      app.add_subcommand("enumerate",
                         "Count and list canonical non-equivalent diagrams of "
                         "one size that satisfy a filter");
  enumerate->add_option("--size", en.size, "diagram size (number of chords)")
      ->required();
  enumerate->add_option(
      "--filter", en.filter,
      "comma-separated tokens: prime,c2,b3,b,gl,stz,r,ca (empty: count all)");
  enumerate->add_option("--out", en.out, "write the matching lintels here");
  enumerate->add_option("--workers", en.workers,
                        "worker threads (0 = all cores)");
  enumerate->add_option("--dedup", en.dedup, "set | lyndon-test");
  enumerate->add_option("--tsv", en.tsv,
                        "append a size/filter/count row to this TSV file");

  std::string check_input;
  bool check_stdin = false;
  auto* check = app.add_subcommand(
      "check", "Report all criteria of one diagram (lintel or Gauss word)");
  check->add_option("input", check_input, "lintel line or Gauss word");
  check->add_flag("--stdin", check_stdin, "read one diagram per line");

  std::string canon_input;
  auto* canon =
      app.add_subcommand("canon", "Canonical (Lyndon) form of a lintel");
  canon->add_option("input", canon_input, "lintel line")->required();

  std::string convert_input;
  auto* convert = app.add_subcommand(
      "convert", "Convert between Gauss word and lintel forms");
  convert->add_option("input", convert_input, "lintel line or Gauss word")
      ->required();

  DiscrepancyArgs disc;
  auto* discrepancies = app.add_subcommand(
      "discrepancies",
      "List canonical prime diagrams on which two criteria disagree");
  discrepancies->add_option("--size", disc.size, "diagram size")->required();
  discrepancies->add_option("--a", disc.a, "first criterion")->required();
  discrepancies->add_option("--b", disc.b, "second criterion")->required();
  discrepancies->add_option("--out", disc.out, "write full reports here");
  discrepancies->add_option("--workers", disc.workers,
                            "worker threads (0 = all cores)");

  RenderArgs ren;
  auto* render =
      app.add_subcommand("render", "Render a lintel as SVG or DOT");
  render->add_option("input", ren.input, "lintel line")->required();
  render->add_option("--format", ren.format, "svg | dot");
  render->add_option("--out", ren.out, "output file (default: stdout)");
  render->add_option("--radius", ren.svg.radius, "circle radius in px");
  render->add_option("--font-size", ren.svg.font_size, "label font size");
  render->add_option("--stroke-width", ren.svg.stroke_width,
                     "chord stroke width");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUserError;
  }

  try {
    if (*enumerate) return run_enumerate(en);
    if (*check) {
      if (check_stdin == !check_input.empty()) {
        // exactly one source, an argument or --stdin
        std::fprintf(stderr,
                     "error: pass a diagram argument or --stdin (not both)\n");
        return kExitUserError;
      }
      return run_check(check_input, check_stdin);
    }
    if (*canon) return run_canon(canon_input);
    if (*convert) return run_convert(convert_input);
    if (*discrepancies) return run_discrepancies(disc);
    if (*render) return run_render(ren);
    return kExitUserError;
  } catch (const gl::LintelError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUserError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitInternal;
  }
}
