// Command-line front end: loads a sequence database, mines gap-constrained
// sequential patterns, and optionally sweeps replication factors or maximum
// gaps for benchmarking.
//
// Pattern output: one line per pattern, "tok1 tok2 ... #SUP: n". Bench mode
// emits CSV instead. Exit codes: 0 ok, 1 configuration/data error, 3 time
// limit hit (partial output, terminated by a TIMEOUT line).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gapseq/sdb.hpp"
#include "gapseq/solver.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitTimeout = 3;

struct MinsupSpec {
  std::optional<long> absolute;
  std::optional<double> percent;

  // Percentages round up so that "support >= minsup" keeps its meaning.
  int resolve(int num_sequences) const {
    if (absolute) return static_cast<int>(*absolute);
    double raw = *percent * num_sequences / 100.0;
    int v = static_cast<int>(std::ceil(raw - 1e-9));
    return std::max(v, 1);
  }
};

struct ContainsRule {
  std::string token;
  int lo = 1;
  std::optional<int> hi;
};

struct Options {
  std::string input;
  std::string format = "plain";
  MinsupSpec minsup;
  gapseq::GapSpec gap = gapseq::GapSpec::unconstrained();
  std::optional<int> max_len;
  std::optional<int> min_size;
  std::optional<int> max_size;
  std::vector<ContainsRule> contains;
  bool stats = false;
  bool sort = false;
  std::optional<double> time_limit_s;
  std::vector<int> bench_replicate;
  std::vector<int> bench_gap_sweep;
  std::string output;
};

MinsupSpec parse_minsup(const std::string& text) {
  MinsupSpec spec;
  try {
    if (!text.empty() && text.back() == '%') {
      std::size_t used = 0;
      spec.percent = std::stod(text.substr(0, text.size() - 1), &used);
      if (used + 1 != text.size()) throw std::invalid_argument(text);
      if (*spec.percent <= 0.0 || *spec.percent > 100.0)
        throw std::runtime_error("--minsup percentage must be in (0, 100]");
    } else {
      std::size_t used = 0;
      spec.absolute = std::stol(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      if (*spec.absolute < 1) throw std::runtime_error("--minsup must be >= 1");
    }
  } catch (const std::logic_error&) {
    throw std::runtime_error("--minsup expects an integer or a percentage like 0.5%");
  }
  return spec;
}

gapseq::GapSpec parse_gap(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw std::runtime_error("--gap expects M,N (N may be 'inf')");
  auto to_int = [](const std::string& part) {
    std::size_t used = 0;
    int v = std::stoi(part, &used);
    if (used != part.size()) throw std::invalid_argument(part);
    return v;
  };
  try {
    int m = to_int(text.substr(0, comma));
    std::string n_part = text.substr(comma + 1);
    if (n_part == "inf") return gapseq::GapSpec::min_only(m);
    return gapseq::GapSpec::bounded(m, to_int(n_part));
  } catch (const std::logic_error&) {
    throw std::runtime_error("--gap bounds must satisfy 0 <= M <= N (N may be 'inf')");
  }
}

ContainsRule parse_contains(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t colon = text.find(':', start);
    parts.push_back(text.substr(start, colon == std::string::npos ? colon : colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (parts[0].empty() || parts.size() > 3)
    throw std::runtime_error("--contains expects TOKEN[:l[:u]]");
  ContainsRule rule;
  rule.token = parts[0];
  try {
    if (parts.size() >= 2) rule.lo = std::stoi(parts[1]);
    if (parts.size() == 3) rule.hi = std::stoi(parts[2]);
  } catch (const std::logic_error&) {
    throw std::runtime_error("--contains counts must be integers");
  }
  if (rule.lo < 0 || (rule.hi && *rule.hi < rule.lo))
    throw std::runtime_error("--contains counts must satisfy 0 <= l <= u");
  return rule;
}

gapseq::SequenceDatabase load(const Options& opt) {
  std::ifstream in(opt.input, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + opt.input);
  return opt.format == "spmf" ? gapseq::parse_spmf(in) : gapseq::parse_plain(in);
}

gapseq::PatternModel build_model(const Options& opt, const gapseq::SequenceDatabase& db,
                                 int minsup, const gapseq::GapSpec& gap) {
  gapseq::PatternModel model = gapseq::PatternModel::for_db(db, minsup, gap, opt.max_len);
  if (opt.min_size) model.aux.push_back(gapseq::AuxConstraint::min_size(*opt.min_size));
  if (opt.max_size)
    model.aux.push_back(gapseq::AuxConstraint::max_size(std::min(*opt.max_size, model.ell)));
  for (const ContainsRule& rule : opt.contains) {
    auto id = db.catalog().find(rule.token);
    if (!id) throw std::runtime_error("unknown item token '" + rule.token + "'");
    model.aux.push_back(gapseq::AuxConstraint::membership({*id}, rule.lo, rule.hi));
  }
  return model;
}

std::string gap_to_string(const gapseq::GapSpec& gap) {
  std::string n = gap.max_gap ? std::to_string(*gap.max_gap) : "inf";
  return "[" + std::to_string(gap.min_gap) + "," + n + "]";
}

struct MiningResult {
  gapseq::SearchStats stats;
  double elapsed_ms = 0.0;
};

gapseq::InterruptFn make_deadline(const Options& opt) {
  if (!opt.time_limit_s) return {};
  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(*opt.time_limit_s));
  return [deadline] { return std::chrono::steady_clock::now() >= deadline; };
}

MiningResult run_mining(const gapseq::SequenceDatabase& db, const gapseq::PatternModel& model,
                        const gapseq::PatternSink& sink, const gapseq::InterruptFn& interrupt) {
  MiningResult result;
  auto t0 = std::chrono::steady_clock::now();
  result.stats = gapseq::solve(db, model, sink, interrupt);
  auto t1 = std::chrono::steady_clock::now();
  result.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return result;
}

void print_stats(std::ostream& out, const Options& opt, const gapseq::PatternModel& model,
                 const MiningResult& result) {
  out << "# patterns: " << result.stats.patterns << "\n";
  out << "# nodes: " << result.stats.nodes << "\n";
  out << "# propagations: " << result.stats.propagations << "\n";
  out << "# elapsed_ms: " << result.elapsed_ms << "\n";
  out << "# config: input=" << opt.input << " format=" << opt.format << " minsup=" << model.minsup
      << " gap=" << gap_to_string(model.gap) << " ell=" << model.ell << "\n";
}

int run(const Options& opt, std::ostream& out) {
  gapseq::SequenceDatabase db = load(opt);
  gapseq::PatternModel model = build_model(opt, db, opt.minsup.resolve(db.size()), opt.gap);

  auto write_pattern = [&](std::span<const gapseq::ItemId> items, int support) {
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i > 0) out << ' ';
      out << db.catalog().token(items[i]);
    }
    out << " #SUP: " << support << "\n";
  };

  MiningResult result;
  if (opt.sort) {
    std::vector<std::pair<std::vector<std::string>, int>> lines;
    result = run_mining(db, model,
                        [&](std::span<const gapseq::ItemId> items, int support) {
                          std::vector<std::string> toks;
                          toks.reserve(items.size());
                          for (gapseq::ItemId v : items) toks.push_back(db.catalog().token(v));
                          lines.emplace_back(std::move(toks), support);
                        },
                        make_deadline(opt));
    std::sort(lines.begin(), lines.end());
    for (const auto& [toks, support] : lines) {
      for (std::size_t i = 0; i < toks.size(); ++i) {
        if (i > 0) out << ' ';
        out << toks[i];
      }
      out << " #SUP: " << support << "\n";
    }
  } else {
    result = run_mining(db, model, write_pattern, make_deadline(opt));
  }

  if (result.stats.aborted) out << "TIMEOUT\n";
  if (opt.stats) print_stats(out, opt, model, result);
  return result.stats.aborted ? kExitTimeout : 0;
}

int bench(const Options& opt, std::ostream& out) {
  gapseq::SequenceDatabase db = load(opt);
  const bool by_replication = !opt.bench_replicate.empty();

  out << (by_replication ? "k" : "N") << ",patterns,nodes,propagations,elapsed_ms\n";
  int exit_code = 0;
  auto row = [&](int key, const gapseq::SequenceDatabase& d, const gapseq::PatternModel& model) {
    MiningResult r = run_mining(d, model, {}, make_deadline(opt));
    out << key << ',' << r.stats.patterns << ',' << r.stats.nodes << ',' << r.stats.propagations
        << ',' << r.elapsed_ms << "\n";
    if (r.stats.aborted) exit_code = kExitTimeout;
  };

  if (by_replication) {
    for (int k : opt.bench_replicate) {
      gapseq::SequenceDatabase replica = gapseq::replicate(db, k);
      // a percentage re-resolves against the replicated size
      row(k, replica, build_model(opt, replica, opt.minsup.resolve(replica.size()), opt.gap));
    }
  } else {
    int minsup = opt.minsup.resolve(db.size());
    for (int n : opt.bench_gap_sweep) {
      gapseq::GapSpec gap = gapseq::GapSpec::bounded(opt.gap.min_gap, n);
      row(n, db, build_model(opt, db, minsup, gap));
    }
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gap-constrained sequential pattern miner"};

  Options opt;
  std::string minsup_text;
  std::string gap_text = "0,inf";
  std::vector<std::string> contains_text;

  app.add_option("--input", opt.input, "path to the sequence database")->required();
  app.add_option("--format", opt.format, "input format")
      ->check(CLI::IsMember({"plain", "spmf"}))
      ->capture_default_str();
  app.add_option("--minsup", minsup_text,
                 "minimum support: absolute count (e.g. 2) or percentage (e.g. 0.5%)")
      ->required();
  app.add_option("--gap", gap_text, "gap constraint M,N with N an integer or 'inf'")
      ->capture_default_str();
  app.add_option("--max-len", opt.max_len, "cap on the number of pattern variables");
  app.add_option("--min-size", opt.min_size, "patterns must have at least this many items");
  app.add_option("--max-size", opt.max_size, "patterns must have at most this many items");
  app.add_option("--contains", contains_text,
                 "membership rule TOKEN[:l[:u]], repeatable; default l=1 with u unbounded, "
                 "l=u=0 excludes the token");
  app.add_flag("--stats", opt.stats, "append a statistics block after the patterns");
  app.add_flag("--sort", opt.sort, "sort patterns lexicographically instead of search order");
  app.add_option("--time-limit", opt.time_limit_s, "wall-clock limit in seconds");
  app.add_option("--bench-replicate", opt.bench_replicate,
                 "benchmark mode: comma-separated replication factors")
      ->delimiter(',');
  app.add_option("--bench-gap-sweep", opt.bench_gap_sweep,
                 "benchmark mode: comma-separated maximum gaps")
      ->delimiter(',');
  app.add_option("--output", opt.output, "write results to this file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    opt.minsup = parse_minsup(minsup_text);
    opt.gap = parse_gap(gap_text);
    for (const std::string& text : contains_text) opt.contains.push_back(parse_contains(text));
    if (!opt.bench_replicate.empty() && !opt.bench_gap_sweep.empty())
      throw std::runtime_error("choose one bench mode: --bench-replicate or --bench-gap-sweep");
    for (int k : opt.bench_replicate) {
      if (k < 1) throw std::runtime_error("replication factors must be >= 1");
    }

    std::ofstream file;
    if (!opt.output.empty()) {
      file.open(opt.output, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open output file: " + opt.output);
    }
    std::ostream& out = opt.output.empty() ? std::cout : file;

    const bool bench_mode = !opt.bench_replicate.empty() || !opt.bench_gap_sweep.empty();
    return bench_mode ? bench(opt, out) : run(opt, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
