#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "treesigma/certificate.hpp"
#include "treesigma/constructions.hpp"
#include "treesigma/enumeration.hpp"
#include "treesigma/errors.hpp"
#include "treesigma/graph6.hpp"
#include "treesigma/lemmas.hpp"
#include "treesigma/profile.hpp"
#include "treesigma/report_io.hpp"
#include "treesigma/search.hpp"

namespace treesigma::cli {

namespace {

const std::vector<std::string> kKnownFlags = {
    "--n",     "--delta",  "--k",   "--position", "--max-degree", "--exact-delta", "--delta-max", "--format",
    "--out",   "--in",     "--override-size-guard", "--timestamps", "--help",
};

struct Options {
  std::optional<int> n;
  std::optional<int> delta;
  std::vector<int> k;
  std::optional<int> position;
  std::optional<int> max_degree;
  std::optional<int> exact_delta;
  int delta_max = 1000;
  std::string format;
  std::string out_path;
  std::string in_path;
  std::string family;
  bool override_guard = false;
  bool timestamps = false;
};

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

unsigned worker_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int require(const std::optional<int>& value, const char* flag) {
  if (!value) throw CLI::RequiredError(flag);
  return *value;
}

std::vector<std::string> read_graph6_lines(const Options& opt, std::istream& in) {
  std::ifstream file;
  std::istream* src = &in;
  if (!opt.in_path.empty()) {
    file.open(opt.in_path);
    if (!file) throw DomainError("cannot open --in file '" + opt.in_path + "'");
    src = &file;
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(*src, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

Tree parse_line(const std::string& line, std::size_t line_no) {
  try {
    return parse_graph6(line);
  } catch (const ParseError& e) {
    throw DomainError("line " + std::to_string(line_no) + ": " + e.what());
  } catch (const StructuralError& e) {
    throw DomainError("line " + std::to_string(line_no) + ": not a tree: " + e.what());
  }
}

DegreeFilter filter_from(const Options& opt) {
  const int given = (opt.delta ? 1 : 0) + (opt.exact_delta ? 1 : 0) + (opt.max_degree ? 1 : 0);
  if (given != 1) throw CLI::ValidationError("degree", "give exactly one of --delta, --exact-delta, --max-degree");
  if (opt.max_degree) return DegreeFilter::at_most(*opt.max_degree);
  return DegreeFilter::exact(opt.exact_delta ? *opt.exact_delta : *opt.delta);
}

// Output sink honoring --out.
class Sink {
 public:
  Sink(const Options& opt, std::ostream& fallback) : stream_(&fallback) {
    if (!opt.out_path.empty()) {
      file_.open(opt.out_path);
      if (!file_) throw DomainError("cannot open --out file '" + opt.out_path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void emit_json(Json j, const Options& opt, std::ostream& out) {
  if (opt.timestamps && j.is_object()) j["generated_at"] = utc_now();
  out << j.dump(2) << '\n';
}

bool csv(const Options& opt) { return opt.format == "csv"; }

int cmd_sigma(const Options& opt, std::istream& in, std::ostream& out) {
  const auto lines = read_graph6_lines(opt, in);
  if (csv(opt)) {
    out << "graph6,n,max_degree,sigma\n";
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const Tree t = parse_line(lines[i], i + 1);
      out << lines[i] << ',' << t.order() << ',' << t.max_degree() << ',' << sigma(t) << '\n';
    }
    return kOk;
  }
  Json arr = Json::array();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Tree t = parse_line(lines[i], i + 1);
    arr.push_back(Json{{"graph6", lines[i]}, {"n", t.order()}, {"max_degree", t.max_degree()}, {"sigma", sigma(t)}});
  }
  emit_json(arr, opt, out);
  return kOk;
}

int cmd_profile(const Options& opt, std::istream& in, std::ostream& out) {
  const auto lines = read_graph6_lines(opt, in);
  std::optional<DualCertificate> cert;
  if (opt.delta) cert.emplace(*opt.delta);
  bool violated = false;
  Json arr = Json::array();
  std::ostringstream rows;
  rows << "graph6,n,delta,sigma,penalty,sigma_via_decomposition,identities\n";
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Tree t = parse_line(lines[i], i + 1);
    const DegreeProfile p = profile(t);
    Json j = to_json(p);
    j["graph6"] = lines[i];
    std::string pen;
    std::string decomposed;
    if (cert) {
      const Rational pv = penalty(p, *cert);
      const Rational sv = sigma_via_decomposition(p, *cert, t.order());
      pen = pv.to_string();
      decomposed = sv.to_string();
      j["penalty"] = pen;
      j["sigma_via_decomposition"] = decomposed;
      if (sv != Rational(sigma(t))) violated = true;
    }
    if (!p.identity_violations().empty()) violated = true;
    rows << lines[i] << ',' << p.order() << ',' << p.delta() << ',' << p.sigma() << ',' << pen << ',' << decomposed
         << ',' << (p.identity_violations().empty() ? "ok" : "violated") << '\n';
    arr.push_back(std::move(j));
  }
  if (csv(opt)) {
    out << rows.str();
  } else {
    emit_json(arr, opt, out);
  }
  return violated ? kVerificationFailure : kOk;
}

int cmd_certificate(const Options& opt, std::ostream& out) {
  const DualCertificate cert(require(opt.delta, "--delta"));
  if (csv(opt)) {
    out << "i,j,F\n";
    for (int i = 1; i <= cert.delta(); ++i) {
      for (int j = i; j <= cert.delta(); ++j) out << i << ',' << j << ',' << cert.slack(i, j) << '\n';
    }
    return kOk;
  }
  emit_json(to_json(cert), opt, out);
  return kOk;
}

int cmd_bound(const Options& opt, std::ostream& out) {
  const int n = require(opt.n, "--n");
  const int delta = require(opt.delta, "--delta");
  const LpOptimum lp = lp_optimum(n, delta);
  const SigmaMaxPrediction prediction = exact_sigma_max(n, delta);
  if (csv(opt)) {
    out << "n,delta,residue,m_1_delta,m_2_delta,integral,sigma_bound,coverage,exact_sigma_max\n";
    out << n << ',' << delta << ',' << prediction.residue << ',' << lp.m_1_delta << ',' << lp.m_2_delta << ','
        << (lp.integral() ? "true" : "false") << ',' << lp.sigma_bound << ',' << coverage_name(prediction.coverage)
        << ',' << (prediction.value ? prediction.value->to_string() : "") << '\n';
    return kOk;
  }
  emit_json(to_json(lp, prediction), opt, out);
  return kOk;
}

void emit_trees(const std::vector<Tree>& trees, const Options& opt, std::ostream& out) {
  if (opt.format == "json") {
    Json arr = Json::array();
    for (const auto& t : trees) arr.push_back(write_graph6(t));
    emit_json(Json{{"count", trees.size()}, {"graph6", arr}}, opt, out);
    return;
  }
  if (csv(opt)) out << "graph6\n";
  for (const auto& t : trees) out << write_graph6(t) << '\n';
}

int cmd_construct(const Options& opt, std::ostream& out) {
  if (opt.k.size() != 1) throw CLI::ValidationError("--k", "construct takes a single --k value");
  const int k = opt.k.front();
  const int delta = require(opt.delta, "--delta");
  std::vector<Tree> trees;
  if (opt.family == "tt1") {
    if (opt.position) throw CLI::ValidationError("--position", "only valid for tt0");
    trees.push_back(tt1_opt(k, delta));
  } else if (opt.position) {
    trees.push_back(tt0_opt(k, delta, *opt.position));
  } else {
    if (k < 2) (void)tt0_opt(k, delta, 3);  // raises the empty-family domain error
    for (int pos : tt0_positions(k)) trees.push_back(tt0_opt(k, delta, pos));
  }
  emit_trees(trees, opt, out);
  return kOk;
}

int cmd_search(const Options& opt, std::ostream& out) {
  const int n = require(opt.n, "--n");
  const DegreeFilter filter = filter_from(opt);
  SearchOptions so;
  so.override_size_guard = opt.override_guard;
  so.threads = worker_threads();
  const SearchReport report = search_sigma_max(n, filter.delta, filter.kind, so);
  if (csv(opt)) {
    out << scan_csv({report});
  } else {
    emit_json(to_json(report), opt, out);
  }
  if (report.prediction_matches && !*report.prediction_matches) return kVerificationFailure;
  return kOk;
}

int cmd_scan(const Options& opt, std::ostream& out) {
  const DegreeFilter filter = filter_from(opt);
  if (opt.k.empty() || opt.k.size() > 2) throw CLI::ValidationError("--k", "scan takes --k LO [HI]");
  const int k_lo = opt.k.front();
  const int k_hi = opt.k.back();
  SearchOptions so;
  so.override_size_guard = opt.override_guard;
  so.threads = worker_threads();
  const auto reports = residue_scan(filter.delta, k_lo, k_hi, filter.kind, so);
  bool mismatch = false;
  for (const auto& r : reports) mismatch |= r.prediction_matches && !*r.prediction_matches;
  if (csv(opt)) {
    out << scan_csv(reports);
  } else {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    emit_json(Json{{"delta", filter.delta}, {"k_range", Json::array({k_lo, k_hi})}, {"reports", arr}}, opt, out);
  }
  return mismatch ? kVerificationFailure : kOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const int block_order = opt.n.value_or(16);
  const auto reports = verify_all(DeltaRange{4, opt.delta_max}, block_order, worker_threads());
  bool failed = false;
  for (const auto& r : reports) failed |= r.status == LemmaStatus::kFail;
  if (csv(opt)) {
    out << "lemma_id,delta_lo,delta_hi,status,checks,witness_count,vacuous_deltas\n";
    for (const auto& r : reports) {
      std::string vac;
      for (int d : r.vacuous_deltas) vac += (vac.empty() ? "" : " ") + std::to_string(d);
      out << r.lemma_id << ',' << r.delta_range.lo << ',' << r.delta_range.hi << ',' << lemma_status_name(r.status)
          << ',' << r.checks << ',' << r.witness_count << ',' << vac << '\n';
    }
  } else {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    emit_json(Json{{"delta_max", opt.delta_max}, {"block_max_order", block_order}, {"reports", arr}}, opt, out);
  }
  return failed ? kVerificationFailure : kOk;
}

int cmd_enumerate(const Options& opt, std::ostream& out) {
  const int n = require(opt.n, "--n");
  if (n < 1) throw DomainError("--n must be >= 1");
  if (n > kSearchSizeGuard && !opt.override_guard) {
    throw DomainError("order " + std::to_string(n) + " exceeds the enumeration guard of " +
                      std::to_string(kSearchSizeGuard) + "; pass --override-size-guard");
  }
  if (opt.max_degree && opt.exact_delta) {
    throw CLI::ValidationError("degree", "--max-degree and --exact-delta are mutually exclusive");
  }
  DegreeFilter filter;
  if (opt.max_degree) filter = DegreeFilter::at_most(*opt.max_degree);
  if (opt.exact_delta) filter = DegreeFilter::exact(*opt.exact_delta);
  FreeTreeGenerator gen(n, filter);
  if (opt.format == "json") {
    std::vector<Tree> trees;
    while (gen.next()) trees.push_back(gen.tree());
    emit_trees(trees, opt, out);
    return kOk;
  }
  if (csv(opt)) out << "graph6\n";
  while (gen.next()) out << write_graph6(gen.tree()) << '\n';
  return kOk;
}

}  // namespace

std::string suggest_flag(const std::string& flag) {
  std::string best;
  std::size_t best_distance = 3;
  for (const auto& known : kKnownFlags) {
    const std::size_t d = edit_distance(flag, known);
    if (d < best_distance) {
      best_distance = d;
      best = known;
    }
  }
  return best;
}

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact sigma-irregularity toolkit for trees", "treesigma"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", opt.out_path, "Write output to PATH instead of standard output");
    sub->add_flag("--timestamps", opt.timestamps, "Add a generated_at field to JSON objects");
  };

  auto* sigma_cmd = app.add_subcommand("sigma", "sigma of each graph6 tree on input");
  sigma_cmd->add_option("--in", opt.in_path, "Read graph6 lines from PATH");
  add_format(sigma_cmd);

  auto* profile_cmd = app.add_subcommand("profile", "degree profile, identities, and optional penalty");
  profile_cmd->add_option("--in", opt.in_path, "Read graph6 lines from PATH");
  profile_cmd->add_option("--delta", opt.delta, "Certificate used for the penalty");
  add_format(profile_cmd);

  auto* cert_cmd = app.add_subcommand("certificate", "dual certificate and slack table");
  cert_cmd->add_option("--delta", opt.delta, "Maximum degree (>= 4)")->required();
  add_format(cert_cmd);

  auto* bound_cmd = app.add_subcommand("bound", "LP optimum and sigma bound");
  bound_cmd->add_option("--n", opt.n, "Tree order")->required();
  bound_cmd->add_option("--delta", opt.delta, "Maximum degree (>= 4)")->required();
  add_format(bound_cmd);

  auto* construct_cmd = app.add_subcommand("construct", "build tt1 or tt0 extremal trees");
  construct_cmd->add_option("family", opt.family, "tt1 or tt0")->required()->check(CLI::IsMember({"tt1", "tt0"}));
  construct_cmd->add_option("--k", opt.k, "Family parameter")->required()->expected(1);
  construct_cmd->add_option("--delta", opt.delta, "Maximum degree (>= 4)")->required();
  construct_cmd->add_option("--position", opt.position, "Odd subdivision position for tt0 (default: all)");
  add_format(construct_cmd);

  auto* search_cmd = app.add_subcommand("search", "exhaustive sigma maximization");
  search_cmd->add_option("--n", opt.n, "Tree order")->required();
  search_cmd->add_option("--delta", opt.delta, "Maximum degree exactly delta");
  search_cmd->add_option("--exact-delta", opt.exact_delta, "Maximum degree exactly D");
  search_cmd->add_option("--max-degree", opt.max_degree, "Maximum degree at most D");
  search_cmd->add_flag("--override-size-guard", opt.override_guard, "Allow n above the size guard");
  add_format(search_cmd);

  auto* scan_cmd = app.add_subcommand("scan", "search every order delta*k + r, r = 1..delta");
  scan_cmd->add_option("--delta", opt.delta, "Maximum degree exactly delta");
  scan_cmd->add_option("--exact-delta", opt.exact_delta, "Maximum degree exactly D");
  scan_cmd->add_option("--max-degree", opt.max_degree, "Maximum degree at most D");
  scan_cmd->add_option("--k", opt.k, "k range: LO [HI]")->required()->expected(1, 2);
  scan_cmd->add_flag("--override-size-guard", opt.override_guard, "Allow n above the size guard");
  add_format(scan_cmd);

  auto* verify_cmd = app.add_subcommand("verify-lemmas", "exact sweeps of the slack-function lemmas");
  verify_cmd->add_option("--delta-max", opt.delta_max, "Sweep delta over 4..D")->check(CLI::Range(4, kLemmaMaxDelta));
  verify_cmd->add_option("--n", opt.n, "Largest tree order for the block-edge bound (default 16)")
      ->check(CLI::Range(5, kSearchSizeGuard));
  add_format(verify_cmd);

  auto* enum_cmd = app.add_subcommand("enumerate", "all free trees of order n as graph6");
  enum_cmd->add_option("--n", opt.n, "Tree order")->required();
  enum_cmd->add_option("--max-degree", opt.max_degree, "Keep trees with maximum degree <= D");
  enum_cmd->add_option("--exact-delta", opt.exact_delta, "Keep trees with maximum degree == D");
  enum_cmd->add_flag("--override-size-guard", opt.override_guard, "Allow n above the size guard");
  add_format(enum_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    for (const auto& a : args) {
      if (a.rfind("--", 0) != 0) continue;
      const std::string name = a.substr(0, a.find('='));
      if (std::find(kKnownFlags.begin(), kKnownFlags.end(), name) != kKnownFlags.end()) continue;
      const std::string hint = suggest_flag(name);
      if (!hint.empty()) err << "  did you mean " << hint << " instead of " << name << "?\n";
    }
    return kUsageError;
  }

  try {
    Sink sink(opt, out);
    std::ostream& o = *sink;
    if (sigma_cmd->parsed()) return cmd_sigma(opt, in, o);
    if (profile_cmd->parsed()) return cmd_profile(opt, in, o);
    if (cert_cmd->parsed()) return cmd_certificate(opt, o);
    if (bound_cmd->parsed()) return cmd_bound(opt, o);
    if (construct_cmd->parsed()) return cmd_construct(opt, o);
    if (search_cmd->parsed()) return cmd_search(opt, o);
    if (scan_cmd->parsed()) return cmd_scan(opt, o);
    if (verify_cmd->parsed()) return cmd_verify(opt, o);
    if (enum_cmd->parsed()) return cmd_enumerate(opt, o);
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  err << "usage error: no subcommand\n";
  return kUsageError;
}

}  // namespace treesigma::cli
