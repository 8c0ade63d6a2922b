#include "disjoint/cli.hpp"

#include "disjoint/serialize.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace disjoint::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

std::vector<Nat> parse_nat_list(const std::string& s) {
  std::vector<Nat> out;
  for (const auto& tok : split(s, ',')) out.push_back(Nat::parse(tok));
  if (out.empty()) throw UsageError("empty number list");
  return out;
}

// "p/q", "n" or a plain decimal such as "1.25", all exact.
Rational parse_rational(const std::string& s) {
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const Nat num = Nat::parse(s.substr(0, slash));
    const Nat den = Nat::parse(s.substr(slash + 1));
    if (den.is_zero()) throw UsageError("zero denominator in '" + s + "'");
    return make_rational(num, den);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    const std::string whole = s.substr(0, dot).empty() ? "0" : s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    Nat scale(1);
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= Nat(10);
    return make_rational(Nat::parse(whole + frac), scale);
  }
  return Rational(Nat::parse(s).big());
}

// "a..b" inclusive.
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const auto v = Nat::parse(s).to_u64();
    return {v, v};
  }
  const auto lo = Nat::parse(s.substr(0, dots)).to_u64();
  const auto hi = Nat::parse(s.substr(dots + 2)).to_u64();
  if (hi < lo) throw UsageError("empty range '" + s + "'");
  return {lo, hi};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << content;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Data files carry no clock; the manifest beside each one does.
struct Manifest {
  explicit Manifest(std::string name) : subcommand(std::move(name)) {}

  std::string subcommand;
  Json parameters = Json::object();
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  Json extra = Json::object();
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  void emit(const std::string& content, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
      out << content;
      return;
    }
    write_file(path, content);
    outputs.push_back(path);
  }

  void finish() const {
    if (outputs.empty()) return;
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    Json j{{"subcommand", subcommand},
           {"parameters", parameters},
           {"inputs", inputs},
           {"outputs", outputs},
           {"tool_version", kToolVersion},
           {"wall_clock_seconds", secs},
           {"determinism", "outputs depend only on the parameters; re-running reproduces them byte for byte"}};
    if (!extra.empty()) j["extra"] = extra;
    write_file(outputs.front() + ".manifest.json", dump(j));
  }
};

PairSource load_source(const std::string& pair_path, const std::string& spec_path, Manifest& m) {
  if (!pair_path.empty() == !spec_path.empty()) throw UsageError("give exactly one of --pair or --spec");
  if (!spec_path.empty()) {
    m.inputs.push_back(spec_path);
    return PairSource(spec_from_json(Json::parse(read_file(spec_path))));
  }
  m.inputs.push_back(pair_path);
  PairFile p = pair_from_json(Json::parse(read_file(pair_path)));
  return PairSource(std::move(p.a), std::move(p.b));
}

std::vector<Nat> parse_grid(const std::string& desc, const PairSource& pair) {
  const auto colon = desc.find(':');
  const std::string kind = desc.substr(0, colon);
  const auto parts = colon == std::string::npos ? std::vector<std::string>{} : split(desc.substr(colon + 1), ':');
  if (kind == "list" && parts.size() == 1) return parse_nat_list(parts[0]);
  if (kind == "geometric" && (parts.size() == 2 || parts.size() == 3)) {
    const double r = parts.size() == 3 ? std::stod(parts[2]) : 1.05;
    return geometric_grid(Nat::parse(parts[0]), Nat::parse(parts[1]), r);
  }
  if (kind == "jump" && parts.size() == 2) return jump_grid(pair, Nat::parse(parts[0]), Nat::parse(parts[1]));
  if (kind == "witness" && parts.size() == 1) {
    const auto* spec = pair.spec();
    if (!spec) throw UsageError("witness grids need a spec-backed pair (--spec)");
    return witness_grid(*spec, Nat::parse(parts[0]).to_u64());
  }
  throw UsageError("bad grid '" + desc + "' (list:a,b,..|geometric:start:end[:ratio]|jump:lo:hi|witness:K)");
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
  std::string family;
  std::string k;
  std::string moduli;
  std::string seed_moduli = "2,2";
  std::string limit;
  std::string out;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
  Manifest m{"construct"};
  m.parameters = Json{{"family", a.family}, {"k", a.k}, {"moduli", a.moduli}, {"seed_moduli", a.seed_moduli},
                      {"limit", a.limit}};
  PairFile pf;
  pf.family = a.family;
  auto need_limit = [&] {
    if (a.limit.empty()) throw UsageError("--limit is required for family " + a.family);
    return Nat::parse(a.limit);
  };
  if (a.family == "pow2") {
    const Nat limit = need_limit();
    pf.spec = uniform_spec_covering(Nat(2), limit);
    std::tie(pf.a, pf.b) = mixed_radix_pair(*pf.spec, limit);
  } else if (a.family == "base-k") {
    if (a.k.empty()) throw UsageError("--k is required for base-k");
    const Nat limit = need_limit();
    pf.family = "base-" + a.k;
    pf.spec = uniform_spec_covering(Nat::parse(a.k), limit);
    std::tie(pf.a, pf.b) = mixed_radix_pair(*pf.spec, limit);
  } else if (a.family == "mixed") {
    if (a.moduli.empty()) throw UsageError("--moduli is required for mixed");
    pf.spec = MixedRadixSpec(parse_nat_list(a.moduli));
    std::tie(pf.a, pf.b) = mixed_radix_pair(*pf.spec, need_limit());
  } else if (a.family == "witness") {
    if (a.k.empty()) throw UsageError("--k is required for witness");
    const std::size_t k = Nat::parse(a.k).to_u64();
    if (k == 0) throw UsageError("--k must be >= 1");
    pf.spec = witness_spec(MixedRadixSpec(parse_nat_list(a.seed_moduli)), k);
    const auto w = witness_y_sequence(*pf.spec, k);
    const Nat limit = a.limit.empty() ? w.y + w.y : Nat::parse(a.limit);
    std::tie(pf.a, pf.b) = mixed_radix_pair(*pf.spec, limit);
    err << "witness k=" << k << ": y=" << w.y << " A(y)=" << w.a_y << " B(y)=" << w.b_y << " A(2y)=" << w.a_2y
        << " B(2y)=" << w.b_2y << (w.consistent() ? " (digit DP agrees)" : " (digit DP DISAGREES)") << "\n";
    if (!w.consistent()) return kExitViolation;
  } else {
    throw UsageError("unknown family '" + a.family + "' (pow2, base-k, mixed, witness)");
  }
  m.emit(dump(to_json(pf)), a.out, out);
  m.finish();
  return kExitOk;
}

struct VerifyArgs {
  std::string pair;
  double ratio = 1.05;
  std::string out;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  Manifest m{"verify"};
  m.parameters = Json{{"pair", a.pair}, {"ratio", a.ratio}};
  m.inputs.push_back(a.pair);
  const PairFile pf = pair_from_json(Json::parse(read_file(a.pair)));
  Json report{{"family", pf.family}, {"sizes", Json{{"A", pf.a.size()}, {"B", pf.b.size()}}}};
  int code = kExitOk;

  if (auto d = first_shared_difference(pf.a, pf.b)) {
    report["disjoint"] = false;
    report["shared_difference"] = d->to_string();
    err << "not disjoint: difference " << *d << " occurs in both A-A and B-B\n";
    m.emit(dump(report), a.out, out);
    m.finish();
    return kExitViolation;
  }
  report["disjoint"] = true;

  const Nat limit = std::min(pf.a.limit(), pf.b.limit());
  std::vector<Nat> grid{Nat(0)};
  if (!limit.is_zero()) {
    auto g = geometric_grid(Nat(1), limit, a.ratio);
    grid.insert(grid.end(), g.begin(), g.end());
  }
  std::optional<BigInt> min_product, min_packing;
  for (const Nat& x : grid) {
    const auto r = pair_bounds_check(pf.a, pf.b, x);
    if (!min_product || r.product_margin < *min_product) min_product = r.product_margin;
    if (!min_packing || r.packing_margin < *min_packing) min_packing = r.packing_margin;
    if (!r.ok()) {
      report["violation"] = Json{{"x", x.to_string()}, {"inequality", r.violation()}};
      err << "violation at x=" << x << ": " << r.violation() << "\n";
      code = kExitViolation;
      break;
    }
  }
  report["checked_points"] = grid.size();
  report["min_product_margin"] = min_product->str();
  report["min_packing_margin"] = min_packing->str();

  if (pf.spec && limit + Nat(1) == pf.spec->top() && !pf.a.empty() && !pf.b.empty()) {
    const bool cover = sum_coverage(pf.a, pf.b, limit) == pf.spec->top() &&
                       pf.a.elems().back() + pf.b.elems().back() == limit;
    report["exact_cover"] = cover;
    if (cover) report["note"] = "every n in [0, P_n - 1] is a + b in exactly one way";
  }
  m.emit(dump(report), a.out, out);
  m.finish();
  return code;
}

struct ProfileArgs {
  std::string pair, spec, grid, csv, json, tail;
  unsigned workers = 1;
  bool allow_partial = false;
};

int cmd_profile(const ProfileArgs& a, std::ostream& out, std::ostream& err) {
  Manifest m{"profile"};
  m.parameters = Json{{"pair", a.pair}, {"spec", a.spec}, {"grid", a.grid}, {"tail", a.tail}};
  const PairSource src = load_source(a.pair, a.spec, m);
  if (a.grid.empty()) throw UsageError("--grid is required");
  auto grid = parse_grid(a.grid, src);
  if (grid.empty()) throw UsageError("empty grid");
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  const Nat limit = src.certified_limit();
  std::vector<Nat> kept;
  std::size_t skipped = 0;
  for (auto& x : grid) {
    if (x.is_zero()) continue;
    if (x > limit) {
      ++skipped;
      err << "uncertified grid point " << x << " (certified limit " << limit << ") skipped\n";
      continue;
    }
    kept.push_back(std::move(x));
  }
  if (kept.empty()) throw UsageError("no certified grid points");
  const auto prof = profile(src, kept, a.workers);
  m.emit(profile_csv(prof), a.csv, out);

  if (!a.json.empty()) {
    Json rows = Json::array();
    for (const auto& r : prof.rows) {
      rows.push_back(Json{{"x", r.x.to_string()},
                          {"countA", r.count_a.to_string()},
                          {"countB", r.count_b.to_string()},
                          {"product_ratio", to_json(r.product_ratio)},
                          {"in_ratio", format_fixed(r.in_ratio, kRealDecimals)}});
    }
    const Rational sp = sp_estimate(prof);
    Json j{{"grid", a.grid},
           {"certified_limit", limit.to_string()},
           {"skipped", skipped},
           {"sp_estimate", Json{{"value", to_json(sp)},
                                {"decimal", format_significant(sp, 12)},
                                {"direction", "lower estimate of a limsup"}}},
           {"rows", std::move(rows)}};
    if (!a.tail.empty()) {
      j["in_estimate"] = Json{{"tail_start", a.tail},
                              {"value", format_fixed(in_estimate(prof, Nat::parse(a.tail)), kRealDecimals)},
                              {"direction", "upper estimate of a liminf"}};
    }
    m.emit(dump(j), a.json, out);
  }
  m.finish();
  if (skipped > 0 && !a.allow_partial) return kExitUsage;
  return kExitOk;
}

struct ScanArgs {
  std::string pair, spec, at, c = "1/4,1/2,3/4,1,5/4,3/2,7/4", csv, json;
};

int cmd_scan(const ScanArgs& a, std::ostream& out, std::ostream&) {
  Manifest m{"scan"};
  m.parameters = Json{{"pair", a.pair}, {"spec", a.spec}, {"at", a.at}, {"c", a.c}};
  const PairSource src = load_source(a.pair, a.spec, m);
  if (a.at.empty()) throw UsageError("--at is required");
  std::vector<Rational> cs;
  for (const auto& tok : split(a.c, ',')) cs.push_back(parse_rational(tok));
  std::vector<AnchorScan> scans;
  for (const Nat& anchor : parse_nat_list(a.at)) scans.push_back(anchor_scan(src, anchor, cs));
  m.emit(scan_csv(scans), a.csv, out);
  if (!a.json.empty()) {
    Json arr = Json::array();
    for (const auto& s : scans) {
      arr.push_back(Json{{"anchor", s.anchor.to_string()},
                         {"anchor_ratio", to_json(s.anchor_row.product_ratio)},
                         {"half_a", to_json(s.half_a)},
                         {"half_b", to_json(s.half_b)}});
    }
    m.emit(dump(Json{{"anchors", std::move(arr)}}), a.json, out);
  }
  m.finish();
  return kExitOk;
}

struct FitArgs {
  std::string targets, out;
};

int cmd_fit(const FitArgs& a, std::ostream& out, std::ostream& err) {
  Manifest m{"fit"};
  m.parameters = Json{{"targets", a.targets}};
  const auto targets = parse_nat_list(a.targets);
  try {
    const FitResult fit = fit_moduli(targets);
    m.emit(dump(to_json(fit)), a.out, out);
  } catch (const InfeasibleTarget& e) {
    err << "fit: " << e.what() << "\n";
    return kExitUsage;
  }
  m.finish();
  return kExitOk;
}

struct SearchArgs {
  std::size_t n = 0;
  std::string objective = "product";
  std::string method = "bnb";
  unsigned workers = 1;
  unsigned split_depth = 3;
  std::size_t witness_limit = 16;
  bool no_canonical = false;
  bool stats = false;
  std::string out;
};

int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
  Manifest m{"search"};
  m.parameters = Json{{"n", a.n},         {"objective", a.objective},         {"method", a.method},
                      {"workers", a.workers}, {"split_depth", a.split_depth}, {"witness_limit", a.witness_limit},
                      {"canonical", !a.no_canonical}};
  SearchProblem p;
  p.n = a.n;
  p.objective = parse_objective(a.objective);
  p.options.workers = a.workers;
  p.options.split_depth = a.split_depth;
  p.options.witness_limit = a.witness_limit;
  p.options.canonicalize = !a.no_canonical;
  SearchResult r;
  if (a.method == "exhaustive") {
    r = exhaustive_search(p);
  } else if (a.method == "bnb") {
    r = branch_and_bound(p);
  } else {
    throw UsageError("unknown method '" + a.method + "' (bnb, exhaustive)");
  }
  for (const auto& w : r.witnesses) {
    const auto rep = pair_bounds_check(to_intset(w.a, p.n), to_intset(w.b, p.n), Nat(p.n));
    if (!rep.ok()) {
      err << "search produced an invalid witness: " << rep.violation() << "\n";
      return kExitViolation;
    }
  }
  m.extra = Json{{"nodes", r.stats.nodes},
                 {"bound_prunes", r.stats.bound_prunes},
                 {"conflict_prunes", r.stats.conflict_prunes},
                 {"subtrees", r.stats.subtrees}};
  m.emit(dump(to_json(p, r, a.stats)), a.out, out);
  m.finish();
  return kExitOk;
}

struct FrontierArgs {
  std::string families;
  std::string search;
  std::string objective = "min";
  std::string csv;
};

int cmd_frontier(const FrontierArgs& a, std::ostream& out, std::ostream& err) {
  Manifest m{"frontier"};
  m.parameters = Json{{"families", a.families}, {"search", a.search}, {"objective", a.objective}};
  if (a.families.empty() && a.search.empty()) throw UsageError("give --families and/or --search");
  std::vector<SpInPoint> points;
  for (const auto& fam : split(a.families, ',')) {
    if (fam == "pow2") {
      auto p = base_k_point(2);
      p.family = "pow2";
      points.push_back(p);
    } else if (fam.rfind("base-k:", 0) == 0) {
      const auto [lo, hi] = parse_range(fam.substr(7));
      if (lo < 2) throw UsageError("base-k needs k >= 2");
      for (auto k = lo; k <= hi; ++k) points.push_back(base_k_point(k));
    } else {
      throw UsageError("unknown family '" + fam + "' (pow2, base-k:LO..HI)");
    }
  }
  if (!a.search.empty()) {
    const auto [lo, hi] = parse_range(a.search);
    for (auto n = std::max<std::uint64_t>(lo, 1); n <= hi; ++n) {
      SearchProblem p;
      p.n = n;
      p.objective = parse_objective(a.objective);
      p.options.witness_limit = 1;
      const auto r = branch_and_bound(p);
      const auto& w = r.witnesses.front();
      points.push_back(finite_point("search-" + std::string(to_string(p.objective)) + "-n" + std::to_string(n),
                                    Nat(w.a.size()), Nat(w.b.size()), Nat(n)));
    }
  }
  int code = kExitOk;
  for (const auto& p : points) {
    if (p.provenance != Provenance::ClosedForm) continue;
    if (!refined_bound_check(p).holds || !simple_bound_check(p).holds) {
      err << "inequality violated for " << p.family << "\n";
      code = kExitViolation;
    }
  }
  m.emit(frontier_csv(frontier(points)), a.csv, out);
  m.finish();
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, verify, profile and search disjoint pairs of integer sets"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Write a disjoint pair as JSON");
  construct->add_option("--family", ca.family, "pow2 | base-k | mixed | witness")->required();
  construct->add_option("--k", ca.k, "base for base-k, index for witness");
  construct->add_option("--moduli", ca.moduli, "comma-separated moduli for mixed");
  construct->add_option("--seed-moduli", ca.seed_moduli, "seed moduli for witness (default 2,2)");
  construct->add_option("--limit", ca.limit, "enumeration limit (decimal)");
  construct->add_option("--out", ca.out, "output path (default stdout)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check disjointness and the finite bounds of a pair file");
  verify->add_option("--pair", va.pair, "pair JSON")->required();
  verify->add_option("--ratio", va.ratio, "geometric grid ratio");
  verify->add_option("--out", va.out, "report path (default stdout)");

  ProfileArgs pa;
  auto* prof = app.add_subcommand("profile", "Counting-function profile as CSV");
  prof->add_option("--pair", pa.pair, "pair JSON");
  prof->add_option("--spec", pa.spec, "spec JSON (digit-DP counting)");
  prof->add_option("--grid", pa.grid, "list:a,b | geometric:s:e[:r] | jump:lo:hi | witness:K");
  prof->add_option("--csv", pa.csv, "CSV path (default stdout)");
  prof->add_option("--json", pa.json, "JSON report path");
  prof->add_option("--tail", pa.tail, "tail start for the IN estimate");
  prof->add_option("--workers", pa.workers, "worker threads");
  prof->add_flag("--allow-partial", pa.allow_partial, "exit 0 even if grid points were skipped");

  ScanArgs sa;
  auto* scan = app.add_subcommand("scan", "Normalized ratios around anchor points");
  scan->add_option("--pair", sa.pair, "pair JSON");
  scan->add_option("--spec", sa.spec, "spec JSON");
  scan->add_option("--at", sa.at, "anchor points x_n, comma-separated");
  scan->add_option("--c", sa.c, "multipliers in (0,2), e.g. 1/2,3/2");
  scan->add_option("--csv", sa.csv, "CSV path (default stdout)");
  scan->add_option("--json", sa.json, "JSON path for half-point ratios");

  FitArgs fa;
  auto* fit = app.add_subcommand("fit", "Fit moduli so every target lands in a ratio window");
  fit->add_option("--targets", fa.targets, "ascending targets, comma-separated")->required();
  fit->add_option("--out", fa.out, "output path (default stdout)");

  SearchArgs xa;
  auto* search = app.add_subcommand("search", "Extremal disjoint pairs inside [0, n]");
  search->add_option("--n", xa.n, "universe [0, n]")->required();
  search->add_option("--objective", xa.objective, "product | min | sum");
  search->add_option("--method", xa.method, "bnb | exhaustive");
  search->add_option("--workers", xa.workers, "worker threads");
  search->add_option("--split-depth", xa.split_depth, "parallel split depth");
  search->add_option("--witness-limit", xa.witness_limit, "optimal witnesses to keep");
  search->add_flag("--no-canonical", xa.no_canonical, "exhaustive over the raw pair space");
  search->add_flag("--stats", xa.stats, "include node statistics in the result");
  search->add_option("--out", xa.out, "output path (default stdout)");

  FrontierArgs ra;
  auto* front = app.add_subcommand("frontier", "(2-SP, IN) points as CSV");
  front->add_option("--families", ra.families, "pow2, base-k:LO..HI (comma-separated)");
  front->add_option("--search", ra.search, "n range LO..HI of searched finite points");
  front->add_option("--objective", ra.objective, "objective for searched points");
  front->add_option("--csv", ra.csv, "CSV path (default stdout)");

  std::vector<const char*> argv{"disjoint"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(ca, out, err);
    if (*verify) return cmd_verify(va, out, err);
    if (*prof) return cmd_profile(pa, out, err);
    if (*scan) return cmd_scan(sa, out, err);
    if (*fit) return cmd_fit(fa, out, err);
    if (*search) return cmd_search(xa, out, err);
    if (*front) return cmd_frontier(ra, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace disjoint::cli
