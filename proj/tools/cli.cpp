#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <limits>
#include <mutex>
#include <random>
#include <sstream>

#include "bchcov/charsum.hpp"
#include "bchcov/codes.hpp"
#include "bchcov/construct.hpp"
#include "bchcov/cover.hpp"
#include "bchcov/error.hpp"
#include "bchcov/json_io.hpp"

namespace bchcov::cli {

namespace {

using Clock = std::chrono::steady_clock;

// Flags shared by the subcommands.
struct Options {
  int m = 0;
  std::string modulus;
  int r = 0;
  int k = 0;
  int t = -1;
  int n = 0;
  int d = 0;
  std::string targets;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::string format = "json";
  bool timing = false;

  bool no_symmetry = false;
  std::string targets_from;
  std::string recheck;
  std::string order = "sequential";
  std::uint64_t random = 0;
  std::string family = "hamming";
  std::string code_file;
  bool generic = false;
  std::string lemma;
  std::string mode = "exhaustive";
  std::uint64_t trials = 10000;
  std::string poly;
  std::uint64_t families = 200;
  int terms = 0;
  std::string triple;
  std::uint64_t progress_interval = 1000;
};

struct Run {
  std::ostream& out;
  std::ostream& err;
  std::string command_line;
  Options opt;
  Clock::time_point start = Clock::now();
  bool seeded = false;

  FieldSpec field() const {
    std::optional<std::uint64_t> mod;
    if (!opt.modulus.empty()) mod = parse_hex(opt.modulus);
    return FieldSpec::make(opt.m, mod);
  }

  Json manifest(const std::optional<FieldSpec>& f, Json counters = Json::object()) const {
    Json man{{"command", command_line}};
    man["field"] = f ? to_json(*f) : Json(nullptr);
    man["seed"] = seeded ? Json(opt.seed) : Json(nullptr);
    man["counters"] = std::move(counters);
    man["version"] = kVersion;
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    if (opt.timing) {
      man["wall_time_ms"] = ms;
    } else {
      err << "wall time: " << ms << " ms\n";
    }
    return man;
  }

  void emit(const Json& j) const { out << j.dump(2) << "\n"; }

  ProgressFn progress(const char* what) const {
    auto lock = std::make_shared<std::mutex>();
    std::ostream* e = &err;
    return [lock, e, what](std::uint64_t done, std::uint64_t total) {
      std::lock_guard<std::mutex> g(*lock);
      *e << what << ": " << done << "/" << total << "\n";
    };
  }
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::vector<SyndromePair> parse_targets(const FieldSpec& f, const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.empty() || parts.size() % 2 != 0) {
    throw PreconditionError("--targets needs an even, nonzero number of hex values a1,b1,a2,b2,...");
  }
  std::vector<SyndromePair> out;
  for (std::size_t i = 0; i < parts.size(); i += 2) {
    out.push_back({parse_felt(f, parts[i]), parse_felt(f, parts[i + 1])});
  }
  return out;
}

Json pairs_json(std::span<const SyndromePair> ps) {
  Json arr = Json::array();
  for (const auto& p : ps) arr.push_back(pair_to_json(p));
  return arr;
}

Json big_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return Json(v.convert_to<std::uint64_t>());
  return Json(v.str());
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(path + ": " + e.what());
  }
}

void require_json(const Run& run, const char* cmd) {
  if (run.opt.format != "json") {
    throw PreconditionError(std::string(cmd) + ": only --format json is supported");
  }
}

int cmd_field(Run& run) {
  require_json(run, "field");
  const FieldSpec f = run.field();
  Json j = to_json(f);
  j["size"] = f.size();
  j["manifest"] = run.manifest(f);
  run.emit(j);
  return 0;
}

int cmd_ghw(Run& run) {
  require_json(run, "ghw");
  std::optional<BinaryCode> code;
  std::optional<FieldSpec> f;
  if (!run.opt.code_file.empty()) {
    code = code_from_json(read_json_file(run.opt.code_file));
  } else if (run.opt.family == "hamming") {
    code = hamming_code(run.opt.m);
  } else if (run.opt.family == "bch1" || run.opt.family == "bch2") {
    f = run.field();
    code = bch_code(*f, run.opt.family == "bch1" ? 1 : 2);
  } else {
    throw PreconditionError("ghw: unknown --family " + run.opt.family);
  }
  Json j{{"family", run.opt.code_file.empty() ? run.opt.family : "file"}, {"code", to_json(*code)}};
  const int k = static_cast<int>(code->k());
  bool match = true;
  std::optional<HammingGhwSequence> seq;
  if (run.opt.code_file.empty() && run.opt.family == "hamming") seq = hamming_ghw_sequence(run.opt.m);
  if (run.opt.r > 0) {
    const int value = ghw(*code, run.opt.r);
    j["r"] = run.opt.r;
    j["ghw"] = value;
    if (seq) {
      j["closed_form"] = seq->at(static_cast<std::uint64_t>(run.opt.r));
      match = seq->at(static_cast<std::uint64_t>(run.opt.r)) == static_cast<std::uint64_t>(value);
    }
  } else {
    // Whole hierarchy; orders beyond the work limit are reported as null.
    Json computed = Json::array();
    for (int r = 1; r <= k; ++r) {
      if (packed::gaussian_binomial(k, r) > 1e7) {
        computed.push_back(nullptr);
        continue;
      }
      const int value = ghw(*code, r);
      computed.push_back(value);
      if (seq) match = match && seq->at(static_cast<std::uint64_t>(r)) == static_cast<std::uint64_t>(value);
    }
    j["hierarchy"] = computed;
    if (seq && run.opt.m <= 12) j["closed_form"] = seq->to_vector();
  }
  if (seq) j["matches_closed_form"] = match;
  j["manifest"] = run.manifest(f);
  run.emit(j);
  return match ? 0 : 1;
}

int cmd_gcr(Run& run) {
  require_json(run, "gcr");
  const FieldSpec f = run.field();
  SearchOptions so;
  so.symmetry = !run.opt.no_symmetry;
  so.jobs = run.opt.jobs;
  so.progress = run.progress("gcr");
  so.progress_interval = run.opt.progress_interval;
  const GcrResult g = gcr_exact(build_columns(f), run.opt.r, so);
  Json j{{"rho", g.rho},
         {"m", g.m},
         {"r", g.r},
         {"symmetry", g.symmetry},
         {"witness_targets", pairs_json(g.witness_targets)},
         {"witness_cover", g.witness_cover}};
  j["manifest"] = run.manifest(f, Json{{"orbits_visited", g.orbits_visited},
                                       {"enumerated", g.enumerated},
                                       {"search_nodes", g.search_nodes}});
  run.emit(j);
  return 0;
}

int cmd_dcc(Run& run) {
  require_json(run, "dcc");
  const FieldSpec f = run.field();
  SearchOptions so;
  so.jobs = run.opt.jobs;
  so.progress = run.progress("dcc");
  so.progress_interval = run.opt.progress_interval;
  const DccResult d = d_cc(build_columns(f), run.opt.r, so);
  Json alphas = Json::array();
  for (const auto a : d.witness_alphas) alphas.push_back(to_hex(a));
  Json j{{"d_cc", d.value},
         {"m", f.m()},
         {"r", run.opt.r},
         {"witness_alphas", alphas},
         {"witness_cover", d.witness_cover}};
  int status = 0;
  if (run.opt.generic) {
    const int g = d_cc_generic(bch_code(f, 2), bch_code(f, 1), run.opt.r);
    j["generic"] = g;
    status = g == d.value ? 0 : 1;
  }
  j["manifest"] = run.manifest(f, Json{{"orbits_visited", d.orbits_visited}});
  run.emit(j);
  return status;
}

int cmd_certify(Run& run) {
  require_json(run, "certify");
  if (!run.opt.recheck.empty()) {
    const CoverCertificate cert = certificate_from_json(read_json_file(run.opt.recheck));
    const bool ok = recheck(cert);
    Json j{{"recheck", run.opt.recheck}, {"verdict", to_string(cert.verdict)}, {"valid", ok}};
    j["manifest"] = run.manifest(cert.field, Json{{"subsets_checked", cert.subsets_checked}});
    run.emit(j);
    return ok ? 0 : 1;
  }
  const FieldSpec f = run.field();
  if (run.opt.t < 0) throw PreconditionError("certify: --t is required");
  std::vector<SyndromePair> targets;
  if (!run.opt.targets.empty()) {
    targets = parse_targets(f, run.opt.targets);
  } else if (run.opt.targets_from == "noncube-triple") {
    const auto tri = find_noncube_triple(f);
    if (!tri) throw PreconditionError("certify: no non-cube triple found");
    for (const Felt a : {tri->alpha1, tri->alpha2, tri->alpha3}) targets.push_back({Felt{}, a});
  } else if (run.opt.targets_from == "basis") {
    for (int i = 0; i < f.m(); ++i) targets.push_back({Felt{}, f.element(std::uint64_t{1} << i)});
  } else {
    throw PreconditionError("certify: give --targets or --targets-from noncube-triple|basis");
  }
  const CoverCertificate cert = certify_no_cover(build_columns(f), targets, run.opt.t);
  Json j = to_json(cert);
  j["manifest"] = run.manifest(f, Json{{"subsets_checked", cert.subsets_checked}});
  run.emit(j);
  return 0;
}

int cmd_cover(Run& run) {
  require_json(run, "cover");
  const FieldSpec f = run.field();
  const ScanOrder order = run.opt.order == "randomized" ? ScanOrder::kRandomized : ScanOrder::kSequential;
  if (run.opt.order != "sequential" && run.opt.order != "randomized") {
    throw PreconditionError("cover: --order must be sequential or randomized");
  }
  run.seeded = order == ScanOrder::kRandomized || run.opt.random > 0;
  if (run.opt.random > 0) {
    if (run.opt.k < 1) throw PreconditionError("cover --random needs --k >= 1");
    std::mt19937_64 rng(run.opt.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, f.size() - 1);
    std::uint64_t successes = 0, verified = 0, scanned = 0;
    std::size_t max_columns = 0;
    for (std::uint64_t i = 0; i < run.opt.random; ++i) {
      std::vector<SyndromePair> targets;
      for (int j = 0; j < run.opt.k; ++j) {
        const Felt a = f.element(pick(rng));
        targets.push_back({a, f.element(pick(rng))});
      }
      const auto sol = cover_2kplus1(f, targets, order, rng());
      if (!sol) continue;
      ++successes;
      scanned += sol->candidates_scanned;
      max_columns = std::max(max_columns, sol->columns.size());
      if (verify_solution(f, targets, *sol)) ++verified;
    }
    const bool pass = successes == run.opt.random && verified == successes &&
                      max_columns <= static_cast<std::size_t>(2 * run.opt.k + 1);
    Json j{{"k", run.opt.k},       {"m", f.m()},           {"tuples", run.opt.random},
           {"successes", successes}, {"verified", verified}, {"max_columns", max_columns},
           {"pass", pass}};
    j["manifest"] = run.manifest(f, Json{{"candidates_scanned", scanned}});
    run.emit(j);
    return pass ? 0 : 1;
  }
  const auto targets = parse_targets(f, run.opt.targets);
  const auto sol = cover_2kplus1(f, targets, order, run.opt.seed);
  Json j;
  bool ok = false;
  if (sol) {
    ok = verify_solution(f, targets, *sol);
    j = to_json(*sol, ok);
  } else {
    j = Json{{"x", nullptr}, {"verified", false}};
  }
  j["targets"] = pairs_json(targets);
  j["manifest"] = run.manifest(f, Json{{"candidates_scanned", sol ? sol->candidates_scanned : 0}});
  run.emit(j);
  return ok ? 0 : 1;
}

int cmd_count(Run& run) {
  require_json(run, "count");
  const FieldSpec f = run.field();
  const auto targets = parse_targets(f, run.opt.targets);
  const BigInt n = count_solutions(f, targets);
  const int k = static_cast<int>(targets.size());
  Json j{{"N", big_json(n)},
         {"k", k},
         {"m", f.m()},
         {"lower_bound", count_lower_bound(k, f.m())},
         {"meets_lower_bound", meets_count_lower_bound(n, k, f.m())}};
  if (k >= 2) j["threshold_m"] = threshold_upper(k);
  j["manifest"] = run.manifest(f);
  run.emit(j);
  return 0;
}

std::string describe_terms(std::span<const RationalTerm> terms) {
  std::string s;
  for (const auto& t : terms) {
    if (!s.empty()) s += ";";
    s += "(" + to_hex(t.a) + "," + to_hex(t.b) + ")";
  }
  return "f_I[" + s + "]";
}

int cmd_charsum(Run& run, const std::string& which) {
  const FieldSpec f = run.field();
  const bool csv = run.opt.format == "csv";
  if (!csv && run.opt.format != "json") throw PreconditionError("--format must be json or csv");
  std::vector<CharSumReport> rows;
  std::uint64_t degenerate = 0;
  if (which == "weil") {
    std::vector<NamedPoly> polys;
    if (!run.opt.poly.empty()) {
      polys.push_back({run.opt.poly, parse_hex(run.opt.poly)});
    } else {
      polys = weil_corpus();
    }
    for (const auto& p : polys) {
      FieldPoly fp = fpoly::from_binary(p.mask);
      if (!run.opt.poly.empty() || !fpoly::is_cube(f, fp)) {
        rows.push_back(weil_check(f, fp, p.name));
      }
    }
  } else {
    run.seeded = true;
    std::mt19937_64 rng(run.opt.seed);
    std::uniform_int_distribution<int> size_pick(1, 6);
    while (rows.size() < run.opt.families) {
      const int count = run.opt.terms > 0 ? run.opt.terms : size_pick(rng);
      const auto terms = random_terms(f, static_cast<std::size_t>(count), rng);
      if (rational_is_psi_trivial(f, terms)) {
        ++degenerate;
        continue;
      }
      auto rep = cochrane_check(f, terms);
      rep.family = describe_terms(terms);
      rows.push_back(std::move(rep));
    }
  }
  const auto passed = static_cast<std::uint64_t>(
      std::count_if(rows.begin(), rows.end(), [](const CharSumReport& r) { return r.pass; }));
  const bool pass = passed == rows.size();
  if (csv) {
    run.out << "m,family,squared_magnitude,bound_squared,pass\n";
    for (const auto& r : rows) {
      run.out << r.m << ",\"" << r.family << "\"," << r.squared_magnitude << "," << r.bound_squared
              << "," << (r.pass ? "true" : "false") << "\n";
    }
    (void)run.manifest(f);
  } else {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    Json j{{"kind", which}, {"m", f.m()}, {"rows", arr}, {"passed", passed}, {"total", rows.size()},
           {"pass", pass}};
    if (which == "cochrane") j["degenerate_skipped"] = degenerate;
    j["manifest"] = run.manifest(f, Json{{"families", rows.size()}});
    run.emit(j);
  }
  return pass ? 0 : 1;
}

CheckMode parse_mode(const std::string& s) {
  if (s == "exhaustive") return CheckMode::kExhaustive;
  if (s == "random") return CheckMode::kRandom;
  throw PreconditionError("--mode must be exhaustive or random");
}

Json identity_json(const IdentityReport& rep) {
  return Json{{"holds", rep.holds}, {"cases", rep.cases}, {"skipped", rep.skipped}};
}

int cmd_verify(Run& run) {
  require_json(run, "verify");
  const std::string& lemma = run.opt.lemma;
  Json j{{"lemma", lemma}};
  bool holds = true;
  std::optional<FieldSpec> f;

  if (lemma == "counting" || lemma == "threshold") {
    if (lemma == "threshold") {
      j["k"] = run.opt.k;
      j["threshold_m"] = threshold_upper(run.opt.k);
      if (run.opt.m > 0) {
        const BoundReport b = threshold_report(run.opt.k, run.opt.m);
        j["report"] = to_json(b);
        holds = b.hypothesis_holds;
      }
    } else {
      const BoundReport b = counting_bound(run.opt.k, run.opt.m);
      j["report"] = to_json(b);
      holds = b.hypothesis_holds;
    }
    j["holds"] = holds;
    j["manifest"] = run.manifest(f);
    run.emit(j);
    return holds ? 0 : 1;
  }

  f = run.field();
  j["m"] = f->m();
  const CheckMode mode = parse_mode(run.opt.mode);
  j["mode"] = run.opt.mode;
  if (mode == CheckMode::kRandom) run.seeded = true;
  if (lemma == "y1y2y3" || lemma == "cube" || lemma == "beta4") {
    IdentityReport rep;
    if (lemma == "y1y2y3") rep = verify_y1y2y3(*f, mode, run.opt.trials, run.opt.seed);
    if (lemma == "cube") rep = verify_cube_lemma(*f, mode, run.opt.trials, run.opt.seed);
    if (lemma == "beta4") rep = verify_beta4(*f, mode, run.opt.trials, run.opt.seed);
    j.update(identity_json(rep));
    holds = rep.holds;
  } else if (lemma == "noncube") {
    if (!run.opt.triple.empty()) {
      const auto parts = split(run.opt.triple, ',');
      if (parts.size() != 3) throw PreconditionError("--triple needs three hex values");
      const Felt a1 = parse_felt(*f, parts[0]);
      const Felt a2 = parse_felt(*f, parts[1]);
      const Felt a3 = parse_felt(*f, parts[2]);
      const Felt product = span_product(*f, a1, a2, a3);
      holds = is_noncube_triple(*f, a1, a2, a3);
      j["triple"] = {to_hex(a1), to_hex(a2), to_hex(a3)};
      j["A"] = to_hex(product);
      j["is_cube"] = product.is_zero() ? Json(nullptr) : Json(f->is_cube(product));
    } else {
      const auto tri = find_noncube_triple(*f);
      holds = tri.has_value();
      if (tri) {
        j["triple"] = {to_hex(tri->alpha1), to_hex(tri->alpha2), to_hex(tri->alpha3)};
        j["x0"] = to_hex(*tri->x0);
        j["A"] = to_hex(tri->product);
      }
    }
  } else if (lemma == "quadratic") {
    std::uint64_t cases = 0;
    auto check = [&](Felt a, Felt b) {
      const auto roots = f->solve_quadratic(a, b);
      const bool solvable = f->trace(f->div(b, f->frobenius(a))) == 0;
      bool ok = roots.size() == (solvable ? 2u : 0u);
      for (const Felt x : roots) ok = ok && (f->frobenius(x) + f->mul(a, x) + b).is_zero();
      holds = holds && ok;
      ++cases;
    };
    if (mode == CheckMode::kExhaustive) {
      if (f->m() > 10) throw PreconditionError("exhaustive quadratic check requires m <= 10");
      for (std::uint64_t a = 1; a < f->size(); ++a) {
        for (std::uint64_t b = 0; b < f->size(); ++b) check(f->element(a), f->element(b));
      }
    } else {
      std::mt19937_64 rng(run.opt.seed);
      std::uniform_int_distribution<std::uint64_t> pick(1, f->size() - 1);
      for (std::uint64_t i = 0; i < run.opt.trials; ++i) {
        const Felt a = f->element(pick(rng));
        check(a, f->element(pick(rng) - 1));
      }
    }
    j["holds"] = holds;
    j["cases"] = cases;
  } else if (lemma == "supercode") {
    const int r = run.opt.r;
    const ColumnSystem cs = build_columns(*f);
    const CoverEngine engine(cs);
    SearchOptions so;
    so.jobs = run.opt.jobs;
    const int rho = gcr_exact(engine, r, so).rho;
    const int dcc = d_cc(engine, r, so).value;
    const int generic = d_cc_generic(bch_code(*f, 2), bch_code(*f, 1), r);
    const auto hamming = hamming_ghw_sequence(f->m()).at(static_cast<std::uint64_t>(r));
    holds = rho >= dcc && dcc >= static_cast<int>(hamming) && dcc == generic;
    j["r"] = r;
    j["gcr"] = rho;
    j["d_cc"] = dcc;
    j["d_cc_generic"] = generic;
    j["hamming_ghw"] = hamming;
  } else {
    throw PreconditionError(
        "verify: unknown --lemma '" + lemma +
        "' (y1y2y3|cube|beta4|noncube|quadratic|supercode|counting|threshold)");
  }
  j["holds"] = holds;
  j["manifest"] = run.manifest(f);
  run.emit(j);
  return holds ? 0 : 1;
}

int cmd_classify(Run& run) {
  require_json(run, "classify");
  const Classification c = classify_small(run.opt.n, run.opt.k, run.opt.d);
  for (const auto& cls : c.classes) {
    Json line{{"n", c.n}, {"k", c.k}, {"min_distance", cls.min_distance},
              {"class_size", cls.class_size}, {"representative", to_json(cls.representative)}};
    run.out << line.dump() << "\n";
  }
  Json summary{{"n", c.n}, {"k", c.k}, {"d", c.d}, {"classes", c.classes.size()}};
  summary["manifest"] = run.manifest(std::nullopt, Json{{"codes_enumerated", c.codes_enumerated},
                                                        {"codes_matching", c.codes_matching}});
  run.out << Json{{"summary", summary}}.dump() << "\n";
  return 0;
}

void add_field(CLI::App* sub, Options& o, bool required = true) {
  auto* m = sub->add_option("--m", o.m, "extension degree of GF(2^m)");
  if (required) m->required();
  sub->add_option("--modulus", o.modulus, "modulus override, hex (default: built-in primitive)");
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--seed", o.seed, "seed for randomized modes");
  sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  sub->add_option("--format", o.format, "json or csv");
  sub->add_flag("--timing", o.timing, "put wall time into the manifest instead of stderr");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"bchcov: covering radii and character sums for double-error-correcting BCH codes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  Options o;

  auto* field = app.add_subcommand("field", "describe GF(2^m)");
  add_field(field, o);
  add_common(field, o);

  auto* ghw_cmd = app.add_subcommand("ghw", "generalized Hamming weights");
  add_field(ghw_cmd, o);
  ghw_cmd->add_option("--r", o.r, "order (default: whole hierarchy within the work limit)");
  ghw_cmd->add_option("--family", o.family, "hamming (redundancy m) | bch1 | bch2");
  ghw_cmd->add_option("--code", o.code_file, "code JSON {n,k,gen}");
  add_common(ghw_cmd, o);

  auto* gcr = app.add_subcommand("gcr", "exact r-th generalized covering radius of BCH(2,m)");
  add_field(gcr, o);
  gcr->add_option("--r", o.r)->required();
  gcr->add_flag("--no-symmetry", o.no_symmetry, "enumerate every tuple, no orbit reduction");
  gcr->add_option("--progress-interval", o.progress_interval);
  add_common(gcr, o);

  auto* dcc = app.add_subcommand("dcc", "d_r(BCH(2,m), BCH(1,m))");
  add_field(dcc, o);
  dcc->add_option("--r", o.r)->required();
  dcc->add_flag("--generic", o.generic, "cross-check against the direct code-level evaluation");
  dcc->add_option("--progress-interval", o.progress_interval);
  add_common(dcc, o);

  auto* certify = app.add_subcommand("certify", "no-cover certificates");
  add_field(certify, o, false);
  certify->add_option("--t", o.t);
  certify->add_option("--targets", o.targets, "a1,b1,a2,b2,... (hex)");
  certify->add_option("--targets-from", o.targets_from, "noncube-triple | basis");
  certify->add_option("--recheck", o.recheck, "certificate JSON to re-verify");
  add_common(certify, o);

  auto* cover = app.add_subcommand("cover", "explicit cover with at most 2k+1 columns");
  add_field(cover, o);
  cover->add_option("--targets", o.targets, "a1,b1,a2,b2,... (hex)");
  cover->add_option("--order", o.order, "sequential | randomized");
  cover->add_option("--random", o.random, "run on N random target tuples instead");
  cover->add_option("--k", o.k, "tuple size for --random");
  add_common(cover, o);

  auto* count = app.add_subcommand("count", "number of solution tuples N");
  add_field(count, o);
  count->add_option("--targets", o.targets, "a1,b1,a2,b2,... (hex)")->required();
  add_common(count, o);

  auto* charsum = app.add_subcommand("charsum", "character-sum bound checks");
  charsum->require_subcommand(1);
  auto* weil = charsum->add_subcommand("weil", "order-3 multiplicative sums");
  add_field(weil, o);
  weil->add_option("--poly", o.poly, "GF(2) polynomial as hex mask (default: built-in corpus)");
  add_common(weil, o);
  auto* cochrane = charsum->add_subcommand("cochrane", "additive sums of rational f_I");
  add_field(cochrane, o);
  cochrane->add_option("--families", o.families, "number of random families");
  cochrane->add_option("--terms", o.terms, "terms per family (default: random 1..6)")
      ->check(CLI::Range(0, 6));
  add_common(cochrane, o);

  auto* verify = app.add_subcommand("verify", "lemma checks");
  verify->add_option("--lemma", o.lemma,
                     "y1y2y3|cube|beta4|noncube|quadratic|supercode|counting|threshold")
      ->required();
  add_field(verify, o, false);
  verify->add_option("--mode", o.mode, "exhaustive | random");
  verify->add_option("--trials", o.trials);
  verify->add_option("--r", o.r);
  verify->add_option("--k", o.k);
  verify->add_option("--triple", o.triple, "a1,a2,a3 (hex), for --lemma noncube");
  add_common(verify, o);

  auto* classify = app.add_subcommand("classify", "classes of [n,k,>=d] codes");
  classify->add_option("--n", o.n)->required();
  classify->add_option("--k", o.k)->required();
  classify->add_option("--d", o.d)->required();
  add_common(classify, o);

  if (!args.empty() && !args[0].empty() && args[0][0] != '-' && app.get_subcommand_no_throw(args[0]) == nullptr) {
    err << "error: unknown command '" << args[0] << "'\n";
    return 2;
  }

  std::string line;
  for (const auto& a : args) line += (line.empty() ? "" : " ") + a;
  Run run{out, err, line, {}};

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    err << "error: " << msg.substr(0, msg.find('\n')) << "\n";
    return 2;
  }
  run.opt = o;

  try {
    if (field->parsed()) return cmd_field(run);
    if (ghw_cmd->parsed()) return cmd_ghw(run);
    if (gcr->parsed()) return cmd_gcr(run);
    if (dcc->parsed()) return cmd_dcc(run);
    if (certify->parsed()) return cmd_certify(run);
    if (cover->parsed()) return cmd_cover(run);
    if (count->parsed()) return cmd_count(run);
    if (weil->parsed()) return cmd_charsum(run, "weil");
    if (cochrane->parsed()) return cmd_charsum(run, "cochrane");
    if (verify->parsed()) return cmd_verify(run);
    if (classify->parsed()) return cmd_classify(run);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace bchcov::cli
