#include "ajt/cli.hpp"

#include <bit>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "ajt/errors.hpp"
#include "ajt/group_ring.hpp"
#include "ajt/poly.hpp"

namespace ajt {

using nlohmann::json;

namespace {

std::uint64_t as_u64(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  const auto v = j.get<std::int64_t>();
  if (v < 0) throw InputError(std::string(what) + " must be nonnegative");
  return static_cast<std::uint64_t>(v);
}

std::vector<std::uint64_t> residue_list(const json& j, Prime p, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<std::uint64_t> out;
  for (const auto& x : j) {
    const auto v = as_u64(x, what);
    if (v >= p.value()) throw InputError(std::string(what) + " entry out of range");
    out.push_back(v);
  }
  return out;
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

FpMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("n") || !j.contains("rows"))
    throw InputError("matrix needs p, n and rows");
  const Prime p(as_u64(j["p"], "p"));
  const auto n = as_u64(j["n"], "n");
  if (n == 0) throw InputError("n must be positive");
  const auto& rows = j["rows"];
  if (!rows.is_array() || rows.size() != n) throw InputError("matrix needs n rows");
  std::vector<std::uint64_t> flat;
  for (const auto& row : rows) {
    const auto r = residue_list(row, p, "matrix");
    if (r.size() != n) throw InputError("matrix rows need n entries");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return FpMatrix(p, n, std::move(flat));
}

ResidueSet set_from_json(const json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("elements"))
    throw InputError("set needs p and elements");
  const Prime p(as_u64(j["p"], "p"));
  std::vector<std::int64_t> elems;
  for (auto v : residue_list(j["elements"], p, "elements")) elems.push_back(static_cast<std::int64_t>(v));
  return ResidueSet(p, elems);
}

json set_json(const ResidueSet& s) {
  return {{"p", s.prime().value()}, {"elements", s.elements()}};
}

ForbiddenSpec forbidden_from_json(const json& j) {
  if (!j.is_object() || !j.contains("c") || !j.contains("d"))
    throw InputError("forbidden spec needs c and d");
  ForbiddenSpec s;
  for (const auto* key : {"c", "d"}) {
    const auto& lists = j[key];
    if (!lists.is_array()) throw InputError(std::string(key) + " must be an array of arrays");
    auto& target = std::string(key) == "c" ? s.c : s.d;
    for (const auto& l : lists) {
      if (!l.is_array()) throw InputError(std::string(key) + " must be an array of arrays");
      std::vector<std::uint64_t> row;
      for (const auto& x : l) row.push_back(as_u64(x, key));
      target.push_back(row);
    }
  }
  return s;
}

namespace {

std::string cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  }
  return s;
}

std::vector<std::vector<std::string>> cells(const json& report, const std::string& key,
                                            const std::vector<std::string>& columns) {
  std::vector<std::vector<std::string>> out;
  if (key.empty()) {
    out.push_back({"key", "value"});
    for (const auto& [k, v] : report.items())
      if (!v.is_structured()) out.push_back({k, cell(v)});
    return out;
  }
  const auto& rows = report.at(key);
  std::vector<std::string> cols = columns;
  if (cols.empty() && !rows.empty())
    for (const auto& [k, v] : rows.front().items()) cols.push_back(k);
  out.push_back(cols);
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (const auto& c : cols) line.push_back(row.contains(c) ? cell(row[c]) : "");
    out.push_back(line);
  }
  return out;
}

}  // namespace

std::string render_csv(const json& report, const std::string& key,
                       const std::vector<std::string>& columns) {
  std::string out;
  for (const auto& line : cells(report, key, columns)) {
    for (std::size_t i = 0; i < line.size(); ++i) out += (i ? "," : "") + line[i];
    out += "\n";
  }
  return out;
}

std::string render_table(const json& report, const std::string& key,
                         const std::vector<std::string>& columns) {
  const auto rows = cells(report, key, columns);
  std::vector<std::size_t> width;
  for (const auto& line : rows)
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], line[i].size());
    }
  std::string out;
  for (const auto& line : rows) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) {
      text += line[i];
      if (i + 1 < line.size()) text += std::string(width[i] - line[i].size() + 2, ' ');
    }
    out += text + "\n";
  }
  return out;
}

namespace {

struct Result {
  json report;
  int code = kExitOk;
  std::string rows_key;
  std::vector<std::string> columns;
};

struct Common {
  std::string format = "json";
  std::string output;
  std::string budget;
  unsigned threads = 1;
};

Budget resolve_budget(const std::string& text) {
  Budget b = Budget::from_env();
  if (text == "high") {
    b.max_nodes = UINT64_MAX;
    return b;
  }
  return text.empty() ? b : Budget::parse(text, b);
}

// Matrix from --matrix FILE, or a seeded random one at (p, n).
struct MatrixSource {
  std::string file;
  bool random = false;
  std::uint64_t p = 5;
  std::size_t n = 2;
  std::uint64_t seed = 1;

  void add(CLI::App* cmd) {
    cmd->add_option("--matrix", file, "matrix JSON file");
    cmd->add_flag("--random", random, "draw a random nonsingular matrix");
    cmd->add_option("--p", p, "prime");
    cmd->add_option("--n", n, "dimension");
    cmd->add_option("--seed", seed, "RNG seed");
  }
  FpMatrix get(Rng& rng, json& report) const {
    if (!file.empty() == random) throw InputError("give exactly one of --matrix and --random");
    if (!file.empty()) return matrix_from_json(read_json_file(file));
    if (n == 0) throw InputError("n must be positive");
    report["seed"] = seed;
    report["rng"] = Rng::kName;
    return random_nonsingular(Prime(p), n, rng);
  }
};

std::vector<unsigned> exponent_list(const std::vector<unsigned>& given, std::size_t n) {
  if (given.empty()) return std::vector<unsigned>(n, 1);
  if (given.size() != n) throw InputError("exponent list needs n entries");
  return given;
}

std::uint64_t s1_bound(std::uint64_t p) { return 2 * (std::bit_width(p) - 1); }

json witness_json(const ApWitness& w) {
  return {{"element", w.element}, {"step", w.step}, {"radius", w.radius}};
}

Result appendix_verify(const std::string& table) {
  const auto rows = table.empty() ? appendix_rows() : [&] {
    std::ifstream in(table);
    if (!in) throw InputError("cannot open " + table);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_appendix(ss.str());
  }();
  const auto rep = verify_appendix(rows);
  Result r;
  json list = json::array();
  for (const auto& row : rep.rows)
    list.push_back({{"p", row.p},
                    {"stated_size", row.stated_size},
                    {"actual_size", row.actual_size},
                    {"s1_type", row.s1_type},
                    {"size_matches", row.size_matches},
                    {"square_below", row.square_below},
                    {"pass", row.pass()}});
  r.report = {{"rows", list}, {"primes_match", rep.primes_match}, {"pass", rep.pass()}};
  r.code = rep.pass() ? kExitOk : kExitViolation;
  r.rows_key = "rows";
  r.columns = {"p", "stated_size", "actual_size", "s1_type", "size_matches", "square_below", "pass"};
  return r;
}

Result s1(std::uint64_t pv, const std::string& mode, const std::string& set_file,
          const Budget& budget, unsigned threads) {
  Result r;
  if (mode == "check") {
    if (set_file.empty()) throw InputError("--mode check needs --set");
    const auto a = set_from_json(read_json_file(set_file));
    const auto c = is_sk_type(a, 1);
    r.report = {{"p", a.prime().value()}, {"mode", mode}, {"size", a.size()},
                {"s1_type", c.ok()},
                {"failing_element", c.failing_element ? json(*c.failing_element) : json()}};
    r.code = c.ok() ? kExitOk : kExitViolation;
    return r;
  }
  const Prime p(pv);
  if (pv < 5) throw PreconditionViolated("s1 needs p >= 5");
  if (mode == "build") {
    const auto a = build_s1_log(p);
    const auto c = is_sk_type(a, 1);
    json ws = json::array();
    for (const auto& w : c.witnesses) ws.push_back(witness_json(w));
    r.report = {{"p", pv},           {"mode", mode},
                {"size", a.size()},  {"elements", a.elements()},
                {"s1_type", c.ok()}, {"bound", s1_bound(pv)},
                {"within_bound", a.size() <= s1_bound(pv)}, {"witnesses", ws}};
    r.code = c.ok() ? kExitOk : kExitViolation;
    r.rows_key = "witnesses";
    return r;
  }
  if (mode == "min") {
    const auto res = min_s1_search(p, budget, threads);
    r.report = {{"p", pv},
                {"mode", mode},
                {"size", res.size},
                {"elements", res.set.elements()},
                {"proven_optimal", res.proven_optimal},
                {"nodes", res.nodes},
                {"max_nodes", budget.max_nodes}};
    return r;
  }
  throw InputError("unknown mode " + mode);
}

Result sk_build(std::uint64_t pv, unsigned k) {
  const Prime p(pv);
  const auto b = build_sk(p, k);
  Result r;
  r.report = {{"p", pv},
              {"k", k},
              {"x", b.x},
              {"size", b.set.size()},
              {"whole_field", b.set.size() == pv},
              {"certified", b.certificate.ok()}};
  constexpr std::size_t kListLimit = 4096;
  if (b.set.size() <= kListLimit) r.report["elements"] = b.set.elements();
  return r;
}

Result nk_partition(std::uint64_t pv, unsigned k, std::size_t parts, std::uint64_t seed,
                    std::uint64_t max_tries) {
  const auto part = partition_nk(Prime(pv), k, parts, seed, max_tries);
  Result r;
  json list = json::array();
  for (std::size_t i = 0; i < part.parts.size(); ++i)
    list.push_back({{"part", i}, {"size", part.parts[i].size()}, {"elements", part.parts[i].elements()}});
  r.report = {{"p", pv}, {"k", k}, {"seed", seed}, {"rng", Rng::kName},
              {"attempts", part.attempts}, {"parts", list}};
  r.rows_key = "parts";
  r.columns = {"part", "size"};
  return r;
}

Result check(const MatrixSource& src, const std::string& forbidden, bool random_spec,
             const Budget& budget) {
  Result r;
  Rng rng(src.seed);
  const auto m = src.get(rng, r.report);
  ForbiddenSpec spec = ForbiddenSpec::defaults(m.dim());
  if (!forbidden.empty() && random_spec) throw InputError("give at most one of --forbidden and --random-spec");
  if (!forbidden.empty()) spec = forbidden_from_json(read_json_file(forbidden));
  if (random_spec) spec = ForbiddenSpec::random(m.prime(), m.dim(), rng);
  const auto rep = check_all(m, spec, budget);
  r.report.update(rep.to_json());
  r.code = rep.ok() ? kExitOk : kExitViolation;
  return r;
}

Result run_sweep(std::uint64_t pv, std::size_t n, const std::string& what, unsigned threads,
                 const Budget& budget) {
  SweepKind kind;
  if (what == "p1") kind = SweepKind::P1;
  else if (what == "p4") kind = SweepKind::P4;
  else if (what == "sigma") kind = SweepKind::Sigma;
  else throw InputError("unknown sweep " + what);
  if (n == 0) throw InputError("n must be positive");
  Result r;
  r.report = sweep(Prime(pv), n, kind, threads, budget).to_json();
  return r;
}

void balanced_exponents(Prime p, std::size_t n, Rng& rng, std::vector<unsigned>& r,
                        std::vector<unsigned>& s) {
  const auto top = static_cast<unsigned>(p.value() - 1);
  r.assign(n, 0);
  s.assign(n, 0);
  unsigned total = 0;
  for (auto& x : r) total += (x = static_cast<unsigned>(rng.below(top + 1)));
  do {
    unsigned left = total;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      s[i] = static_cast<unsigned>(rng.below(std::min(left, top) + 1));
      left -= s[i];
    }
    s[n - 1] = left;
  } while (s[n - 1] > top);
}

Result duality(std::uint64_t pv, std::size_t n, std::uint64_t trials, std::uint64_t seed,
               const std::vector<unsigned>& r_fixed, const std::vector<unsigned>& s_fixed,
               const Budget& budget) {
  const Prime p(pv);
  if (pv <= 3) throw PreconditionViolated("duality needs p > 3");
  if (n == 0) throw InputError("n must be positive");
  const bool fixed = !r_fixed.empty() || !s_fixed.empty();
  if (fixed) {
    if (r_fixed.size() != n || s_fixed.size() != n) throw InputError("--r and --s need n entries");
    unsigned a = 0, b = 0;
    for (auto x : r_fixed) a += x;
    for (auto x : s_fixed) b += x;
    if (a != b) throw DegreeMismatch("sum r != sum s");
  }
  Rng rng(seed);
  std::uint64_t mismatches = 0, factorial_failures = 0, zero = 0;
  json first = nullptr;
  for (std::uint64_t k = 0; k < trials; ++k) {
    const auto m = random_nonsingular(p, n, rng);
    std::vector<unsigned> r = r_fixed, s = s_fixed;
    if (!fixed) balanced_exponents(p, n, rng, r, s);
    const auto res = duality_check(m, r, s, budget);
    zero += res.lhs_zero;
    const bool bad = res.lhs_zero != res.rhs_zero;
    mismatches += bad;
    factorial_failures += !res.factorial_relation;
    if ((bad || !res.factorial_relation) && first.is_null())
      first = {{"matrix", matrix_json(m)}, {"r", r}, {"s", s},
               {"lhs", res.lhs.value()}, {"rhs", res.rhs.value()}};
  }
  Result out;
  out.report = {{"p", pv},           {"n", n},
                {"trials", trials},  {"seed", seed},
                {"rng", Rng::kName}, {"both_zero", zero},
                {"mismatches", mismatches}, {"factorial_failures", factorial_failures},
                {"first_failure", first}};
  out.code = mismatches || factorial_failures ? kExitViolation : kExitOk;
  return out;
}

Result multi(std::uint64_t pv, std::size_t n, unsigned k, std::uint64_t trials,
             std::uint64_t seed, const std::string& file, const Budget& budget) {
  Result out;
  if (!file.empty()) {
    const auto j = read_json_file(file);
    if (!j.is_array() || j.empty()) throw InputError("--matrices needs a JSON array of matrices");
    std::vector<FpMatrix> ms;
    for (const auto& mj : j) ms.push_back(matrix_from_json(mj));
    const auto w = check_multi(ms, budget);
    out.report = {{"k", ms.size()}, {"witness", w ? vector_json(*w) : json()}};
    return out;
  }
  if (k < 2) throw InputError("k must be at least 2");
  if (n == 0) throw InputError("n must be positive");
  const Prime p(pv);
  Rng rng(seed);
  std::uint64_t found = 0;
  json free = json::array();
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::vector<FpMatrix> ms;
    for (unsigned i = 0; i < k; ++i) ms.push_back(random_nonsingular(p, n, rng));
    if (check_multi(ms, budget)) {
      ++found;
    } else {
      json tuple = json::array();
      for (const auto& m : ms) tuple.push_back(matrix_json(m));
      free.push_back({{"trial", t}, {"matrices", tuple}});
    }
  }
  out.report = {{"p", pv},         {"n", n},           {"k", k},
                {"trials", trials}, {"seed", seed},    {"rng", Rng::kName},
                {"witness_found", found},
                {"witness_rate", trials ? static_cast<double>(found) / trials : 0.0},
                {"witness_free", free}};
  return out;
}

Result run_pairing(const MatrixSource& src, const std::vector<unsigned>& t,
                   const std::vector<unsigned>& tp, std::uint64_t trials, const Budget& budget) {
  Result out;
  Rng rng(src.seed);
  const auto m = src.get(rng, out.report);
  const auto rep = pairing_test(m, exponent_list(t, m.dim()), exponent_list(tp, m.dim()), trials,
                                src.seed, budget);
  out.report.update(rep.to_json());
  out.report["matrix"] = matrix_json(m);
  out.code = rep.violation ? kExitViolation : kExitOk;
  return out;
}

Result sigma(const MatrixSource& src, std::uint64_t trials, unsigned delete_one,
             const Budget& budget) {
  Result out;
  std::vector<FpMatrix> ms;
  Rng rng(src.seed);
  if (!src.file.empty()) {
    ms.push_back(src.get(rng, out.report));
  } else {
    if (src.n == 0) throw InputError("n must be positive");
    out.report["seed"] = src.seed;
    out.report["rng"] = Rng::kName;
    for (std::uint64_t t = 0; t < trials; ++t) ms.push_back(random_nonsingular(Prime(src.p), src.n, rng));
  }
  json candidates = json::array();
  for (std::size_t i = 0; i < ms.size(); ++i)
    if (sigma_vanishing_candidate(ms[i], budget))
      candidates.push_back({{"trial", i}, {"matrix", matrix_json(ms[i])}});
  out.report["matrices"] = ms.size();
  out.report["candidates"] = candidates.size();
  out.report["candidate_matrices"] = candidates;
  if (delete_one > 0) {
    if (ms.size() != 1) throw InputError("--delete-one needs a single matrix");
    const auto scan = delete_one_factor_scan(ms[0], delete_one, budget);
    out.report["delete_one"] = {{"k", delete_one},
                                {"full_product_zero", scan.full_product_zero},
                                {"zero_after_delete", scan.zero_after_delete}};
  }
  out.code = candidates.empty() ? kExitOk : kExitViolation;
  return out;
}

void emit(const Result& r, const Common& c, std::ostream& out) {
  std::string text;
  if (c.format == "json") text = r.report.dump(2) + "\n";
  else if (c.format == "csv") text = render_csv(r.report, r.rows_key, r.columns);
  else text = render_table(r.report, r.rows_key, r.columns);
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.output);
  if (!f) throw InputError("cannot write " + c.output);
  f << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Additive-combinatorics and group-ring checks over prime fields", "ajt"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--output", common.output, "write the report to a file");
  app.add_option("--budget", common.budget, "'high' or entries=N,nodes=N,enumeration=N");
  app.add_option("--threads", common.threads, "worker threads")->check(CLI::PositiveNumber);

  std::function<Result(const Budget&)> action;

  auto* av = app.add_subcommand("appendix-verify", "check the embedded table of S_1-type sets");
  std::string table;
  av->add_option("--table", table, "CSV file to check instead of the embedded table");
  av->callback([&] { action = [&](const Budget&) { return appendix_verify(table); }; });

  auto* s1c = app.add_subcommand("s1", "build, search or check S_1-type sets");
  std::uint64_t p = 0;
  std::string mode = "build", set_file;
  s1c->add_option("--p", p, "prime");
  s1c->add_option("--mode", mode, "build, min or check")
      ->check(CLI::IsMember({"build", "min", "check"}));
  s1c->add_option("--set", set_file, "set JSON file for --mode check");
  s1c->callback([&] {
    if (mode != "check" && s1c->count("--p") == 0) throw CLI::RequiredError("--p");
    action = [&](const Budget& b) { return s1(p, mode, set_file, b, common.threads); };
  });

  unsigned k = 2;
  auto* skc = app.add_subcommand("sk-build", "staged S_k-type construction");
  skc->add_option("--p", p, "prime")->required();
  skc->add_option("--k", k, "radius");
  skc->callback([&] { action = [&](const Budget&) { return sk_build(p, k); }; });

  std::size_t parts = 2;
  std::uint64_t seed = 1, max_tries = 1000, trials = 100;
  auto* nkc = app.add_subcommand("nk-partition", "random partition into N_k-type parts");
  nkc->add_option("--p", p, "prime")->required();
  nkc->add_option("--k", k, "radius");
  nkc->add_option("--parts", parts, "number of parts");
  nkc->add_option("--seed", seed, "RNG seed");
  nkc->add_option("--max-tries", max_tries, "redraw limit");
  nkc->callback([&] { action = [&](const Budget&) { return nk_partition(p, k, parts, seed, max_tries); }; });

  MatrixSource src;
  std::string forbidden;
  bool random_spec = false;
  auto* chk = app.add_subcommand("check", "evaluate P1..P5 on one matrix");
  src.add(chk);
  chk->add_option("--forbidden", forbidden, "forbidden-values JSON file");
  chk->add_flag("--random-spec", random_spec, "draw random forbidden lists");
  chk->callback([&] { action = [&](const Budget& b) { return check(src, forbidden, random_spec, b); }; });

  std::size_t n = 2;
  std::string what = "p1";
  auto* sw = app.add_subcommand("sweep", "exhaustive pass over all nonsingular matrices");
  sw->add_option("--p", p, "prime")->required();
  sw->add_option("--n", n, "dimension")->required();
  sw->add_option("--what", what, "p1, p4 or sigma")->check(CLI::IsMember({"p1", "p4", "sigma"}));
  sw->callback([&] { action = [&](const Budget& b) { return run_sweep(p, n, what, common.threads, b); }; });

  std::vector<unsigned> r_exp, s_exp;
  auto* du = app.add_subcommand("duality", "coefficient duality on random balanced instances");
  du->add_option("--p", p, "prime")->required();
  du->add_option("--n", n, "dimension");
  du->add_option("--trials", trials, "instances");
  du->add_option("--seed", seed, "RNG seed");
  du->add_option("--r", r_exp, "fixed row exponents")->delimiter(',');
  du->add_option("--s", s_exp, "fixed column exponents")->delimiter(',');
  du->callback([&] {
    action = [&](const Budget& b) { return duality(p, n, trials, seed, r_exp, s_exp, b); };
  });

  std::string matrices;
  auto* mu = app.add_subcommand("multi", "common nowhere-zero images for several matrices");
  mu->add_option("--p", p, "prime");
  mu->add_option("--n", n, "dimension");
  mu->add_option("--k", k, "matrices per tuple");
  mu->add_option("--trials", trials, "random tuples");
  mu->add_option("--seed", seed, "RNG seed");
  mu->add_option("--matrices", matrices, "JSON array of matrices to check instead");
  mu->callback([&] {
    action = [&](const Budget& b) { return multi(p, n, k, trials, seed, matrices, b); };
  });

  std::vector<unsigned> t_exp, tp_exp;
  auto* pa = app.add_subcommand("pairing", "sampled pairing test for image functions");
  src.add(pa);
  pa->add_option("--trials", trials, "sampled pairs");
  pa->add_option("--t", t_exp, "exponents on e_i (default all 1)")->delimiter(',');
  pa->add_option("--t-prime", tp_exp, "exponents on a_i (default all 1)")->delimiter(',');
  pa->callback([&] {
    action = [&](const Budget& b) { return run_pairing(src, t_exp, tp_exp, trials, b); };
  });

  unsigned delete_one = 0;
  auto* sg = app.add_subcommand("sigma", "elementary symmetric forms of the 2n factors");
  sg->add_option("--matrix", src.file, "matrix JSON file");
  sg->add_option("--p", src.p, "prime");
  sg->add_option("--n", src.n, "dimension");
  sg->add_option("--seed", src.seed, "RNG seed");
  sg->add_option("--trials", trials, "random matrices when no file is given");
  sg->add_option("--delete-one", delete_one, "also scan products with one factor power removed");
  sg->callback([&] {
    if (sg->count("--trials") == 0) trials = 1;
    action = [&](const Budget& b) { return sigma(src, trials, delete_one, b); };
  });

  std::vector<const char*> argv{"ajt"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    const auto result = action(resolve_budget(common.budget));
    emit(result, common, out);
    return result.code;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ConstructionFailed& e) {
    err << "construction failed: " << e.what() << "\n";
    return kExitBudget;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kExitViolation;
  }
}

}  // namespace ajt
