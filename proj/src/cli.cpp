#include "pathres/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "pathres/calabi_yau.hpp"
#include "pathres/chains.hpp"
#include "pathres/completion.hpp"
#include "pathres/complex.hpp"

namespace pathres {

using nlohmann::json;

namespace {

std::string pstr(const Quiver& q, Path p) { return format_path(q, p); }

json poly_json(const Quiver& q, const PathPoly& x) {
  json a = json::array();
  for (const auto& t : term_specs(q, x)) a.push_back({{"coef", t.coef}, {"path", t.path}});
  return a;
}

json rules_json(const Quiver& q, const std::vector<Rule>& rules) {
  json a = json::array();
  for (const auto& r : rules) a.push_back({{"lhs", q.format(r.tip)}, {"rhs", poly_json(q, r.rhs)}});
  return a;
}

json tensor_json(const Quiver& q, const TensorElt& x) {
  json a = json::array();
  for (const auto& [k, v] : canonical_terms(q, x))
    a.push_back({{"coef", v.str()}, {"left", pstr(q, k.l())}, {"target_gen", pstr(q, k.g())}, {"right", pstr(q, k.r())}});
  return a;
}

json paths_json(const Quiver& q, const std::vector<Path>& ps) {
  json a = json::array();
  for (Path p : ps) a.push_back(pstr(q, p));
  return a;
}

std::size_t fuel_of(const TaskSpec& t) {
  if (t.fuel) return *t.fuel;
  return env_fuel().value_or(kDefaultNormalFormFuel);
}

struct System {
  Problem problem;
  std::vector<Rule> rules;
  std::optional<CompletionResult> completion;
};

CompletionResult run_completion(const Problem& pr, const TaskSpec& t) {
  if (!pr.order) throw Error(ErrorCode::ParseError, "completion needs an order");
  std::vector<Rule> rules = pr.has_rules ? pr.rules : orient(*pr.quiver, pr.generators, *pr.order);
  if (pr.has_rules && !pr.generators.empty()) {
    auto extra = orient(*pr.quiver, pr.generators, *pr.order);
    rules.insert(rules.end(), extra.begin(), extra.end());
  }
  CompletionOptions opts;
  opts.degree_cap = t.degree_cap;
  opts.max_rounds = t.max_rounds;
  opts.fuel = fuel_of(t);
  return complete(*pr.quiver, std::move(rules), *pr.order, opts);
}

System load(const ProblemDocument& doc) {
  System s{instantiate(doc), {}, std::nullopt};
  if (s.problem.has_rules && s.problem.generators.empty()) {
    s.rules = s.problem.rules;
  } else {
    s.completion = run_completion(s.problem, doc.task);
    if (s.completion->status != CompletionStatus::Complete)
      throw Error(ErrorCode::CapExceeded, "completion stopped before every overlap resolved");
    s.rules = s.completion->rules;
  }
  return s;
}

const char* status_name(CompletionStatus s) {
  switch (s) {
    case CompletionStatus::Complete: return "complete";
    case CompletionStatus::CapExceeded: return "cap_exceeded";
    case CompletionStatus::RoundsExceeded: return "rounds_exceeded";
  }
  return "?";
}

json diamond_json(const Quiver& q, const DiamondReport& d) {
  json u = json::array();
  for (Path p : d.unresolved) u.push_back(q.format(p));
  return {{"holds", d.holds()},
          {"rhs_irreducible", d.rhs_irreducible},
          {"overlaps_resolve", d.overlaps_resolve},
          {"termination", d.termination},
          {"unresolved", u}};
}

json chains_json(const ChainIndex& idx, int n) {
  const Quiver& q = idx.system().quiver();
  ChainSet cs = idx.chains(n);
  json a = json::array();
  for (const auto& c : cs.chains) a.push_back({{"path", pstr(q, c.path)}, {"left", paths_json(q, c.left)}, {"right", paths_json(q, c.right)}});
  return {{"degree", n}, {"count", cs.chains.size()}, {"chains", a}, {"complete", cs.complete()}};
}

json tower_json(Resolution& res, int N, bool latex) {
  const Quiver& q = res.quiver();
  json out = json::array();
  for (int n = 0; n <= N; ++n) {
    json gens = json::array();
    for (Path g : res.generators(n)) {
      const TensorElt& x = res.d_unit(n, g);
      json e = {{"gen", pstr(q, g)}, {"terms", tensor_json(q, x)}};
      if (latex) e["latex"] = format_tensor(q, x, {true, false});
      gens.push_back(e);
    }
    out.push_back({{"degree", n}, {"differentials", gens}});
  }
  return out;
}

// 1 + the last nonempty chain degree, when some degree <= N is empty.
json resolution_length(const ChainIndex& idx, int N) {
  for (int n = 0; n <= N + 1; ++n)
    if (idx.generators(n).empty()) return {{"length", n}, {"chains_empty_from", n}};
  return {{"length", nullptr}, {"chains_empty_from", nullptr}};
}

json koszul_json(const KoszulReport& k) {
  return {{"quadratic", k.quadratic},
          {"homogeneous_degree", k.homogeneous_degree ? json(*k.homogeneous_degree) : json(nullptr)},
          {"chain_growth", k.chain_growth},
          {"koszul", k.koszul},
          {"kind", k.kind}};
}

ExampleParams downup_params_from(const ProblemDocument& doc) {
  if (doc.name != "down-up" && doc.name.rfind("down-up", 0) != 0)
    throw Error(ErrorCode::BadParams, "cy-check applies to the down-up family only");
  ExampleParams p;
  if (!doc.rules) throw Error(ErrorCode::BadParams, "cy-check needs the down-up rules");
  const char* names[] = {"alpha", "beta", "gamma"};
  const char* paths[] = {"dud", "udd", "d"};
  for (const auto& r : *doc.rules) {
    if (r.lhs != "ddu") continue;
    for (int i = 0; i < 3; ++i) {
      std::string coef = "0";
      for (const auto& t : r.rhs)
        if (t.path == paths[i]) coef = t.coef;
      Scalar s = parse_scalar(coef, Field::get(doc.parameters));
      if (s.is_rational()) {
        p.values[names[i]] = s.str();
      } else if (coef != names[i]) {
        throw Error(ErrorCode::BadParams, std::string("coefficient of ") + paths[i] + " must be " + names[i] + " or a number");
      }
    }
  }
  return p;
}

json cy_json(const CalabiYauReport& r) {
  return {{"calabi_yau", r.calabi_yau()},
          {"dual_matches", r.dual_matches},
          {"diagram_commutes", r.diagram_commutes},
          {"bottom_is_complex", r.bottom_is_complex},
          {"self_dual", r.self_dual},
          {"signs", r.signs},
          {"mismatches", r.mismatches},
          {"potential", r.potential},
          {"potential_verified", r.potential_verified},
          {"stated_potential", r.stated_potential},
          {"stated_potential_verified", r.stated_potential_verified}};
}

json verify_json(const VerifyReport& v, const MinimalityReport& m) {
  json f = json::array();
  for (std::size_t i = 0; i < v.failures.size() && i < 20; ++i) f.push_back(v.failures[i]);
  json mo = json::array();
  for (std::size_t i = 0; i < m.offending.size() && i < 20; ++i) mo.push_back(m.offending[i]);
  return {{"ok", v.ok()},
          {"d_squared_zero", v.d_squared_zero},
          {"support_ok", v.support_ok},
          {"contraction_ok", v.contraction_ok},
          {"checked_triples", v.checked_triples},
          {"failures", f},
          {"minimal", m.minimal},
          {"non_radical_terms", mo}};
}

}  // namespace

std::optional<std::size_t> env_fuel() {
  const char* s = std::getenv("PATHRES_FUEL");
  if (!s || !*s) return std::nullopt;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (*end || v == 0) return std::nullopt;
  return static_cast<std::size_t>(v);
}

namespace {

std::string fnv_hex(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

std::string input_hash(const ProblemDocument& doc) { return fnv_hex(to_json(doc).dump()); }

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::FuelExhausted:
    case ErrorCode::CapExceeded:
    case ErrorCode::InfiniteChains:
      return kExhausted;
    case ErrorCode::DiamondUnverified:
    case ErrorCode::ComplexViolation:
    case ErrorCode::OrderViolation:
    case ErrorCode::DegreeMismatch:
    case ErrorCode::TraceMismatch:
      return kVerificationFailed;
    default:
      return kInputError;
  }
}

TaskOutcome run_task(const ProblemDocument& doc, const RunOptions& opts) {
  const TaskSpec& t = doc.task;
  TaskOutcome out;
  json& r = out.result;
  r["task"] = t.kind;
  if (t.kind == "cy-check") {
    r.update(cy_json(downup_cy_check(downup_params_from(doc))));
    return out;
  }
  if (t.kind == "complete") {
    Problem pr = instantiate(doc);
    CompletionResult c = run_completion(pr, t);
    const Quiver& q = *pr.quiver;
    json log = json::array();
    for (Path p : c.added) log.push_back("added rule with tip " + q.format(p));
    r["status"] = status_name(c.status);
    r["rounds"] = c.rounds;
    r["rules"] = rules_json(q, c.rules);
    r["log"] = log;
    if (!c.note.empty()) r["note"] = c.note;
    if (c.status == CompletionStatus::Complete) {
      ReductionSystem rs(q, c.rules);
      r["diamond"] = diamond_json(q, check_diamond(rs, &*pr.order, 6, fuel_of(t)));
    } else {
      out.exit_code = kExhausted;
    }
    return out;
  }

  System s = load(doc);
  const Quiver& q = *s.problem.quiver;
  ReductionSystem rs(q, s.rules);
  if (s.completion) r["completed_rules"] = rules_json(q, s.rules);
  int N = t.degree;

  if (t.kind == "chains") {
    ChainIndex idx(rs);
    json a = json::array();
    for (int n = -1; n <= N; ++n) a.push_back(chains_json(idx, n));
    r["degrees"] = a;
  } else if (t.kind == "basis") {
    auto b = rs.irreducible_basis(t.length_cap);
    std::vector<std::size_t> counts(t.length_cap + 1, 0);
    for (Path p : b) ++counts[q.length(p)];
    r["basis"] = paths_json(q, b);
    r["counts_by_length"] = counts;
  } else if (t.kind == "resolve" || t.kind == "verify" || t.kind == "dualize") {
    DiamondReport dia = check_diamond(rs, s.problem.order ? &*s.problem.order : nullptr, 6, fuel_of(t));
    r["diamond"] = diamond_json(q, dia);
    if (!dia.holds()) {
      out.exit_code = kVerificationFailed;
      return out;
    }
    Resolution res(rs, {false, true});
    res.build(N);
    r.update(resolution_length(res.chain_index(), N));
    if (t.kind == "resolve") {
      r["tower"] = tower_json(res, N, opts.latex);
    } else if (t.kind == "verify") {
      VerifyOptions vo;
      vo.strict_prec = t.strict_prec;
      vo.length_cap = t.length_cap;
      vo.reach_fuel = t.fuel.value_or(env_fuel().value_or(kDefaultReachFuel));
      VerifyReport v = verify_tower(res, N, vo);
      MinimalityReport m = check_minimal(res, N);
      r["verify"] = verify_json(v, m);
      r["koszul"] = koszul_json(koszul_check(rs));
      if (!v.ok()) out.exit_code = kVerificationFailed;
    } else {
      DualComplex dc = dualize(res, N);
      json maps = json::array();
      for (const auto& [n, entries] : dc.maps) {
        json e = json::array();
        for (const auto& [g, x] : entries) {
          json item = {{"source_gen", pstr(q, g)}, {"terms", tensor_json(q, x)}};
          if (opts.latex) item["latex"] = format_tensor(q, x, {true, true});
          e.push_back(item);
        }
        maps.push_back({{"degree", n}, {"maps", e}});
      }
      r["dual"] = maps;
    }
  } else {
    throw Error(ErrorCode::ParseError, "unknown task '" + t.kind + "'");
  }
  return out;
}

TaskOutcome self_test(const Example& ex) {
  TaskOutcome out;
  json checks = json::array();
  bool all = true;
  auto check = [&](const std::string& name, bool ok, const std::string& detail = {}) {
    json c = {{"name", name}, {"ok", ok}};
    if (!ok && !detail.empty()) c["detail"] = detail;
    checks.push_back(c);
    all = all && ok;
  };
  try {
    System s = load(ex.doc);
    const Quiver& q = *s.problem.quiver;
    const Field* field = s.problem.field;
    ReductionSystem rs(q, s.rules);
    if (!ex.completed.empty()) {
      bool same = s.rules.size() == ex.completed.size();
      for (const auto& spec : ex.completed) {
        Path tip = q.parse(spec.lhs);
        PathPoly rhs = parse_terms(q, field, spec.rhs);
        auto it = std::find_if(s.rules.begin(), s.rules.end(), [&](const Rule& x) { return x.tip == tip; });
        same = same && it != s.rules.end() && it->rhs == rhs;
      }
      check("completion matches the expected rules", same, json(rules_json(q, s.rules)).dump());
    }
    DiamondReport dia = check_diamond(rs, s.problem.order ? &*s.problem.order : nullptr, 6);
    check("diamond condition", dia.holds(), dia.termination);
    Resolution res(rs, {false, true});
    for (const auto& [n, expected] : ex.chains) {
      std::vector<std::string> got, want = expected;
      for (Path p : res.generators(n)) got.push_back(q.format(p));
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      check("chains of degree " + std::to_string(n), got == want, json(got).dump());
    }
    for (const auto& f : ex.differentials) {
      TensorElt want = fixture_tensor(ex, q, field, f.degree - 1, f.terms);
      const TensorElt& got = res.d_unit(f.degree, q.parse(f.gen));
      check("d_" + std::to_string(f.degree) + " at " + f.gen, got == want, format_tensor(q, got));
    }
    int N = ex.doc.task.degree;
    if (ex.doc.name == "monomial") {
      bool same = true;
      for (int n = 0; n <= N; ++n)
        for (Path g : res.generators(n)) same = same && res.d_unit(n, g) == res.delta(n, res.unit(n, g));
      check("d equals the Bardzell differential", same);
    }
    VerifyOptions vo;
    vo.length_cap = ex.doc.task.length_cap;
    VerifyReport v = verify_tower(res, N, vo);
    check("tower verified through degree " + std::to_string(N), v.ok(), v.failures.empty() ? "" : v.failures.front());
  } catch (const Error& e) {
    check("no errors", false, e.what());
  }
  out.result = {{"example", ex.doc.name}, {"checks", checks}, {"passed", all}};
  out.exit_code = all ? kOk : kVerificationFailed;
  return out;
}

namespace {

ProblemDocument read_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream f(path);
    if (!f) throw Error(ErrorCode::ParseError, "cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  return parse_document(text);
}

struct Flags {
  std::optional<int> degree;
  std::optional<std::size_t> length_cap, fuel, degree_cap, max_rounds;
  bool strict_prec = false;
  bool latex = false;
  std::string input = "-";
};

void add_flags(CLI::App* sc, Flags& f) {
  sc->add_option("-N,--degree", f.degree, "Top degree");
  sc->add_option("--length-cap", f.length_cap, "Length cap for basis paths");
  sc->add_option("--fuel", f.fuel, "Rewriting fuel");
  sc->add_option("--degree-cap", f.degree_cap, "Completion tip-length cap");
  sc->add_option("--max-rounds", f.max_rounds, "Completion round cap");
  sc->add_flag("--strict-prec", f.strict_prec, "Check supports with the reachability oracle");
  sc->add_flag("--latex", f.latex, "Add LaTeX renderings");
}

void apply_flags(TaskSpec& t, const Flags& f) {
  if (f.degree) t.degree = *f.degree;
  if (f.length_cap) t.length_cap = *f.length_cap;
  if (f.fuel) t.fuel = *f.fuel;
  if (f.degree_cap) t.degree_cap = *f.degree_cap;
  if (f.max_rounds) t.max_rounds = *f.max_rounds;
  if (f.strict_prec) t.strict_prec = true;
}

json envelope(const std::string& command, const std::string& hash) {
  return {{"tool", "pathres"}, {"version", kVersion}, {"command", command}, {"input_hash", hash}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Path algebra rewriting and bimodule resolutions"};
  app.require_subcommand(1);
  Flags flags;
  std::map<std::string, std::string> params;
  std::string name, task, system;
  std::optional<long> n_param, m_param;
  bool self = false, print_doc = false;

  const std::pair<const char*, const char*> doc_commands[] = {
      {"complete", "Complete generators or rules to a confluent system"},
      {"chains", "List n-ambiguities by degree"},
      {"basis", "Irreducible paths up to a length"},
      {"resolve", "Build the differentials of the resolution"},
      {"verify", "Check d o d = 0, supports and the contraction identity"},
      {"dualize", "Dual maps of the resolution"}};
  for (auto [c, help] : doc_commands) {
    auto* sc = app.add_subcommand(c, help);
    sc->add_option("input", flags.input, "Problem document (JSON), '-' for stdin");
    add_flags(sc, flags);
  }
  auto add_params = [&](CLI::App* sc) {
    for (const char* p : {"xi", "alpha", "beta", "gamma"})
      sc->add_option_function<std::string>(std::string("--") + p, [&params, p](const std::string& v) { params[p] = v; },
                                           std::string("Value of ") + p);
  };
  auto* cy = app.add_subcommand("cy-check", "Calabi-Yau check for down-up algebras");
  add_params(cy);
  add_flags(cy, flags);
  auto* ex = app.add_subcommand("example", "Run a registry example");
  ex->add_option("name", name, "cubic, happel, qci, monomial, down-up or all")->required();
  ex->add_option("--task", task, "Task to run");
  ex->add_option("--system", system, "cubic: R1, R2 or raw");
  ex->add_option("--n", n_param, "qci exponent of x");
  ex->add_option("--m", m_param, "qci exponent of y");
  ex->add_flag("--self-test", self, "Check the embedded fixtures");
  ex->add_flag("--print-document", print_doc, "Print the problem document and exit");
  add_params(ex);
  add_flags(ex, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInputError;
  }

  auto start = std::chrono::steady_clock::now();
  auto finish = [&](json report, int code) {
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report["timings"] = {{"total_ms", ms}};
    report["exit_code"] = code;
    out << report.dump(2) << "\n";
    return code;
  };

  std::string command = app.get_subcommands().front()->get_name();
  try {
    ExampleParams ep;
    ep.values = params;
    ep.system = system;
    if (n_param) ep.ints["n"] = *n_param;
    if (m_param) ep.ints["m"] = *m_param;

    if (command == "example" && self) {
      std::vector<Example> exs;
      if (name == "all") {
        for (const auto& nm : example_names()) exs.push_back(example(nm));
        exs.push_back(example("cubic", {{}, {}, "R2"}));
        exs.push_back(example("cubic", {{}, {}, "raw"}));
        exs.push_back(example("qci", {{}, {{"n", 3}, {"m", 2}}, ""}));
        exs.push_back(example("qci", {{}, {{"n", 3}, {"m", 3}}, ""}));
      } else {
        exs.push_back(example(name, ep));
      }
      json results = json::array();
      int code = kOk;
      std::string hash_src;
      for (auto& e : exs) {
        apply_flags(e.doc.task, flags);
        hash_src += input_hash(e.doc);
        TaskOutcome o = self_test(e);
        results.push_back(o.result);
        code = std::max(code, o.exit_code);
      }
      json report = envelope("self-test", fnv_hex(hash_src));
      report["self_test"] = results;
      report["passed"] = code == kOk;
      return finish(report, code);
    }

    ProblemDocument doc;
    if (command == "example") {
      doc = example(name, ep).doc;
      if (!task.empty()) doc.task.kind = task;
    } else if (command == "cy-check") {
      doc = example("down-up", ep).doc;
      doc.task.kind = "cy-check";
    } else {
      doc = read_document(flags.input);
      doc.task.kind = command;
    }
    apply_flags(doc.task, flags);
    if (print_doc) {
      out << to_json(doc).dump(2) << "\n";
      return kOk;
    }
    TaskOutcome o = run_task(doc, {flags.latex});
    json report = envelope(command, input_hash(doc));
    report.update(o.result);
    return finish(report, o.exit_code);
  } catch (const Error& e) {
    err << "pathres: " << e.what() << "\n";
    json report = envelope(command, "");
    report["error"] = e.what();
    return finish(report, exit_code_for(e));
  } catch (const std::exception& e) {
    err << "pathres: " << e.what() << "\n";
    json report = envelope(command, "");
    report["error"] = e.what();
    return finish(report, kInputError);
  }
}

}  // namespace pathres
