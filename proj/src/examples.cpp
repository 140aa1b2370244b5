#include "pathres/examples.hpp"

#include <algorithm>

#include "pathres/errors.hpp"

namespace pathres {

namespace {

std::string pw(const std::string& a, long k) {
  std::string s;
  for (long i = 0; i < k; ++i) s += a;
  return k == 0 ? "1" : s;
}

std::string xi_pow(long k) { return k == 0 ? "1" : k == 1 ? "xi" : "xi^" + std::to_string(k); }

std::string neg(const std::string& c) { return "-(" + c + ")"; }

// Builds a document with some parameters replaced by values.
class Builder {
 public:
  Builder(Example& ex, std::vector<std::string> params, const ExampleParams& p) : ex_(ex) {
    ex_.all_parameters = params;
    for (const auto& [k, v] : p.values)
      if (std::find(params.begin(), params.end(), k) == params.end())
        throw Error(ErrorCode::BadParams, "unknown parameter " + k);
    for (const auto& name : params) {
      auto it = p.values.find(name);
      if (it == p.values.end()) {
        ex_.doc.parameters.push_back(name);
        ex_.values.emplace_back();
        continue;
      }
      Scalar v;
      try {
        v = parse_scalar(it->second, Field::rationals());
      } catch (const Error&) {
        throw Error(ErrorCode::BadParams, name + " must be a rational number, got " + it->second);
      }
      ex_.values.emplace_back(v.rational());
      values_[name] = v.str();
    }
  }

  // Parameter name or its value.
  std::string c(const std::string& name) const {
    auto it = values_.find(name);
    return it == values_.end() ? name : "(" + it->second + ")";
  }

  std::optional<mpq_class> value(const std::string& name) const {
    for (std::size_t i = 0; i < ex_.all_parameters.size(); ++i)
      if (ex_.all_parameters[i] == name) return ex_.values[i];
    return std::nullopt;
  }

 private:
  Example& ex_;
  std::map<std::string, std::string> values_;
};

void loops(ProblemDocument& d, const std::vector<std::string>& arrows) {
  d.vertices = {"v"};
  for (const auto& a : arrows) d.arrows.push_back({a, "v", "v"});
}

OrderSpec unit_order(const std::vector<std::string>& ascending) {
  OrderSpec o{ascending, {}};
  for (const auto& a : ascending) o.weights[a] = 1;
  return o;
}

long int_param(const ExampleParams& p, const char* key, long dflt) {
  auto it = p.ints.find(key);
  return it == p.ints.end() ? dflt : it->second;
}

Example cubic(const ExampleParams& p) {
  Example ex;
  Builder b(ex, {}, p);
  std::string sys = p.system.empty() ? "R1" : p.system;
  ex.doc.name = "cubic";
  loops(ex.doc, {"x", "y", "z"});
  std::vector<RuleSpec> r1 = {
      {"zzz", {{"1", "xyz"}, {"-1", "xxx"}, {"-1", "yyy"}}},
      {"xyzz", {{"1", "xxxz"}, {"1", "yyyz"}, {"1", "zxyz"}, {"-1", "zxxx"}, {"-1", "zyyy"}}},
      {"yyyzz",
       {{"-1", "xxxzz"}, {"-1", "zzxyz"}, {"1", "zzxxx"}, {"1", "zzyyy"}, {"1", "xyxyz"}, {"-1", "xyxxx"},
        {"-1", "xyyyy"}}}};
  if (sys == "R1") {
    ex.doc.order = unit_order({"x", "y", "z"});
    ex.doc.rules = r1;
    ex.doc.task.kind = "verify";
    ex.doc.task.degree = 3;
  } else if (sys == "R2") {
    ex.doc.rules = std::vector<RuleSpec>{{"xyz", {{"1", "xxx"}, {"1", "yyy"}, {"1", "zzz"}}}};
    ex.doc.task.kind = "resolve";
    ex.doc.task.degree = 4;
    ex.chains[2] = {};
    ex.chains[3] = {};
  } else if (sys == "raw") {
    ex.doc.order = unit_order({"x", "y", "z"});
    ex.doc.generators = std::vector<std::vector<TermSpec>>{{{"1", "xxx"}, {"1", "yyy"}, {"1", "zzz"}, {"-1", "xyz"}}};
    ex.doc.task.kind = "complete";
    ex.completed = r1;
  } else {
    throw Error(ErrorCode::BadParams, "cubic system must be R1, R2 or raw");
  }
  return ex;
}

Example qci_like(const std::string& name, long n, long m, const ExampleParams& p, bool monomial) {
  Example ex;
  Builder b(ex, monomial ? std::vector<std::string>{} : std::vector<std::string>{"xi"}, p);
  if (n < 2 || m < 2) throw Error(ErrorCode::BadParams, "n and m must be at least 2");
  if (!monomial && name == "qci") {
    auto v = b.value("xi");
    if (v && *v == 0) throw Error(ErrorCode::BadParams, "xi must be nonzero");
  }
  ex.doc.name = name;
  loops(ex.doc, {"x", "y"});
  ex.doc.order = unit_order({"x", "y"});
  std::vector<TermSpec> yx;
  if (!monomial) yx.push_back({b.c("xi"), "xy"});
  ex.doc.rules = std::vector<RuleSpec>{{pw("x", n), {}}, {pw("y", m), {}}, {"yx", yx}};
  ex.doc.task.kind = "verify";
  ex.doc.task.degree = 4;
  ex.chains[2] = {pw("y", m + 1), pw("y", m) + "x", "y" + pw("x", n), pw("x", n + 1)};
  if (monomial) return ex;

  auto& D = ex.differentials;
  DifferentialFixture f{1, pw("x", n), {}};
  for (long i = 0; i < n; ++i) f.terms.push_back({"1", pw("x", i), "x", pw("x", n - 1 - i)});
  D.push_back(f);
  f = {1, pw("y", m), {}};
  for (long i = 0; i < m; ++i) f.terms.push_back({"1", pw("y", i), "y", pw("y", m - 1 - i)});
  D.push_back(f);
  D.push_back({1, "yx", {{"1", "1", "y", "x"}, {"1", "y", "x", "1"}, {"-xi", "1", "x", "y"}, {"-xi", "x", "y", "1"}}});
  D.push_back({2, pw("y", m + 1), {{"1", "y", pw("y", m), "1"}, {"-1", "1", pw("y", m), "y"}}});
  f = {2, pw("y", m) + "x", {}};
  for (long i = 0; i < m; ++i) f.terms.push_back({xi_pow(i), pw("y", m - 1 - i), "yx", pw("y", i)});
  f.terms.push_back({xi_pow(m), "x", pw("y", m), "1"});
  f.terms.push_back({"-1", "1", pw("y", m), "x"});
  D.push_back(f);
  f = {2, "y" + pw("x", n), {{"1", "y", pw("x", n), "1"}}};
  for (long i = 0; i < n; ++i) f.terms.push_back({neg(xi_pow(i)), pw("x", i), "yx", pw("x", n - 1 - i)});
  f.terms.push_back({neg(xi_pow(n)), "1", pw("x", n), "y"});
  D.push_back(f);
  D.push_back({2, pw("x", n + 1), {{"1", "x", pw("x", n), "1"}, {"-1", "1", pw("x", n), "x"}}});
  if (m == 2)
    D.push_back({3,
                 "yyyx",
                 {{"1", "y", "yyx", "1"}, {"1", "1", "yyy", "x"}, {"-xi", "1", "yyx", "y"}, {"-xi^3", "x", "yyy", "1"}}});
  return ex;
}

Example happel(const ExampleParams& p) {
  Example ex = qci_like("happel", 2, 2, p, false);
  ex.doc.task.degree = 6;
  return ex;
}

Example down_up(const ExampleParams& p) {
  Example ex;
  Builder b(ex, {"alpha", "beta", "gamma"}, p);
  ex.doc.name = "down-up";
  loops(ex.doc, {"d", "u"});
  ex.doc.order = unit_order({"d", "u"});
  auto a = b.c("alpha"), be = b.c("beta"), g = b.c("gamma");
  ex.doc.rules = std::vector<RuleSpec>{{"ddu", {{a, "dud"}, {be, "udd"}, {g, "d"}}},
                                       {"duu", {{a, "udu"}, {be, "uud"}, {g, "u"}}}};
  ex.doc.task.kind = "verify";
  ex.doc.task.degree = 3;
  ex.chains[2] = {"dduu"};
  ex.chains[3] = {};
  auto& D = ex.differentials;
  D.push_back({1,
               "ddu",
               {{"1", "1", "d", "du"},
                {"1", "d", "d", "u"},
                {"1", "dd", "u", "1"},
                {"-alpha", "1", "d", "ud"},
                {"-alpha", "d", "u", "d"},
                {"-alpha", "du", "d", "1"},
                {"-beta", "1", "u", "dd"},
                {"-beta", "u", "d", "d"},
                {"-beta", "ud", "d", "1"},
                {"-gamma", "1", "d", "1"}}});
  D.push_back({1,
               "duu",
               {{"1", "1", "d", "uu"},
                {"1", "d", "u", "u"},
                {"1", "du", "u", "1"},
                {"-alpha", "1", "u", "du"},
                {"-alpha", "u", "d", "u"},
                {"-alpha", "ud", "u", "1"},
                {"-beta", "1", "u", "ud"},
                {"-beta", "u", "u", "d"},
                {"-beta", "uu", "d", "1"},
                {"-gamma", "1", "u", "1"}}});
  D.push_back(
      {2, "dduu", {{"1", "d", "duu", "1"}, {"beta", "1", "duu", "d"}, {"-1", "1", "ddu", "u"}, {"-beta", "u", "ddu", "1"}}});
  return ex;
}

}  // namespace

std::vector<std::string> example_names() { return {"cubic", "happel", "qci", "monomial", "down-up"}; }

Example example(const std::string& name, const ExampleParams& p) {
  if (name == "cubic") return cubic(p);
  if (name == "happel") return happel(p);
  if (name == "qci") return qci_like("qci", int_param(p, "n", 2), int_param(p, "m", 2), p, false);
  if (name == "monomial") return qci_like("monomial", int_param(p, "n", 2), int_param(p, "m", 2), p, true);
  if (name == "down-up") return down_up(p);
  throw Error(ErrorCode::UnknownExample, "unknown example '" + name + "'");
}

Scalar fixture_scalar(const Example& ex, const std::string& coef, const Field* target) {
  Scalar full = parse_scalar(coef, Field::get(ex.all_parameters));
  return full.specialize(target, ex.values);
}

TensorElt fixture_tensor(const Example& ex, const Quiver& q, const Field* target, int degree,
                         const std::vector<FixtureTerm>& terms) {
  TensorBuilder b(degree);
  for (const auto& t : terms) b.add(TensorKey::of(q.parse(t.left), q.parse(t.gen), q.parse(t.right)), fixture_scalar(ex, t.coef, target));
  return b.build();
}

}  // namespace pathres
