#include "pathres/document.hpp"

#include "pathres/errors.hpp"

namespace pathres {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string text(const json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  bad(std::string(what) + " must be a string");
}

std::vector<TermSpec> parse_term_list(const json& j) {
  if (!j.is_array()) bad("term list must be an array");
  std::vector<TermSpec> out;
  for (const auto& t : j) {
    if (t.is_string()) {
      out.push_back({"1", t.get<std::string>()});
      continue;
    }
    out.push_back({t.contains("coef") ? text(t.at("coef"), "coef") : "1", text(need(t, "path"), "path")});
  }
  return out;
}

json term_list(const std::vector<TermSpec>& ts) {
  json a = json::array();
  for (const auto& t : ts) a.push_back({{"coef", t.coef}, {"path", t.path}});
  return a;
}

}  // namespace

ProblemDocument parse_document(const json& j) {
  if (!j.is_object()) bad("document must be a JSON object");
  const json& root = j.contains("quiver") ? j.at("quiver") : j;
  ProblemDocument d;
  if (j.contains("name")) d.name = text(j.at("name"), "name");
  for (const auto& v : need(root, "vertices")) d.vertices.push_back(text(v, "vertex"));
  for (const auto& a : need(root, "arrows"))
    d.arrows.push_back({text(need(a, "id"), "arrow id"), text(need(a, "src"), "src"), text(need(a, "tgt"), "tgt")});
  if (j.contains("parameters"))
    for (const auto& p : j.at("parameters")) d.parameters.push_back(text(p, "parameter"));
  if (j.contains("order") && !j.at("order").is_null()) {
    const json& o = j.at("order");
    OrderSpec spec;
    for (const auto& a : need(o, "arrow_order")) spec.arrow_order.push_back(text(a, "arrow"));
    if (o.contains("weights"))
      for (const auto& [k, w] : o.at("weights").items()) {
        if (!w.is_number_unsigned() || w.get<std::uint64_t>() == 0) bad("weights must be positive integers");
        spec.weights[k] = w.get<std::uint64_t>();
      }
    d.order = std::move(spec);
  }
  if (j.contains("rules")) {
    std::vector<RuleSpec> rules;
    for (const auto& r : j.at("rules")) rules.push_back({text(need(r, "lhs"), "lhs"), parse_term_list(need(r, "rhs"))});
    d.rules = std::move(rules);
  }
  if (j.contains("generators")) {
    std::vector<std::vector<TermSpec>> gens;
    for (const auto& g : j.at("generators")) gens.push_back(parse_term_list(g));
    d.generators = std::move(gens);
  }
  if (!d.rules && !d.generators) bad("document needs 'rules' or 'generators'");
  if (j.contains("task")) {
    const json& t = j.at("task");
    if (t.contains("kind")) d.task.kind = text(t.at("kind"), "task kind");
    if (t.contains("degree")) d.task.degree = t.at("degree").get<int>();
    if (t.contains("length_cap")) d.task.length_cap = t.at("length_cap").get<std::size_t>();
    if (t.contains("fuel") && !t.at("fuel").is_null()) d.task.fuel = t.at("fuel").get<std::size_t>();
    if (t.contains("degree_cap")) d.task.degree_cap = t.at("degree_cap").get<std::size_t>();
    if (t.contains("max_rounds")) d.task.max_rounds = t.at("max_rounds").get<std::size_t>();
    if (t.contains("strict_prec")) d.task.strict_prec = t.at("strict_prec").get<bool>();
  }
  return d;
}

ProblemDocument parse_document(const std::string& s) {
  json j;
  try {
    j = json::parse(s);
  } catch (const json::parse_error& e) {
    bad(e.what());
  }
  try {
    return parse_document(j);
  } catch (const json::exception& e) {
    bad(e.what());
  }
}

json to_json(const ProblemDocument& d) {
  json j;
  j["name"] = d.name;
  j["vertices"] = d.vertices;
  json arrows = json::array();
  for (const auto& a : d.arrows) arrows.push_back({{"id", a.id}, {"src", a.src}, {"tgt", a.tgt}});
  j["arrows"] = arrows;
  j["parameters"] = d.parameters;
  if (d.order) j["order"] = {{"arrow_order", d.order->arrow_order}, {"weights", d.order->weights}};
  if (d.rules) {
    json rules = json::array();
    for (const auto& r : *d.rules) rules.push_back({{"lhs", r.lhs}, {"rhs", term_list(r.rhs)}});
    j["rules"] = rules;
  }
  if (d.generators) {
    json gens = json::array();
    for (const auto& g : *d.generators) gens.push_back(term_list(g));
    j["generators"] = gens;
  }
  json t = {{"kind", d.task.kind},
            {"degree", d.task.degree},
            {"length_cap", d.task.length_cap},
            {"degree_cap", d.task.degree_cap},
            {"max_rounds", d.task.max_rounds},
            {"strict_prec", d.task.strict_prec}};
  t["fuel"] = d.task.fuel ? json(*d.task.fuel) : json(nullptr);
  j["task"] = t;
  return j;
}

PathPoly parse_terms(const Quiver& q, const Field* field, const std::vector<TermSpec>& terms) {
  std::vector<PathPoly::Term> out;
  for (const auto& t : terms) out.emplace_back(q.parse(t.path), parse_scalar(t.coef, field));
  return PathPoly::from_terms(q, std::move(out));
}

std::vector<TermSpec> term_specs(const Quiver& q, const PathPoly& x) {
  std::vector<TermSpec> out;
  for (Path p : x.support()) out.push_back({x.coef(p).str(), q.format(p)});
  return out;
}

Problem instantiate(const ProblemDocument& d) {
  Problem pr;
  std::vector<Arrow> arrows;
  std::map<std::string, std::uint32_t> vix;
  for (std::uint32_t i = 0; i < d.vertices.size(); ++i)
    if (!vix.emplace(d.vertices[i], i).second) bad("duplicate vertex " + d.vertices[i]);
  for (const auto& a : d.arrows) {
    auto s = vix.find(a.src), t = vix.find(a.tgt);
    if (s == vix.end() || t == vix.end()) bad("arrow " + a.id + " uses an undeclared vertex");
    arrows.push_back({a.id, s->second, t->second});
  }
  pr.quiver = std::make_unique<Quiver>(d.vertices, std::move(arrows));
  pr.field = Field::get(d.parameters);
  const Quiver& q = *pr.quiver;
  if (d.order) {
    std::vector<std::uint32_t> asc;
    std::vector<std::uint64_t> w(q.num_arrows(), 1);
    for (const auto& name : d.order->arrow_order) {
      auto a = q.arrow_index(name);
      if (!a) bad("order names unknown arrow " + name);
      asc.push_back(*a);
    }
    for (const auto& [name, wt] : d.order->weights) {
      auto a = q.arrow_index(name);
      if (!a) bad("weight for unknown arrow " + name);
      w[*a] = wt;
    }
    pr.order.emplace(q, std::move(asc), std::move(w));
  }
  if (d.rules) {
    pr.has_rules = true;
    for (const auto& r : *d.rules) {
      PathPoly rhs = parse_terms(q, pr.field, r.rhs);
      pr.rules.push_back({q.parse(r.lhs), rhs.is_zero() ? PathPoly(&q) : rhs});
    }
  }
  if (d.generators)
    for (const auto& g : *d.generators) pr.generators.push_back(parse_terms(q, pr.field, g));
  return pr;
}

}  // namespace pathres
