#include "pathres/calabi_yau.hpp"

#include <map>

#include "pathres/complex.hpp"
#include "pathres/errors.hpp"

namespace pathres {

namespace {

using Table = std::map<std::uint32_t, TensorElt>;

struct DualFixture {
  int degree;       // of the dual map
  std::string src;  // generator of A_{degree-1}
  std::vector<FixtureTerm> terms;
};

const std::vector<DualFixture>& dual_fixtures() {
  static const std::vector<DualFixture> f = {
      {0, "1", {{"1", "1", "d", "d"}, {"-1", "d", "d", "1"}, {"1", "1", "u", "u"}, {"-1", "u", "u", "1"}}},
      {1,
       "u",
       {{"1", "1", "ddu", "dd"},
        {"-alpha", "d", "ddu", "d"},
        {"-beta", "dd", "ddu", "1"},
        {"1", "u", "duu", "d"},
        {"1", "1", "duu", "du"},
        {"-alpha", "du", "duu", "1"},
        {"-alpha", "1", "duu", "ud"},
        {"-beta", "ud", "duu", "1"},
        {"-beta", "d", "duu", "u"},
        {"-gamma", "1", "duu", "1"}}},
      {1,
       "d",
       {{"1", "du", "ddu", "1"},
        {"1", "u", "ddu", "d"},
        {"-alpha", "ud", "ddu", "1"},
        {"-alpha", "1", "ddu", "du"},
        {"-beta", "d", "ddu", "u"},
        {"-beta", "1", "ddu", "ud"},
        {"-gamma", "1", "ddu", "1"},
        {"1", "uu", "duu", "1"},
        {"-alpha", "u", "duu", "u"},
        {"-beta", "1", "duu", "uu"}}},
      {2, "duu", {{"1", "1", "dduu", "d"}, {"beta", "d", "dduu", "1"}}},
      {2, "ddu", {{"-1", "u", "dduu", "1"}, {"-beta", "1", "dduu", "u"}}},
  };
  return f;
}

// Bottom row maps, keyed by index i (d-bar_i) and source generator.
const std::vector<DualFixture>& bar_fixtures() {
  static const std::vector<DualFixture> f = {
      {0, "dduu", {{"1", "1", "duu", "d"}, {"-1", "d", "duu", "1"}, {"-1", "u", "ddu", "1"}, {"1", "1", "ddu", "u"}}},
      {1,
       "ddu",
       {{"1", "1", "d", "du"},
        {"-beta", "d", "d", "u"},
        {"-beta", "dd", "u", "1"},
        {"-alpha", "1", "d", "ud"},
        {"-alpha", "d", "u", "d"},
        {"-alpha", "du", "d", "1"},
        {"-beta*(-beta^-1)", "1", "u", "dd"},
        {"-beta*(-beta^-1)", "u", "d", "d"},
        {"-beta", "ud", "d", "1"},
        {"-gamma", "1", "d", "1"}}},
      {1,
       "duu",
       {{"-beta", "1", "d", "uu"},
        {"-beta", "d", "u", "u"},
        {"1", "du", "u", "1"},
        {"-alpha", "1", "u", "du"},
        {"-alpha", "u", "d", "u"},
        {"-alpha", "ud", "u", "1"},
        {"-beta", "1", "u", "ud"},
        {"-beta*(-beta^-1)", "u", "u", "d"},
        {"-beta*(-beta^-1)", "uu", "d", "1"},
        {"-gamma", "1", "u", "1"}}},
      {2, "u", {{"-beta", "1", "1", "u"}, {"-1", "u", "1", "1"}}},
      {2, "d", {{"1", "1", "1", "d"}, {"beta", "d", "1", "1"}}},
  };
  return f;
}

// psi_k sends generators of A_{k-1} to generators of A_{2-k}.
std::string psi(int k, const std::string& g) {
  static const std::map<std::pair<int, std::string>, std::string> m = {
      {{0, "1"}, "dduu"}, {{1, "d"}, "duu"}, {{1, "u"}, "ddu"}, {{2, "ddu"}, "u"},
      {{2, "duu"}, "d"},  {{3, "dduu"}, "1"}};
  return m.at({k, g});
}

TensorElt relabel(const Quiver& q, int k, const TensorElt& x) {
  TensorBuilder b(2 - k);
  for (const auto& [key, v] : x.terms())
    b.add(TensorKey::of(key.l(), q.parse(psi(k, q.is_trivial(key.g()) ? "1" : q.format(key.g()))), key.r()), v);
  return b.build();
}

TensorElt apply_table(const TensorOps& ops, const Table& t, const TensorElt& x, int out_degree) {
  TensorBuilder b(out_degree);
  for (const auto& [k, v] : x.terms()) {
    auto it = t.find(k.gen);
    if (it != t.end()) b.add(ops.sandwich(k.l(), it->second, k.r()), v);
  }
  return b.build();
}

}  // namespace

PathPoly cyclic_derivative(const PathPoly& phi, Path arrow) {
  const Quiver& q = *phi.quiver();
  if (q.num_vertices() != 1) throw Error(ErrorCode::NotParallel, "cyclic derivatives need a one-vertex quiver");
  std::uint32_t a = q.word(arrow).at(0);
  std::vector<PathPoly::Term> out;
  for (const auto& [p, c] : phi.terms()) {
    const auto& w = q.word(p);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] != a) continue;
      std::vector<std::uint32_t> rot(w.begin() + static_cast<long>(i) + 1, w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(i));
      Path r = rot.empty() ? q.trivial(0) : *q.make_path(rot);
      out.emplace_back(r, c);
    }
  }
  return PathPoly::from_terms(q, std::move(out));
}

CalabiYauReport downup_cy_check(const ExampleParams& params) {
  Example ex = example("down-up", params);
  for (std::size_t i = 0; i < ex.all_parameters.size(); ++i)
    if (ex.all_parameters[i] == "beta" && ex.values[i] && *ex.values[i] == 0)
      throw Error(ErrorCode::BetaZero, "the check needs beta != 0");
  Problem pr = instantiate(ex.doc);
  const Quiver& q = *pr.quiver;
  ReductionSystem r(q, pr.rules);
  Resolution res(r);
  DualComplex dual = dualize(res, 2);
  CalabiYauReport rep;
  auto fx = [&](int degree, const std::vector<FixtureTerm>& t) { return fixture_tensor(ex, q, pr.field, degree, t); };

  for (const auto& f : dual_fixtures()) {
    TensorElt got = dual.at(f.degree, q.parse(f.src));
    if (got != fx(f.degree, f.terms)) {
      rep.dual_matches = false;
      rep.mismatches.push_back("dual map d_" + std::to_string(f.degree) + "^* at " + f.src + ": " + format_tensor(q, got, {false, true}));
    }
  }

  // bar[i] : generator of A_{2-i} -> element of degree 1-i.
  std::vector<Table> bar(3), shown(3);
  for (int i = 0; i <= 2; ++i)
    for (const auto& [g, x] : dual.maps.at(i)) {
      std::string name = q.is_trivial(g) ? "1" : q.format(g);
      bar[i][q.parse(psi(i, name)).id] = relabel(q, i + 1, x);
    }
  for (const auto& f : bar_fixtures()) {
    Path g = q.parse(f.src);
    shown[f.degree][g.id] = fx(1 - f.degree, f.terms);
    auto it = bar[f.degree].find(g.id);
    if (it == bar[f.degree].end() || it->second != shown[f.degree][g.id]) {
      rep.diagram_commutes = false;
      rep.mismatches.push_back("bottom map " + std::to_string(f.degree) + " at " + f.src);
    }
  }

  const TensorOps& ops = res.ops();
  for (int i = 0; i + 1 <= 2; ++i)
    for (const auto& [g, x] : shown[i])
      if (!apply_table(ops, shown[i + 1], x, -i).is_zero()) {
        rep.bottom_is_complex = false;
        rep.mismatches.push_back("bottom maps " + std::to_string(i + 1) + " o " + std::to_string(i) + " != 0");
      }

  for (int i = 0; i <= 2; ++i) {
    int sign = 0;
    for (int eps : {1, -1}) {
      bool all = true;
      for (Path g : res.generators(2 - i))
        if (shown[i].at(g.id) != res.d_unit(2 - i, g).scaled(Scalar(eps))) all = false;
      if (all) {
        sign = eps;
        break;
      }
    }
    rep.signs.push_back(sign);
    if (!sign) rep.self_dual = false;
  }

  // Relations at beta = -1 against the cyclic derivatives of the potential.
  Scalar alpha = fixture_scalar(ex, "alpha", pr.field), gamma = fixture_scalar(ex, "gamma", pr.field);
  auto P = [&](const char* s) { return q.parse(s); };
  Path d = P("d"), u = P("u");
  PathPoly rel_u = PathPoly::from_terms(q, {{P("ddu"), 1}, {P("dud"), -alpha}, {P("udd"), 1}, {d, -gamma}});
  PathPoly rel_d = PathPoly::from_terms(q, {{P("duu"), 1}, {P("udu"), -alpha}, {P("uud"), 1}, {u, -gamma}});
  Scalar half = Scalar(mpq_class(1, 2));
  PathPoly phi = PathPoly::from_terms(q, {{P("dduu"), 1}, {P("dudu"), -(half * alpha)}, {P("du"), -gamma}});
  PathPoly stated = PathPoly::from_terms(q, {{P("dduu"), 1}, {P("dudu"), half * alpha}, {P("du"), gamma}});
  auto works = [&](const PathPoly& f) { return cyclic_derivative(f, u) == rel_u && cyclic_derivative(f, d) == rel_d; };
  rep.potential = phi.str();
  rep.potential_verified = works(phi);
  rep.stated_potential = stated.str();
  rep.stated_potential_verified = works(stated);
  return rep;
}

}  // namespace pathres
