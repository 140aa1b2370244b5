#include "doctest.h"
#include "support.hpp"

using namespace pathres;
using support::load;
using support::Loaded;
using support::tensor;

namespace {

Scalar sc(const Loaded& L, const char* s) { return parse_scalar(s, L.field()); }
PathPoly mono(const Loaded& L, const std::string& s) { return PathPoly::monomial(L.q(), L.P(s)); }

TensorElt fixture(const Loaded& L, const DifferentialFixture& f) {
  return fixture_tensor(L.ex, L.q(), L.field(), f.degree - 1, f.terms);
}

}  // namespace

TEST_CASE("projection onto the reduced ambient") {
  auto D = load("down-up");
  Resolution res(*D->rs);
  TensorElt x = tensor(D->q(), 0, {{1, "ddu", "d", "1"}});
  TensorElt want = tensor(D->q(), 0, {{sc(*D, "alpha"), "dud", "d", "1"},
                                      {sc(*D, "beta"), "udd", "d", "1"},
                                      {sc(*D, "gamma"), "d", "d", "1"}});
  CHECK(res.ops().project(x) == want);
  TensorElt basis = tensor(D->q(), 0, {{1, "ud", "u", "dud"}});
  CHECK(res.ops().project(basis) == basis);
  CHECK(res.ops().project(res.ops().project(x)) == res.ops().project(x));
}

TEST_CASE("Bardzell maps") {
  auto D = load("down-up");
  Resolution rd(*D->rs);
  CHECK(rd.bardzell(2, rd.unit(2, D->P("dduu"))) == tensor(D->q(), 1, {{1, "d", "duu", "1"}, {-1, "1", "ddu", "u"}}));

  auto H = load("happel");
  Resolution rh(*H->rs);
  CHECK(rh.bardzell(1, rh.unit(1, H->P("yx"))) == tensor(H->q(), 0, {{1, "y", "x", "1"}, {1, "1", "y", "x"}}));
  CHECK(rh.bardzell(3, rh.unit(3, H->P("yyyy"))) == tensor(H->q(), 2, {{1, "y", "yyy", "1"}, {1, "1", "yyy", "y"}}));
  CHECK(rh.delta(3, rh.unit(3, H->P("yyyy"))) == support::happel_closed(H->q(), sc(*H, "xi"), 3, 4, 0));
  CHECK_THROWS_AS(rh.bardzell(2, rh.unit(3, H->P("yyyy"))), Error);
}

TEST_CASE("Bardzell maps commute with projection") {
  auto C = load("cubic");
  Resolution res(*C->rs);
  const Quiver& q = C->q();
  std::mt19937_64 g(31);
  for (int i = 0; i < 200; ++i) {
    int n = 1 + i % 2;
    const auto& gens = res.generators(n);
    TensorBuilder b(n);
    for (int k = 0; k < 2; ++k) {
      Path gen = gens[std::uniform_int_distribution<std::size_t>(0, gens.size() - 1)(g)];
      b.add(TensorKey::of(support::random_path(q, g, 4), gen, support::random_path(q, g, 4)),
            Scalar(support::random_rational(g)));
    }
    TensorElt x = b.build();
    CHECK(res.ops().project(res.bardzell(n, res.ops().project(x))) == res.ops().project(res.bardzell(n, x)));
  }
}

TEST_CASE("Skoldberg homotopy") {
  auto D = load("down-up");
  Resolution rd(*D->rs);
  TensorElt x = rd.basis(-1, D->q().trivial(0), D->P("dud"));
  CHECK(rd.s(0, x) == tensor(D->q(), 0, {{-1, "1", "d", "ud"}, {-1, "d", "u", "d"}, {-1, "du", "d", "1"}}));

  auto H = load("happel");
  ReductionSystem mono_h = monomial_system(*H->rs);
  Resolution m(mono_h, {false, true});
  TensorElt u = m.unit(1, H->P("yx"));
  CHECK(m.delta(2, m.s(2, u)) + m.s(1, m.delta(1, u)) == u);
  // no divisor of degree 3 inside a short word
  CHECK(m.skoldberg(3, m.basis(2, H->P("yyx"), H->q().trivial(0))).is_zero());

  for (const char* name : {"happel", "down-up", "cubic"}) {
    CAPTURE(name);
    auto L = load(name);
    SkoldbergReport rep = check_skoldberg(*L->rs, 4, 4);
    CHECK(rep.ok);
    CHECK(rep.checked > 0);
  }
  auto Q = load("qci", support::qci_params(3, 2));
  CHECK(check_skoldberg(*Q->rs, 4, 4).ok);
}

TEST_CASE("phi0") {
  auto H = load("happel");
  Resolution rh(*H->rs);
  CHECK(rh.phi0(mono(*H, "yx")) == tensor(H->q(), 0, {{1, "y", "x", "1"}, {1, "1", "y", "x"}}));
  CHECK(rh.phi0(PathPoly::monomial(H->q(), H->q().trivial(0))).is_zero());

  auto D = load("down-up");
  Resolution rd(*D->rs);
  const ReductionSystem& r = *D->rs;
  auto leibniz = [&](Path a, Path p, Path c) {
    const Quiver& q = D->q();
    PathPoly A = PathPoly::monomial(q, a), Pp = PathPoly::monomial(q, p), C = PathPoly::monomial(q, c);
    PathPoly one = PathPoly::monomial(q, q.trivial(0));
    TensorElt lhs = rd.phi0(PathPoly::monomial(q, *q.concat(a, p, c)));
    TensorElt rhs = rd.ops().sandwich(one, rd.phi0(A), r.beta(Pp * C)) +
                    rd.ops().sandwich(r.beta(A), rd.phi0(Pp), r.beta(C)) +
                    rd.ops().sandwich(r.beta(A * Pp), rd.phi0(C), one);
    return lhs == rhs;
  };
  CHECK(leibniz(D->P("d"), D->P("du"), D->P("u")));
  std::mt19937_64 g(37);
  for (int i = 0; i < 50; ++i)
    CHECK(leibniz(support::random_path(D->q(), g, 3), support::random_path(D->q(), g, 3),
                  support::random_path(D->q(), g, 3)));
}

TEST_CASE("phi1") {
  auto D = load("down-up");
  Resolution rd(*D->rs);
  const Quiver& q = D->q();
  Trace t = {BasicReduction{q.trivial(0), 0, D->P("u")}};
  CHECK(rd.phi1(t, mono(*D, "dduu")) == tensor(q, 1, {{1, "1", "ddu", "u"}}));
  CHECK(rd.phi1({}, mono(*D, "dduu")).is_zero());

  std::mt19937_64 g(41);
  int tested = 0;
  while (tested < 20) {
    Path p = support::random_path(q, g, 6);
    NormalForm nf = D->rs->normal_form(PathPoly::monomial(q, p));
    if (nf.trace.empty()) continue;
    ++tested;
    TensorElt lhs = rd.d(1, rd.phi1(nf.trace, PathPoly::monomial(q, p)));
    CHECK(lhs == rd.phi0(PathPoly::monomial(q, p)) - rd.phi0(nf.value));
  }
}

TEST_CASE("low degree differentials match the fixtures") {
  for (const char* name : {"down-up", "happel"}) {
    CAPTURE(name);
    auto L = load(name);
    Resolution res(*L->rs);
    for (const auto& f : L->ex.differentials) {
      CAPTURE(f.gen);
      CHECK(res.d_unit(f.degree, L->P(f.gen)) == fixture(*L, f));
    }
  }
  // down-up d_2 spelled out once more
  auto D = load("down-up");
  Resolution rd(*D->rs);
  Scalar b = sc(*D, "beta");
  CHECK(rd.d_unit(2, D->P("dduu")) ==
        tensor(D->q(), 1, {{1, "d", "duu", "1"}, {b, "1", "duu", "d"}, {-1, "1", "ddu", "u"}, {-b, "u", "ddu", "1"}}));
}

TEST_CASE("generic low degrees also give a resolution") {
  auto D = load("down-up");
  Resolution res(*D->rs, {true, false});
  VerifyReport v = verify_tower(res, 3);
  CHECK(v.ok());
}

TEST_CASE("Happel closed form") {
  auto H = load("happel");
  Resolution res(*H->rs);
  Scalar xi = sc(*H, "xi");
  for (int n = 1; n <= 6; ++n)
    for (long s = 0; s <= n + 1; ++s) {
      CAPTURE(n);
      CAPTURE(s);
      long t = n + 1 - s;
      Path q = H->P(support::qci_chain(s, t, 2, 2));
      CHECK(res.d_unit(n, q) == support::happel_closed(H->q(), xi, n, s, t));
    }
}

TEST_CASE("quantum complete intersection closed form") {
  for (auto [n, m] : {std::pair{3L, 2L}, {2L, 2L}, {3L, 3L}}) {
    auto Q = load("qci", support::qci_params(n, m));
    Resolution res(*Q->rs);
    Scalar xi = sc(*Q, "xi");
    for (int N = 1; N <= 5; ++N)
      for (long s = 0; s <= N + 1; ++s) {
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(N);
        CAPTURE(s);
        long t = N + 1 - s;
        Path q = Q->P(support::qci_chain(s, t, n, m));
        CHECK(res.d_unit(N, q) == support::qci_closed(Q->q(), xi, n, m, N, s, t));
      }
  }
}

TEST_CASE("quantum complete intersection degree 3 at m = 2") {
  for (long n : {2L, 3L}) {
    auto Q = load("qci", support::qci_params(n, 2));
    Resolution res(*Q->rs);
    Scalar xi = sc(*Q, "xi");
    TensorElt want = tensor(Q->q(), 2, {{1, "y", "yyx", "1"}, {1, "1", "yyy", "x"}, {-xi, "1", "yyx", "y"},
                                        {-xi.pow(3), "x", "yyy", "1"}});
    CHECK(res.d_unit(3, Q->P("yyyx")) == want);
    // the two free coefficients are forced by d_2 d_3 = 0
    int solutions = 0;
    for (int t1 : {-1, 0, 1})
      for (int t2 : {-1, 0, 1}) {
        TensorElt cand = res.delta(3, res.unit(3, Q->P("yyyx"))) +
                         tensor(Q->q(), 2, {{xi * Scalar(t1), "1", "yyx", "y"}, {xi.pow(3) * Scalar(t2), "x", "yyy", "1"}});
        if (res.d(2, cand).is_zero()) {
          ++solutions;
          CHECK(t1 == -1);
          CHECK(t2 == -1);
        }
      }
    CHECK(solutions == 1);
  }
}

TEST_CASE("monomial systems give the Bardzell resolution") {
  for (auto [n, m] : {std::pair{2L, 2L}, {3L, 2L}, {3L, 3L}}) {
    auto M = load("monomial", support::qci_params(n, m));
    Resolution res(*M->rs);
    for (int k = 0; k <= 6; ++k)
      for (Path g : res.generators(k)) CHECK(res.d_unit(k, g) == res.delta(k, res.unit(k, g)));
    // d_1 is phi_0 of the tip
    for (Path g : res.generators(1)) CHECK(res.d_unit(1, g) == res.phi0(PathPoly::monomial(M->q(), g)));
  }
}

TEST_CASE("towers verify") {
  auto D = load("down-up");
  Resolution rd(*D->rs);
  VerifyReport v = verify_tower(rd, 3);
  CHECK(v.ok());
  CHECK(v.checked_triples > 0);
  CHECK(rd.generators(3).empty());

  auto R2 = load("cubic", support::with_values({}, "R2"));
  Resolution r2(*R2->rs);
  CHECK(verify_tower(r2, 2).ok());
  CHECK(r2.generators(2).empty());

  auto H = load("happel");
  Resolution rh(*H->rs);
  VerifyOptions strict;
  strict.strict_prec = true;
  CHECK(verify_tower(rh, 4, strict).ok());
}

TEST_CASE("a sabotaged d_2 is caught") {
  auto D = load("down-up");
  Resolution rd(*D->rs);
  TensorElt good = rd.d_unit(2, D->P("dduu"));
  CHECK(rd.d(1, good).is_zero());
  // flip the sign of one term
  std::vector<TensorElt::Term> terms = good.terms();
  terms[0].second = -terms[0].second;
  TensorElt bad = TensorElt::from_terms(1, terms);
  CHECK_FALSE(rd.d(1, bad).is_zero());
}

TEST_CASE("graded supports") {
  for (auto [name, p] : std::vector<std::pair<const char*, ExampleParams>>{
           {"happel", {}}, {"qci", support::qci_params(3, 2)}, {"cubic", support::with_values({}, "R2")}}) {
    CAPTURE(name);
    auto L = load(name, p);
    const Quiver& q = L->q();
    Resolution res(*L->rs);
    for (int n = 1; n <= 5; ++n)
      for (Path g : res.generators(n))
        for (const auto& [k, v] : res.d_unit(n, g).terms())
          CHECK(q.length(k.l()) + q.length(k.g()) + q.length(k.r()) == q.length(g));
  }
}

TEST_CASE("minimality") {
  for (auto p : {support::qci_params(2, 2), support::qci_params(3, 2), support::qci_params(3, 3)}) {
    auto Q = load("qci", p);
    Resolution res(*Q->rs);
    CHECK(check_minimal(res, 6).minimal);
  }
  auto H = load("happel");
  Resolution rh(*H->rs);
  CHECK(check_minimal(rh, 6).minimal);
  auto R2 = load("cubic", support::with_values({}, "R2"));
  Resolution r2(*R2->rs);
  CHECK(check_minimal(r2, 4).minimal);

  auto D = load("down-up");
  Resolution rd(*D->rs);
  CHECK_FALSE(check_minimal(rd, 3).minimal);
  auto D0 = load("down-up", support::with_values({{"gamma", "0"}}));
  Resolution rd0(*D0->rs);
  CHECK(check_minimal(rd0, 3).minimal);

  // x^2 = x
  Quiver q({"v"}, {{"x", 0, 0}});
  ReductionSystem idem(q, {{q.parse("xx"), PathPoly::monomial(q, q.parse("x"))}});
  Resolution ri(idem);
  CHECK(verify_tower(ri, 4).ok());
  MinimalityReport m = check_minimal(ri, 4);
  CHECK_FALSE(m.minimal);
  CHECK_FALSE(m.offending.empty());
}

TEST_CASE("Koszul reports") {
  KoszulReport h = koszul_check(*load("happel")->rs);
  CHECK(h.quadratic);
  CHECK(h.koszul);
  CHECK(h.kind == "quadratic");

  KoszulReport c = koszul_check(*load("cubic", support::with_values({}, "R2"))->rs);
  CHECK_FALSE(c.quadratic);
  CHECK(c.homogeneous_degree == 3u);
  CHECK(c.chain_growth);
  CHECK(c.kind == "3-homogeneous");

  KoszulReport d = koszul_check(*load("down-up")->rs);
  CHECK_FALSE(d.quadratic);
  CHECK_FALSE(d.homogeneous_degree.has_value());
  CHECK_FALSE(d.koszul);
  CHECK(d.kind == "inhomogeneous");

  KoszulReport g = koszul_check(*load("down-up", support::with_values({{"gamma", "0"}}))->rs);
  CHECK(g.homogeneous_degree == 3u);

  KoszulReport q = koszul_check(*load("qci", support::qci_params(3, 2))->rs);
  CHECK(q.kind == "graded");
}

TEST_CASE("dualization") {
  auto D = load("down-up");
  Resolution rd(*D->rs);
  DualComplex dc = dualize(rd, 3);
  const Quiver& q = D->q();
  CHECK(dc.at(0, q.trivial(0)) ==
        tensor(q, 0, {{1, "1", "d", "d"}, {-1, "d", "d", "1"}, {1, "1", "u", "u"}, {-1, "u", "u", "1"}}));
  CHECK(dc.at(2, D->P("duu")) == tensor(q, 2, {{1, "1", "dduu", "d"}, {sc(*D, "beta"), "d", "dduu", "1"}}));
  // A_3 is empty, so d_3^* vanishes
  for (const auto& [g, x] : dc.maps.at(3)) CHECK(x.is_zero());

  // transposing the dual tables gives back the differentials
  for (int n = 0; n <= 3; ++n) {
    std::map<std::uint32_t, TensorBuilder> back;
    for (Path g : rd.generators(n)) back.emplace(g.id, TensorBuilder(n - 1));
    for (const auto& [p, x] : dc.maps.at(n))
      for (const auto& [k, v] : x.terms()) back.at(k.gen).add(TensorKey::of(k.r(), p, k.l()), v);
    for (Path g : rd.generators(n)) CHECK(back.at(g.id).build() == rd.d_unit(n, g));
  }
}

TEST_CASE("Calabi-Yau check") {
  CalabiYauReport generic = downup_cy_check();
  CHECK(generic.dual_matches);
  CHECK(generic.diagram_commutes);
  CHECK(generic.bottom_is_complex);
  CHECK_FALSE(generic.self_dual);
  CHECK(generic.potential_verified);

  CalabiYauReport minus = downup_cy_check(support::with_values({{"beta", "-1"}}));
  CHECK(minus.calabi_yau());
  CHECK(minus.signs == std::vector<int>{-1, 1, -1});

  CalabiYauReport two = downup_cy_check(support::with_values({{"beta", "2"}, {"alpha", "0"}, {"gamma", "0"}}));
  CHECK(two.diagram_commutes);
  CHECK_FALSE(two.self_dual);
  CHECK_FALSE(two.calabi_yau());

  CalabiYauReport one = downup_cy_check(support::with_values({{"beta", "1"}, {"alpha", "0"}, {"gamma", "0"}}));
  CHECK_FALSE(one.calabi_yau());

  try {
    downup_cy_check(support::with_values({{"beta", "0"}}));
    FAIL("expected BetaZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BetaZero);
  }
}

TEST_CASE("cyclic derivatives") {
  Quiver q({"v"}, {{"d", 0, 0}, {"u", 0, 0}});
  PathPoly phi = PathPoly::monomial(q, q.parse("dduu"));
  CHECK(cyclic_derivative(phi, q.parse("d")) == PathPoly::monomial(q, q.parse("duu")) + PathPoly::monomial(q, q.parse("uud")));
  CHECK(cyclic_derivative(PathPoly::monomial(q, q.parse("du")), q.parse("u")) == PathPoly::monomial(q, q.parse("d")));
}
