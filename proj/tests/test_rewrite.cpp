#include "doctest.h"
#include "support.hpp"

using namespace pathres;
using support::load;
using support::Loaded;

namespace {

std::vector<Path> all_paths(const Quiver& q, std::size_t max_len) {
  std::vector<Path> out = {q.trivial(0)};
  std::vector<std::vector<std::uint32_t>> frontier = {{}};
  for (std::size_t l = 1; l <= max_len; ++l) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& w : frontier)
      for (std::uint32_t a = 0; a < q.num_arrows(); ++a) {
        auto v = w;
        v.push_back(a);
        out.push_back(*q.make_path(v));
        next.push_back(v);
      }
    frontier = std::move(next);
  }
  return out;
}

PathPoly mono(const Loaded& L, const char* s) { return PathPoly::monomial(L.q(), L.P(s)); }
Scalar sc(const Loaded& L, const char* s) { return parse_scalar(s, L.field()); }

}  // namespace

TEST_CASE("basic reductions") {
  auto L = load("down-up");
  const ReductionSystem& r = *L->rs;
  // rule 0 has tip ddu
  BasicReduction b{L->q().trivial(0), 0, L->P("u")};
  PathPoly got = r.apply(b, mono(*L, "dduu"));
  PathPoly want = mono(*L, "dudu").scaled(sc(*L, "alpha")) + mono(*L, "uddu").scaled(sc(*L, "beta")) +
                  mono(*L, "du").scaled(sc(*L, "gamma"));
  CHECK(got == want);
  CHECK(r.apply(b, mono(*L, "dud")) == mono(*L, "dud"));
  CHECK_THROWS_AS(r.apply(BasicReduction{L->q().trivial(0), 7, L->q().trivial(0)}, mono(*L, "d")), Error);

  auto H = load("happel");
  std::size_t yx = 0;
  while (H->q().format(H->rs->rules()[yx].tip) != "yx") ++yx;
  PathPoly hy = H->rs->apply(BasicReduction{H->q().trivial(0), yx, H->q().trivial(0)}, mono(*H, "yx"));
  CHECK(hy == mono(*H, "xy").scaled(sc(*H, "xi")));
}

TEST_CASE("normal forms") {
  auto L = load("down-up");
  const ReductionSystem& r = *L->rs;
  NormalForm nf = r.normal_form(mono(*L, "ddu"));
  CHECK(nf.value == mono(*L, "dud").scaled(sc(*L, "alpha")) + mono(*L, "udd").scaled(sc(*L, "beta")) +
                        mono(*L, "d").scaled(sc(*L, "gamma")));
  CHECK(nf.trace.size() == 1);
  NormalForm fixed = r.normal_form(mono(*L, "udud"));
  CHECK(fixed.value == mono(*L, "udud"));
  CHECK(fixed.trace.empty());

  NormalForm left = r.normal_form(mono(*L, "dduu"), Strategy::Leftmost);
  NormalForm right = r.normal_form(mono(*L, "dduu"), Strategy::Rightmost);
  CHECK(left.value == right.value);
  CHECK(left.trace != right.trace);
  // result spanned by u^i (du)^k d^j
  for (Path p : left.value.support()) {
    std::string w = L->q().is_trivial(p) ? "" : L->q().format(p);
    std::size_t i = 0;
    while (i < w.size() && w[i] == 'u') ++i;
    while (i + 1 < w.size() && w[i] == 'd' && w[i + 1] == 'u') i += 2;
    while (i < w.size() && w[i] == 'd') ++i;
    CHECK(i == w.size());
  }
}

TEST_CASE("irreducible bases") {
  auto H = load("happel");
  std::set<std::string> b;
  for (Path p : H->rs->irreducible_basis(2)) b.insert(H->q().format(p));
  CHECK(b == std::set<std::string>{"e:v", "x", "y", "xy"});
  CHECK(H->rs->irreducible_basis(10).size() == 4);

  for (auto [n, m] : {std::pair{3L, 2L}, {3L, 3L}, {4L, 2L}}) {
    auto Q = load("qci", support::qci_params(n, m));
    std::set<std::string> got, want;
    for (Path p : Q->rs->irreducible_basis(n + m)) got.insert(Q->q().format(p));
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < m; ++j) want.insert(i + j == 0 ? "e:v" : support::cat(support::pw("x", i), support::pw("y", j)));
    CHECK(got == want);
  }

  auto D = load("down-up");
  CHECK(D->rs->is_irreducible(D->P("dud")));
  CHECK_FALSE(D->rs->is_irreducible(D->P("uddu")));
}

TEST_CASE("beta is idempotent and fixes exactly the irreducible paths") {
  for (const char* name : {"down-up", "happel", "cubic"}) {
    CAPTURE(name);
    auto L = load(name);
    const ReductionSystem& r = *L->rs;
    std::mt19937_64 g(19);
    for (int i = 0; i < 1000; ++i) {
      Path p = support::random_path(L->q(), g, 6);
      PathPoly b = r.beta(p);
      CHECK(r.beta(b) == b);
    }
    for (Path p : all_paths(L->q(), 5)) CHECK((r.beta(p) == PathPoly::monomial(L->q(), p)) == r.is_irreducible(p));
  }
}

TEST_CASE("traces replay") {
  auto L = load("cubic");
  const ReductionSystem& r = *L->rs;
  std::mt19937_64 g(23);
  for (int i = 0; i < 200; ++i) {
    std::vector<PathPoly::Term> t;
    for (int k = 0; k < 3; ++k) t.emplace_back(support::random_path(L->q(), g, 6), Scalar(support::random_rational(g)));
    PathPoly x = PathPoly::from_terms(L->q(), t);
    for (Strategy s : {Strategy::Leftmost, Strategy::Rightmost}) {
      NormalForm nf = r.normal_form(x, s);
      CHECK(r.apply(nf.trace, x) == nf.value);
      CHECK(nf.value == r.beta(x));
    }
  }
}

TEST_CASE("strategies pick the outermost match") {
  auto H = load("happel");
  const ReductionSystem& r = *H->rs;
  Path p = H->P("yyxx");
  auto lm = r.first_match(p, Strategy::Leftmost), rm = r.first_match(p, Strategy::Rightmost);
  REQUIRE(lm);
  REQUIRE(rm);
  CHECK(lm->pos == 0);
  CHECK(rm->pos == 2);
  CHECK(r.matches(p).size() == 3);
}

TEST_CASE("rule validation") {
  std::vector<Arrow> ar = {{"x", 0, 0}, {"y", 0, 0}};
  Quiver q({"v"}, ar);
  auto M = [&](const char* s) { return PathPoly::monomial(q, q.parse(s)); };
  CHECK_THROWS_AS(ReductionSystem(q, {{q.parse("xx"), M("xx")}}), Error);
  CHECK_THROWS_AS(ReductionSystem(q, {{q.parse("x"), M("y")}}), Error);
  CHECK_THROWS_AS(ReductionSystem(q, {{q.parse("xy"), PathPoly(&q)}, {q.parse("xyx"), PathPoly(&q)}}), Error);
  try {
    ReductionSystem(q, {{q.parse("xx"), M("xx")}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidRule);
  }

  Quiver t({"1", "2"}, {{"a", 0, 1}, {"b", 1, 0}});
  // ab is a cycle at vertex 2
  CHECK_THROWS_AS(ReductionSystem(t, {{t.parse("ab"), PathPoly::monomial(t, t.trivial(0))}}), Error);
  CHECK_NOTHROW(ReductionSystem(t, {{t.parse("ab"), PathPoly::monomial(t, t.trivial(1))}}));
}

TEST_CASE("non-terminating systems run out of fuel") {
  std::vector<Arrow> ar = {{"x", 0, 0}, {"y", 0, 0}};
  Quiver q({"v"}, ar);
  ReductionSystem r(q, {{q.parse("xy"), PathPoly::monomial(q, q.parse("yx"))},
                        {q.parse("yx"), PathPoly::monomial(q, q.parse("xy"))}});
  NormalForm nf = r.normal_form(PathPoly::monomial(q, q.parse("xy")), Strategy::Leftmost, 50);
  CHECK(nf.exhausted);
  CHECK_THROWS_AS(r.beta(q.parse("xy")), Error);
}

TEST_CASE("basis counts match row reduction") {
  using support::Relation;
  auto check = [](const Loaded& L, const std::vector<std::string>& alphabet, const std::vector<Relation>& rels) {
    auto counts = support::irreducible_counts(*L.rs, 6);
    for (std::size_t d = 0; d <= 6; ++d) {
      CAPTURE(d);
      CHECK(counts[d] == support::quotient_dimension(alphabet, rels, d));
    }
  };
  auto H = load("happel", support::with_values({{"xi", "3"}}));
  check(*H, {"x", "y"}, {{{"xx", 1}}, {{"yy", 1}}, {{"yx", 1}, {"xy", -3}}});
  auto Q = load("qci", support::qci_params(3, 2, {{"xi", "-2/3"}}));
  check(*Q, {"x", "y"}, {{{"xxx", 1}}, {{"yy", 1}}, {{"yx", 1}, {"xy", mpq_class(2, 3)}}});
  auto D = load("down-up", support::with_values({{"alpha", "2"}, {"beta", "5"}, {"gamma", "0"}}));
  check(*D, {"d", "u"}, {{{"ddu", 1}, {"dud", -2}, {"udd", -5}}, {{"duu", 1}, {"udu", -2}, {"uud", -5}}});
  auto C = load("cubic", support::with_values({}, "R2"));
  check(*C, {"x", "y", "z"}, {{{"xyz", 1}, {"xxx", -1}, {"yyy", -1}, {"zzz", -1}}});
}
