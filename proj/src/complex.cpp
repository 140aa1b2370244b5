#include "pathres/complex.hpp"

#include <algorithm>

#include "pathres/completion.hpp"
#include "pathres/errors.hpp"
#include "pathres/order.hpp"

namespace pathres {

Resolution::Resolution(const ReductionSystem& r, ResolutionOptions opts)
    : r_(&r), opts_(opts), chains_(r), ops_(r) {
  if (!opts_.assume_diamond) {
    DiamondReport rep = check_diamond(r, nullptr, 0);
    if (!rep.rhs_irreducible || !rep.overlaps_resolve) {
      std::string why = rep.rhs_irreducible ? "unresolved overlap" : "reducible right-hand side";
      if (!rep.unresolved.empty()) why += " at " + r.quiver().format(rep.unresolved.front());
      throw Error(ErrorCode::DiamondUnverified, why);
    }
  }
}

TensorElt Resolution::unit(int n, Path gen) const {
  const Quiver& q = quiver();
  std::size_t L = q.length(gen);
  TensorElt x(n);
  return TensorElt::from_terms(n, {{TensorKey::of(q.subpath(gen, 0, 0), gen, q.subpath(gen, L, L)), Scalar(1)}});
}

TensorElt Resolution::basis(int n, Path gen, Path b) const {
  const Quiver& q = quiver();
  if (q.source(gen) != q.target(b)) throw Error(ErrorCode::DegreeMismatch, "basis triple is not composable");
  return TensorElt::from_terms(n, {{TensorKey::of(q.subpath(gen, 0, 0), gen, b), Scalar(1)}});
}

TensorElt Resolution::algebra(const PathPoly& a) const {
  const Quiver& q = quiver();
  TensorBuilder b(-2);
  for (const auto& [p, c] : a.terms()) {
    Path e = q.trivial(q.source(p));
    b.add(TensorKey::of(p, e, e), c);
  }
  return b.build();
}

// ------------------------------------------------------------- f_n and S_n

TensorElt Resolution::bardzell_unit(int n, Path qp) const {
  const Quiver& q = quiver();
  std::size_t L = q.length(qp);
  TensorBuilder b(n - 1);
  if (n % 2 == 0) {
    auto lf = chains_.left_factorization(qp);
    auto rf = chains_.right_factorization(qp);
    if (!lf || !rf || static_cast<int>(lf->size()) != n + 1)
      throw Error(ErrorCode::DegreeMismatch, q.format(qp) + " is not a chain of degree " + std::to_string(n));
    std::size_t vn = q.length(rf->front()), un = q.length(lf->back());
    b.add(TensorKey::of(q.subpath(qp, 0, vn), q.subpath(qp, vn, L), q.subpath(qp, L, L)), Scalar(1));
    b.add(TensorKey::of(q.subpath(qp, 0, 0), q.subpath(qp, 0, L - un), q.subpath(qp, L - un, L)), Scalar(-1));
  } else {
    for (std::size_t i = 0; i < L; ++i)
      for (std::size_t j = i + 1; j <= L; ++j) {
        Path p = q.subpath(qp, i, j);
        if (chains_.degree_of(p) == n - 1)
          b.add(TensorKey::of(q.subpath(qp, 0, i), p, q.subpath(qp, j, L)), Scalar(1));
      }
  }
  return b.build();
}

TensorElt Resolution::bardzell(int n, const TensorElt& x) const {
  if (x.degree() != n) throw Error(ErrorCode::DegreeMismatch, "f_n applied off degree");
  const Quiver& q = quiver();
  if (n == -1) {
    TensorBuilder b(-2);
    for (const auto& [k, v] : x.terms())
      if (auto p = q.concat(k.l(), k.r())) {
        Path e = q.trivial(q.source(*p));
        b.add(TensorKey::of(*p, e, e), v);
      }
    return b.build();
  }
  TensorBuilder b(n - 1);
  std::map<std::uint32_t, TensorElt> cache;
  for (const auto& [k, v] : x.terms()) {
    auto it = cache.find(k.gen);
    if (it == cache.end()) it = cache.emplace(k.gen, bardzell_unit(n, k.g())).first;
    b.add(ops_.sandwich_free(k.l(), it->second, k.r()), v);
  }
  return b.build();
}

TensorElt Resolution::skoldberg_unit(int n, Path qp, Path bp) const {
  const Quiver& q = quiver();
  TensorBuilder out(n);
  auto w = q.concat(qp, bp);
  if (!w) return out.build();
  std::size_t L = q.length(*w);
  Scalar sign = (n + 1) % 2 == 0 ? Scalar(1) : Scalar(-1);
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = i + 1; j <= L; ++j) {
      Path p = q.subpath(*w, i, j);
      if (chains_.degree_of(p) == n) out.add(TensorKey::of(q.subpath(*w, 0, i), p, q.subpath(*w, j, L)), sign);
    }
  return out.build();
}

TensorElt Resolution::skoldberg(int n, const TensorElt& x) const {
  if (x.degree() != n - 1) throw Error(ErrorCode::DegreeMismatch, "S_n applied off degree");
  const Quiver& q = quiver();
  if (n == -1) return TensorElt::from_terms(-1, x.terms());
  TensorBuilder b(n);
  for (const auto& [k, v] : x.terms()) {
    TensorElt u = skoldberg_unit(n, k.g(), k.r());
    for (const auto& [ku, vu] : u.terms())
      if (auto l = q.concat(k.l(), ku.l())) b.add(TensorKey::of(*l, ku.g(), ku.r()), v * vu);
  }
  return b.build();
}

TensorElt Resolution::delta(int n, const TensorElt& x) const { return ops_.project(bardzell(n, x)); }

TensorElt Resolution::s(int n, const TensorElt& x) const { return ops_.project(skoldberg(n, x)); }

// ------------------------------------------------------------- phi maps

TensorElt Resolution::phi0(const PathPoly& c) const {
  const Quiver& q = quiver();
  TensorBuilder b(0);
  for (const auto& [p, lambda] : c.terms()) {
    std::size_t L = q.length(p);
    for (std::size_t i = 0; i < L; ++i) {
      const PathPoly& left = r_->beta(q.subpath(p, 0, i));
      const PathPoly& right = r_->beta(q.subpath(p, i + 1, L));
      Path a = q.subpath(p, i, i + 1);
      for (const auto& [pl, cl] : left.terms())
        for (const auto& [pr, cr] : right.terms()) b.add(TensorKey::of(pl, a, pr), lambda * cl * cr);
    }
  }
  return b.build();
}

TensorElt Resolution::phi1(const Trace& t, const PathPoly& x) const {
  TensorBuilder b(1);
  PathPoly cur = x;
  for (const auto& step : t) {
    auto src = r_->source_of(step);
    if (!src) throw Error(ErrorCode::TraceMismatch, "trace step is not composable");
    Scalar lambda = cur.coef(*src);
    if (!lambda.is_zero()) {
      const PathPoly& left = r_->beta(step.left);
      const PathPoly& right = r_->beta(step.right);
      Path tip = r_->rules()[step.rule].tip;
      for (const auto& [pl, cl] : left.terms())
        for (const auto& [pr, cr] : right.terms()) b.add(TensorKey::of(pl, tip, pr), lambda * cl * cr);
    }
    cur = r_->apply(step, cur);
  }
  return b.build();
}

TensorElt Resolution::d2_overlap(Path p) {
  const Quiver& q = quiver();
  std::size_t L = q.length(p);
  auto lf = chains_.left_factorization(p);
  auto rf = chains_.right_factorization(p);
  auto lm = r_->match_starting_at(p, 0);
  auto rm = r_->match_ending_at(p, L);
  if (!lf || !rf || lf->size() != 3 || !lm || !rm)
    throw Error(ErrorCode::DegreeMismatch, q.format(p) + " is not a 2-chain");
  PathPoly mono = PathPoly::monomial(q, p);
  NormalForm left = r_->normal_form_after({q.subpath(p, 0, 0), lm->rule, (*lf)[2]}, mono);
  NormalForm right = r_->normal_form_after({(*rf)[0], rm->rule, q.subpath(p, L, L)}, mono);
  if (left.exhausted || right.exhausted) throw Error(ErrorCode::FuelExhausted, "normalising " + q.format(p));
  return phi1(right.trace, mono) - phi1(left.trace, mono);
}

// ------------------------------------------------------------- the tower

const TensorElt& Resolution::d_unit(int n, Path gen) {
  auto key = std::make_pair(n, gen.id);
  auto it = d_.find(key);
  if (it != d_.end()) return it->second;
  if (chains_.degree_of(gen) != n)
    throw Error(ErrorCode::DegreeMismatch, quiver().format(gen) + " is not a chain of degree " + std::to_string(n));
  TensorElt val;
  if (n == 0) {
    val = ops_.project(bardzell_unit(0, gen));
  } else if (n == 1 && !opts_.generic_low_degrees) {
    val = phi0(PathPoly::monomial(quiver(), gen)) - phi0(r_->beta(gen));
  } else if (n == 2 && !opts_.generic_low_degrees) {
    val = d2_overlap(gen);
  } else {
    TensorElt dl = delta(n, unit(n, gen));
    val = dl - rho(n - 1, d(n - 1, dl));
  }
  return d_.emplace(key, std::move(val)).first->second;
}

TensorElt Resolution::d(int n, const TensorElt& x) {
  if (x.degree() != n) throw Error(ErrorCode::DegreeMismatch, "d_n applied off degree");
  const Quiver& q = quiver();
  if (n == -1) {
    TensorBuilder b(-2);
    for (const auto& [k, v] : x.terms())
      if (auto p = q.concat(k.l(), k.r()))
        for (const auto& [t, c] : r_->beta(*p).terms()) {
          Path e = q.trivial(q.source(t));
          b.add(TensorKey::of(t, e, e), v * c);
        }
    return b.build();
  }
  TensorBuilder b(n - 1);
  for (const auto& [k, v] : x.terms()) b.add(ops_.sandwich(k.l(), d_unit(n, k.g()), k.r()), v);
  return b.build();
}

TensorElt Resolution::rho(int n, const TensorElt& x) {
  if (x.degree() != n - 1) throw Error(ErrorCode::DegreeMismatch, "rho_n applied off degree");
  const Quiver& q = quiver();
  if (n == -1) return TensorElt::from_terms(-1, x.terms());
  TensorBuilder b(n);
  for (const auto& [k, v] : x.terms()) {
    const TensorElt& u = rho_basis(n, k.g(), k.r());
    if (q.is_trivial(k.l())) {
      b.add(u, v);
    } else {
      Path e = q.trivial(q.source(k.r()));
      b.add(ops_.sandwich(k.l(), u, e), v);
    }
  }
  return b.build();
}

const TensorElt& Resolution::rho_basis(int n, Path gen, Path bp) {
  auto& memo = rho_[n];
  std::uint64_t key = (static_cast<std::uint64_t>(gen.id) << 32) | bp.id;
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  auto active = std::make_tuple(n, gen.id, bp.id);
  if (!rho_active_.insert(active).second)
    throw Error(ErrorCode::FuelExhausted, "contracting homotopy recursion revisits " + quiver().format(gen) + " (x) " +
                                              quiver().format(bp));
  if (++rho_evals_ > opts_.rho_fuel) {
    rho_active_.erase(active);
    throw Error(ErrorCode::FuelExhausted, "contracting homotopy exceeded its evaluation budget");
  }
  TensorElt val;
  try {
    TensorElt x = basis(n - 1, gen, bp);
    TensorElt y = s(n, x);
    TensorElt xi = x - rho(n - 1, d(n - 1, x)) - d(n, y);
    val = xi.is_zero() ? y : y + rho(n, xi);
  } catch (...) {
    rho_active_.erase(active);
    throw;
  }
  rho_active_.erase(active);
  return memo.emplace(key, std::move(val)).first->second;
}

void Resolution::build(int N) {
  for (int n = 0; n <= N; ++n)
    for (Path q : generators(n)) d_unit(n, q);
}

// ------------------------------------------------------------- checks

bool length_graded(const ReductionSystem& r) {
  const Quiver& q = r.quiver();
  for (const auto& rule : r.rules())
    for (const auto& [p, c] : rule.rhs.terms())
      if (q.length(p) != q.length(rule.tip)) return false;
  return true;
}

ReductionSystem monomial_system(const ReductionSystem& r) {
  std::vector<Rule> rules;
  for (const auto& rule : r.rules()) rules.push_back({rule.tip, PathPoly(&r.quiver())});
  return ReductionSystem(r.quiver(), std::move(rules));
}

namespace {

std::vector<Path> right_factors(const ReductionSystem& r, Path gen, std::size_t cap, const std::vector<Path>& basis) {
  const Quiver& q = r.quiver();
  std::vector<Path> out;
  for (Path b : basis)
    if (q.length(b) <= cap && q.target(b) == q.source(gen)) out.push_back(b);
  return out;
}

std::string describe(const Quiver& q, int n, Path g, Path b) {
  return "degree " + std::to_string(n) + " 1 (x) " + q.format(g) + " (x) " + q.format(b);
}

}  // namespace

VerifyReport verify_tower(Resolution& res, int N, const VerifyOptions& opts) {
  const ReductionSystem& r = res.system();
  const Quiver& q = r.quiver();
  VerifyReport rep;
  rep.degree = N;
  res.build(N);
  for (int n = 0; n <= N; ++n)
    for (Path g : res.generators(n))
      if (!res.d(n - 1, res.d_unit(n, g)).is_zero()) {
        rep.d_squared_zero = false;
        rep.failures.push_back("d_" + std::to_string(n - 1) + " d_" + std::to_string(n) + " != 0 on " + q.format(g));
      }
  bool graded = length_graded(r) && !opts.strict_prec;
  for (int n = 1; n <= N; ++n)
    for (Path g : res.generators(n)) {
      TensorElt diff = res.d_unit(n, g) - res.delta(n, res.unit(n, g));
      for (const auto& [k, v] : diff.terms()) {
        auto p = q.concat(k.l(), k.g(), k.r());
        bool ok = p && *p != g;
        if (ok && graded) ok = q.length(*p) == q.length(g);
        if (ok && !graded) ok = reaches(r, g, *p, std::nullopt, opts.reach_fuel, true).status == ReachStatus::Yes;
        if (!ok) {
          rep.support_ok = false;
          rep.failures.push_back("support of d_" + std::to_string(n) + " - delta_" + std::to_string(n) + " at " +
                                 q.format(g) + " contains " + q.format(k.l()) + " (x) " + q.format(k.g()) + " (x) " +
                                 q.format(k.r()));
        }
      }
    }
  std::vector<Path> basis = r.irreducible_basis(opts.length_cap);
  for (int n = -1; n < N; ++n)
    for (Path g : res.generators(n))
      for (Path b : right_factors(r, g, opts.length_cap, basis)) {
        TensorElt x = res.basis(n, g, b);
        TensorElt lhs = res.d(n + 1, res.rho(n + 1, x)) + res.rho(n, res.d(n, x));
        ++rep.checked_triples;
        if (lhs != x) {
          rep.contraction_ok = false;
          rep.failures.push_back("d rho + rho d != id at " + describe(q, n, g, b));
        }
      }
  return rep;
}

SkoldbergReport check_skoldberg(const ReductionSystem& r, int N, std::size_t length_cap) {
  ReductionSystem m = monomial_system(r);
  Resolution res(m, {false, true});
  const Quiver& q = m.quiver();
  SkoldbergReport rep;
  std::vector<Path> basis = m.irreducible_basis(length_cap);
  for (int n = -1; n <= N; ++n)
    for (Path g : res.generators(n))
      for (Path b : right_factors(m, g, length_cap, basis)) {
        TensorElt x = res.basis(n, g, b);
        TensorElt lhs = res.delta(n + 1, res.s(n + 1, x)) + res.s(n, res.delta(n, x));
        ++rep.checked;
        if (lhs != x) {
          rep.ok = false;
          rep.failures.push_back("delta s + s delta != id at " + describe(q, n, g, b));
        }
      }
  return rep;
}

MinimalityReport check_minimal(Resolution& res, int N) {
  const Quiver& q = res.quiver();
  MinimalityReport rep;
  for (int n = 1; n <= N; ++n)
    for (Path g : res.generators(n))
      for (const auto& [k, v] : res.d_unit(n, g).terms())
        if (q.length(k.l()) + q.length(k.r()) == 0) {
          rep.minimal = false;
          rep.offending.push_back("d_" + std::to_string(n) + "(" + q.format(g) + ") has the term " + v.str() +
                                  " 1 (x) " + q.format(k.g()) + " (x) 1");
        }
  return rep;
}

namespace {

std::size_t expected_chain_length(int n, std::size_t N) {
  auto s = static_cast<std::size_t>(n + 1);
  return s % 2 == 0 ? (s / 2) * N : ((s - 1) / 2) * N + 1;
}

}  // namespace

KoszulReport koszul_check(const ReductionSystem& r, int max_degree) {
  const Quiver& q = r.quiver();
  KoszulReport rep;
  std::optional<std::size_t> len;
  bool homogeneous = !r.rules().empty();
  for (const auto& rule : r.rules()) {
    std::size_t t = q.length(rule.tip);
    if (!len) len = t;
    if (*len != t) homogeneous = false;
    for (const auto& [p, c] : rule.rhs.terms())
      if (q.length(p) != t) homogeneous = false;
  }
  if (homogeneous) rep.homogeneous_degree = len;
  rep.quadratic = homogeneous && len == 2u;
  if (!homogeneous) {
    rep.kind = length_graded(r) ? "graded" : "inhomogeneous";
    return rep;
  }
  rep.chain_growth = true;
  ChainIndex idx(r);
  for (int n = 1; n <= max_degree && rep.chain_growth; ++n)
    for (const auto& c : idx.chains(n).chains)
      if (q.length(c.path) != expected_chain_length(n, *len)) {
        rep.chain_growth = false;
        break;
      }
  rep.koszul = rep.chain_growth;
  rep.kind = rep.quadratic ? "quadratic" : std::to_string(*len) + "-homogeneous";
  return rep;
}

const TensorElt& DualComplex::at(int n, Path gen) const {
  static const TensorElt zero;
  auto it = maps.find(n);
  if (it == maps.end()) return zero;
  for (const auto& [g, x] : it->second)
    if (g == gen) return x;
  return zero;
}

DualComplex dualize(Resolution& res, int N) {
  res.build(N);
  DualComplex out;
  out.top = N;
  for (int n = 0; n <= N; ++n) {
    std::map<std::uint32_t, TensorBuilder> acc;
    for (Path p : res.generators(n - 1)) acc.emplace(p.id, TensorBuilder(n));
    for (Path g : res.generators(n))
      for (const auto& [k, v] : res.d_unit(n, g).terms()) {
        auto it = acc.find(k.gen);
        if (it == acc.end()) throw Error(ErrorCode::ComplexViolation, "differential hits a non-generator");
        it->second.add(TensorKey::of(k.r(), g, k.l()), v);
      }
    auto& vec = out.maps[n];
    for (Path p : res.generators(n - 1)) vec.emplace_back(p, acc.at(p.id).build());
  }
  return out;
}

}  // namespace pathres
