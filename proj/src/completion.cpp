#include "pathres/completion.hpp"

#include <algorithm>
#include <deque>

#include "pathres/chains.hpp"
#include "pathres/errors.hpp"

namespace pathres {

std::vector<Overlap> overlaps(const ReductionSystem& r) {
  const Quiver& q = r.quiver();
  std::vector<Overlap> out;
  for (const Chain& c : ChainIndex(r).chains(2).chains) {
    std::size_t L = q.length(c.path);
    auto lm = r.match_starting_at(c.path, 0);
    auto rm = r.match_ending_at(c.path, L);
    out.push_back({c.path, c.left, c.right, lm->rule, rm->rule});
  }
  std::stable_sort(out.begin(), out.end(), [&](const Overlap& a, const Overlap& b) {
    return q.canonical_less(a.path, b.path);
  });
  return out;
}

Resolution2 resolve_overlap(const ReductionSystem& r, const Overlap& ov, std::size_t fuel) {
  const Quiver& q = r.quiver();
  std::size_t L = q.length(ov.path);
  PathPoly p = PathPoly::monomial(q, ov.path);
  BasicReduction lhs{q.subpath(ov.path, 0, 0), ov.left_rule, ov.left[2]};
  BasicReduction rhs{ov.right[0], ov.right_rule, q.subpath(ov.path, L, L)};
  Resolution2 res{r.normal_form_after(lhs, p, fuel), r.normal_form_after(rhs, p, fuel), PathPoly(&q)};
  if (res.left.exhausted || res.right.exhausted)
    throw Error(ErrorCode::FuelExhausted, "resolving overlap " + q.format(ov.path));
  res.residual = res.left.value - res.right.value;
  return res;
}

std::vector<Rule> orient(const Quiver& q, const std::vector<PathPoly>& generators, const DeglexOrder& order) {
  std::vector<Rule> out;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    Path t = order.tip(g);
    PathPoly h = g.scaled(g.coef(t).inv());
    out.push_back({t, PathPoly::monomial(q, t) - h});
  }
  return out;
}

namespace {

class Completer {
 public:
  Completer(const Quiver& q, const DeglexOrder& order, const CompletionOptions& opts)
      : q_(q), order_(order), opts_(opts) {}

  // false when a new tip would exceed the degree cap
  bool add_relation(const PathPoly& g) {
    std::deque<PathPoly> work{g};
    while (!work.empty()) {
      PathPoly h = work.front();
      work.pop_front();
      {
        ReductionSystem sys(q_, rules_);
        h = sys.beta(h);
      }
      if (h.is_zero()) continue;
      Path t = order_.tip(h);
      if (q_.length(t) < 2)
        throw Error(ErrorCode::InvalidRule, "completion produced the short tip " + q_.format(t));
      if (q_.length(t) > opts_.degree_cap) {
        cap_hit_ = t;
        return false;
      }
      h = h.scaled(h.coef(t).inv());
      std::vector<Rule> kept;
      for (auto& rule : rules_) {
        if (q_.divides(t, rule.tip))
          work.push_back(PathPoly::monomial(q_, rule.tip) - rule.rhs);
        else
          kept.push_back(std::move(rule));
      }
      rules_ = std::move(kept);
      rules_.push_back({t, PathPoly::monomial(q_, t) - h});
      added_.push_back(t);
    }
    interreduce();
    return true;
  }

  void interreduce() {
    ReductionSystem sys(q_, rules_);
    for (auto& rule : rules_) rule.rhs = sys.beta(rule.rhs);
  }

  std::vector<Rule> rules_;
  std::vector<Path> added_;
  std::optional<Path> cap_hit_;

 private:
  const Quiver& q_;
  const DeglexOrder& order_;
  const CompletionOptions& opts_;
};

}  // namespace

CompletionResult complete(const Quiver& q, std::vector<Rule> rules, const DeglexOrder& order,
                          const CompletionOptions& opts) {
  for (const auto& rule : rules)
    for (const auto& [p, c] : rule.rhs.terms())
      if (!order.less(p, rule.tip))
        throw Error(ErrorCode::OrderViolation, "rhs term " + q.format(p) + " is not below " + q.format(rule.tip));
  Completer c(q, order, opts);
  CompletionResult out{CompletionStatus::Complete, {}, 0, {}, ""};
  for (const auto& rule : rules) {
    if (!c.add_relation(PathPoly::monomial(q, rule.tip) - rule.rhs)) {
      out.status = CompletionStatus::CapExceeded;
      break;
    }
  }
  while (out.status == CompletionStatus::Complete) {
    ReductionSystem sys(q, c.rules_);
    std::optional<PathPoly> residual;
    for (const auto& ov : overlaps(sys)) {
      if (q.length(ov.path) > 2 * opts.degree_cap) continue;
      auto res = resolve_overlap(sys, ov, opts.fuel);
      if (!res.resolves()) {
        residual = res.residual;
        break;
      }
    }
    if (!residual) break;
    if (out.rounds >= opts.max_rounds) {
      out.status = CompletionStatus::RoundsExceeded;
      break;
    }
    ++out.rounds;
    if (!c.add_relation(*residual)) out.status = CompletionStatus::CapExceeded;
  }
  if (c.cap_hit_) out.note = "tip " + q.format(*c.cap_hit_) + " exceeds the degree cap";
  out.rules = std::move(c.rules_);
  for (Path t : c.added_)
    if (std::none_of(rules.begin(), rules.end(), [&](const Rule& r) { return r.tip == t; })) out.added.push_back(t);
  return out;
}

DiamondReport check_diamond(const ReductionSystem& r, const DeglexOrder* order, std::size_t spot_length,
                            std::size_t fuel) {
  const Quiver& q = r.quiver();
  DiamondReport rep;
  for (std::size_t i = 0; i < r.rules().size(); ++i)
    for (const auto& [p, c] : r.rules()[i].rhs.terms())
      if (!r.is_irreducible(p)) {
        rep.rhs_irreducible = false;
        rep.reducible_rhs.push_back(i);
        break;
      }
  for (const auto& ov : overlaps(r)) {
    if (!resolve_overlap(r, ov, fuel).resolves()) {
      rep.overlaps_resolve = false;
      rep.unresolved.push_back(ov.path);
    }
  }
  if (order && order->orients(r)) {
    rep.termination_certified = true;
    rep.termination = "order-certified";
    return rep;
  }
  rep.termination = "unverified termination";
  std::vector<Path> level;
  for (std::uint32_t v = 0; v < q.num_vertices(); ++v) level.push_back(q.trivial(v));
  for (std::size_t len = 1; len <= spot_length; ++len) {
    std::vector<Path> next;
    for (Path w : level)
      for (std::uint32_t a = 0; a < q.num_arrows(); ++a)
        if (auto p = q.concat(q.arrow_path(a), w)) {
          next.push_back(*p);
          if (r.normal_form(PathPoly::monomial(q, *p), Strategy::Leftmost, fuel).exhausted) {
            rep.termination = "fuel exhausted";
            return rep;
          }
        }
    level = std::move(next);
  }
  return rep;
}

}  // namespace pathres
