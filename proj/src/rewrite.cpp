#include "pathres/rewrite.hpp"

#include <algorithm>

#include "pathres/errors.hpp"

namespace pathres {

ReductionSystem::ReductionSystem(const Quiver& q, std::vector<Rule> rules) : q_(&q), rules_(std::move(rules)) {
  by_first_.assign(q.num_arrows(), {});
  by_last_.assign(q.num_arrows(), {});
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Rule& r = rules_[i];
    std::size_t len = q.length(r.tip);
    if (len < 2) throw Error(ErrorCode::InvalidRule, "tip " + q.format(r.tip) + " has length < 2");
    for (const auto& [p, c] : r.rhs.terms()) {
      if (!q.parallel(p, r.tip))
        throw Error(ErrorCode::InvalidRule, "rhs term " + q.format(p) + " is not parallel to " + q.format(r.tip));
      if (const Field* f = c.field()) {
        if (field_ && field_ != f) throw Error(ErrorCode::MixedFields, "rules use different coefficient fields");
        field_ = f;
      }
    }
    if (r.rhs == PathPoly::monomial(q, r.tip))
      throw Error(ErrorCode::InvalidRule, "rule " + q.format(r.tip) + " maps its tip to itself");
    for (std::size_t j = 0; j < i; ++j)
      if (q.divides(rules_[j].tip, r.tip) || q.divides(r.tip, rules_[j].tip))
        throw Error(ErrorCode::InvalidRule,
                    "tips " + q.format(rules_[j].tip) + " and " + q.format(r.tip) + " divide one another");
    max_tip_ = std::max(max_tip_, len);
    by_first_[q.word(r.tip).front()].push_back(i);
    by_last_[q.word(r.tip).back()].push_back(i);
  }
}

std::optional<Match> ReductionSystem::match_starting_at(Path p, std::size_t pos) const {
  const auto& w = q_->word(p);
  if (pos >= w.size()) return std::nullopt;
  for (std::size_t i : by_first_[w[pos]]) {
    const auto& t = q_->word(rules_[i].tip);
    if (pos + t.size() <= w.size() && std::equal(t.begin(), t.end(), w.begin() + static_cast<long>(pos)))
      return Match{i, pos};
  }
  return std::nullopt;
}

std::optional<Match> ReductionSystem::match_ending_at(Path p, std::size_t end) const {
  const auto& w = q_->word(p);
  if (end == 0 || end > w.size()) return std::nullopt;
  for (std::size_t i : by_last_[w[end - 1]]) {
    const auto& t = q_->word(rules_[i].tip);
    if (t.size() <= end && std::equal(t.begin(), t.end(), w.begin() + static_cast<long>(end - t.size())))
      return Match{i, end - t.size()};
  }
  return std::nullopt;
}

std::vector<Match> ReductionSystem::matches(Path p) const {
  std::vector<Match> out;
  for (std::size_t pos = 0; pos < q_->length(p); ++pos)
    if (auto m = match_starting_at(p, pos)) out.push_back(*m);
  return out;
}

std::optional<Match> ReductionSystem::first_match(Path p, Strategy s) const {
  std::size_t n = q_->length(p);
  if (s == Strategy::Leftmost) {
    for (std::size_t pos = 0; pos < n; ++pos)
      if (auto m = match_starting_at(p, pos)) return m;
  } else {
    for (std::size_t end = n; end > 0; --end)
      if (auto m = match_ending_at(p, end)) return m;
  }
  return std::nullopt;
}

bool ReductionSystem::is_irreducible(Path p) const {
  if (irreducible_.size() <= p.id) irreducible_.resize(q_->interned_count() + 64, -1);
  auto& slot = irreducible_[p.id];
  if (slot < 0) slot = first_match(p, Strategy::Leftmost) ? 0 : 1;
  return slot == 1;
}

BasicReduction ReductionSystem::reduction_for(Path p, const Match& m) const {
  std::size_t len = q_->length(rules_[m.rule].tip);
  return {q_->subpath(p, 0, m.pos), m.rule, q_->subpath(p, m.pos + len, q_->length(p))};
}

std::optional<Path> ReductionSystem::source_of(const BasicReduction& r) const {
  if (r.rule >= rules_.size()) throw Error(ErrorCode::UnknownRule, "rule index " + std::to_string(r.rule));
  return q_->concat(r.left, rules_[r.rule].tip, r.right);
}

PathPoly ReductionSystem::apply(const BasicReduction& r, const PathPoly& x) const {
  auto src = source_of(r);
  if (!src) throw Error(ErrorCode::TraceMismatch, "basic reduction is not composable");
  Scalar lambda = x.coef(*src);
  if (lambda.is_zero()) return x;
  return x - PathPoly::monomial(*q_, *src, lambda) + rules_[r.rule].rhs.sandwich(r.left, r.right).scaled(lambda);
}

PathPoly ReductionSystem::apply(const Trace& t, const PathPoly& x) const {
  PathPoly y = x;
  for (const auto& r : t) y = apply(r, y);
  return y;
}

const PathPoly& ReductionSystem::beta(Path p) const {
  std::size_t steps = 0;
  return beta_rec(p, steps);
}

const PathPoly& ReductionSystem::beta_rec(Path p, std::size_t& steps) const {
  auto it = beta_.find(p.id);
  if (it != beta_.end()) return it->second;
  auto m = first_match(p, Strategy::Leftmost);
  if (!m) return beta_.emplace(p.id, PathPoly::monomial(*q_, p)).first->second;
  if (!in_progress_.insert(p.id).second)
    throw Error(ErrorCode::FuelExhausted, "reduction cycle through " + q_->format(p));
  if (++steps > beta_fuel_) {
    in_progress_.clear();
    throw Error(ErrorCode::FuelExhausted, "normal form of " + q_->format(p) + " exceeded fuel");
  }
  BasicReduction r = reduction_for(p, *m);
  PathPoly image = rules_[r.rule].rhs.sandwich(r.left, r.right);
  std::vector<PathPoly::Term> acc;
  try {
    for (const auto& [t, c] : image.terms())
      for (const auto& [b, mu] : beta_rec(t, steps).terms()) acc.emplace_back(b, c * mu);
  } catch (...) {
    in_progress_.erase(p.id);
    throw;
  }
  in_progress_.erase(p.id);
  return beta_.emplace(p.id, PathPoly::from_terms(*q_, std::move(acc))).first->second;
}

PathPoly ReductionSystem::beta(const PathPoly& x) const {
  std::vector<PathPoly::Term> acc;
  for (const auto& [p, c] : x.terms())
    for (const auto& [b, mu] : beta(p).terms()) acc.emplace_back(b, c * mu);
  return PathPoly::from_terms(*q_, std::move(acc));
}

NormalForm ReductionSystem::normal_form(const PathPoly& x, Strategy s, std::size_t fuel) const {
  NormalForm out{x, {}, false};
  for (;;) {
    std::optional<BasicReduction> step;
    for (Path p : out.value.support()) {
      if (is_irreducible(p)) continue;
      step = reduction_for(p, *first_match(p, s));
      break;
    }
    if (!step) return out;
    if (out.trace.size() >= fuel) {
      out.exhausted = true;
      return out;
    }
    out.value = apply(*step, out.value);
    out.trace.push_back(*step);
  }
}

NormalForm ReductionSystem::normal_form_after(const BasicReduction& first, const PathPoly& x,
                                              std::size_t fuel) const {
  PathPoly y = apply(first, x);
  NormalForm rest = normal_form(y, Strategy::Leftmost, fuel ? fuel - 1 : 0);
  rest.trace.insert(rest.trace.begin(), first);
  return rest;
}

std::vector<Path> ReductionSystem::irreducible_basis(std::size_t length_cap) const {
  std::vector<Path> out, level;
  for (std::uint32_t v = 0; v < q_->num_vertices(); ++v) level.push_back(q_->trivial(v));
  for (std::size_t len = 0;; ++len) {
    out.insert(out.end(), level.begin(), level.end());
    if (len == length_cap) break;
    std::vector<Path> next;
    for (Path w : level)
      for (std::uint32_t a = 0; a < q_->num_arrows(); ++a) {
        auto p = q_->concat(q_->arrow_path(a), w);
        if (p && is_irreducible(*p)) next.push_back(*p);
      }
    if (next.empty()) break;
    level = std::move(next);
  }
  std::sort(out.begin(), out.end(), [this](Path a, Path b) { return q_->canonical_less(a, b); });
  return out;
}

std::string ReductionSystem::format_rule(std::size_t i) const {
  return q_->format(rules_[i].tip) + " -> " + rules_[i].rhs.str();
}

}  // namespace pathres
