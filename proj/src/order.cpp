#include "pathres/order.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "pathres/completion.hpp"
#include "pathres/errors.hpp"

namespace pathres {

DeglexOrder::DeglexOrder(const Quiver& q, std::vector<std::uint32_t> ascending, std::vector<std::uint64_t> weights)
    : q_(&q), ascending_(std::move(ascending)), weights_(std::move(weights)) {
  if (ascending_.size() != q.num_arrows())
    throw Error(ErrorCode::ParseError, "arrow order must list every arrow exactly once");
  rank_.assign(q.num_arrows(), UINT32_MAX);
  for (std::uint32_t i = 0; i < ascending_.size(); ++i) {
    auto a = ascending_[i];
    if (a >= q.num_arrows() || rank_[a] != UINT32_MAX)
      throw Error(ErrorCode::ParseError, "arrow order must list every arrow exactly once");
    rank_[a] = i;
  }
  if (weights_.empty()) weights_.assign(q.num_arrows(), 1);
  if (weights_.size() != q.num_arrows()) throw Error(ErrorCode::ParseError, "one weight per arrow expected");
  for (auto w : weights_)
    if (w == 0) throw Error(ErrorCode::ParseError, "arrow weights must be positive");
}

DeglexOrder DeglexOrder::by_names(const Quiver& q, const std::vector<std::string>& ascending) {
  std::vector<std::uint32_t> idx;
  for (const auto& n : ascending) {
    auto a = q.arrow_index(n);
    if (!a) throw Error(ErrorCode::ParseError, "unknown arrow '" + n + "' in order");
    idx.push_back(*a);
  }
  return DeglexOrder(q, idx);
}

std::uint64_t DeglexOrder::weight(Path p) const {
  std::uint64_t w = 0;
  for (auto a : q_->word(p)) w += weights_[a];
  return w;
}

int DeglexOrder::compare(Path a, Path b) const {
  if (a == b) return 0;
  auto wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb ? -1 : 1;
  const auto& xa = q_->word(a);
  const auto& xb = q_->word(b);
  if (xa.empty() && xb.empty()) return q_->source(a) < q_->source(b) ? -1 : 1;
  std::size_t n = std::min(xa.size(), xb.size());
  for (std::size_t k = 1; k <= n; ++k) {
    auto ra = rank_[xa[xa.size() - k]], rb = rank_[xb[xb.size() - k]];
    if (ra != rb) return ra < rb ? -1 : 1;
  }
  return xa.size() < xb.size() ? -1 : xa.size() > xb.size() ? 1 : 0;
}

Path DeglexOrder::tip(const PathPoly& x) const {
  if (x.is_zero()) throw Error(ErrorCode::ZeroPoly, "tip of the zero polynomial");
  Path best = x.terms().front().first;
  for (const auto& [p, c] : x.terms())
    if (less(best, p)) best = p;
  return best;
}

bool DeglexOrder::orients(const ReductionSystem& r) const {
  for (const auto& rule : r.rules())
    for (const auto& [p, c] : rule.rhs.terms())
      if (!less(p, rule.tip)) return false;
  return true;
}

namespace {

// Canonical textual key of a reduction state, used to deduplicate states.
std::string state_key(const Quiver& q, const PathPoly& x) {
  std::string k;
  for (Path p : x.support()) k += q.format(p) + "|" + x.coef(p).str() + ";";
  return k;
}

}  // namespace

ReachResult reaches(const ReductionSystem& r, Path source, Path target, const std::optional<Scalar>& coef,
                    std::size_t fuel, bool strict) {
  const Quiver& q = r.quiver();
  ReachResult out{ReachStatus::No, {}, 0};
  if (!strict && source == target && (!coef || coef->is_one())) {
    out.status = ReachStatus::Yes;
    return out;
  }
  if (!coef) {
    // Path graph: p -> each support path of a f c for every basic reduction a s c = p.
    std::map<std::uint32_t, std::pair<std::uint32_t, BasicReduction>> parent;
    std::deque<Path> queue{source};
    std::set<std::uint32_t> seen{source.id};
    while (!queue.empty()) {
      Path p = queue.front();
      queue.pop_front();
      for (const auto& m : r.matches(p)) {
        if (out.steps >= fuel) {
          out.status = ReachStatus::FuelExhausted;
          return out;
        }
        ++out.steps;
        BasicReduction br = r.reduction_for(p, m);
        PathPoly img = r.rules()[m.rule].rhs.sandwich(br.left, br.right);
        for (Path t : img.support()) {
          if (!seen.insert(t.id).second) continue;
          parent[t.id] = {p.id, br};
          if (t == target) {
            std::vector<BasicReduction> rev;
            for (std::uint32_t at = t.id; at != source.id; at = parent[at].first) rev.push_back(parent[at].second);
            out.trace.assign(rev.rbegin(), rev.rend());
            out.status = ReachStatus::Yes;
            return out;
          }
          queue.push_back(t);
        }
      }
    }
    return out;
  }
  // Whole states, breadth first.
  struct Node {
    PathPoly value;
    Trace trace;
  };
  std::deque<Node> queue;
  std::set<std::string> seen;
  PathPoly start = PathPoly::monomial(q, source);
  queue.push_back({start, {}});
  seen.insert(state_key(q, start));
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    for (Path p : node.value.support())
      for (const auto& m : r.matches(p)) {
        if (out.steps >= fuel) {
          out.status = ReachStatus::FuelExhausted;
          return out;
        }
        ++out.steps;
        BasicReduction br = r.reduction_for(p, m);
        PathPoly next = r.apply(br, node.value);
        Trace t = node.trace;
        t.push_back(br);
        if (next.coef(target) == *coef && !(strict && target == source)) {
          out.status = ReachStatus::Yes;
          out.trace = std::move(t);
          return out;
        }
        if (seen.insert(state_key(q, next)).second) queue.push_back({std::move(next), std::move(t)});
      }
  }
  return out;
}

MintipResult mintip(const Quiver& q, const std::vector<PathPoly>& generators, const DeglexOrder& order,
                    std::size_t degree_cap) {
  CompletionOptions opts;
  opts.degree_cap = degree_cap;
  CompletionResult res = complete(q, orient(q, generators, order), order, opts);
  MintipResult out{{}, res.status == CompletionStatus::Complete};
  for (const auto& rule : res.rules) out.tips.push_back(rule.tip);
  std::sort(out.tips.begin(), out.tips.end(), [&](Path a, Path b) { return q.canonical_less(a, b); });
  return out;
}

}  // namespace pathres
