#include "pathres/chains.hpp"

#include <algorithm>
#include <set>

#include "pathres/errors.hpp"

namespace pathres {

std::optional<std::vector<std::size_t>> ChainIndex::left_cuts(Path p) const {
  const Quiver& q = r_->quiver();
  std::size_t L = q.length(p);
  if (L == 0) return std::vector<std::size_t>{0};
  std::vector<std::size_t> cuts{0, 1};
  std::size_t s = 0, e = 1;
  while (e < L) {
    std::optional<std::size_t> next;
    for (std::size_t e2 = e + 1; e2 <= L; ++e2) {
      auto m = r_->match_ending_at(p, e2);
      if (!m || m->pos < s) continue;
      if (m->pos >= e) return std::nullopt;  // the new part would itself be reducible
      next = e2;
      break;
    }
    if (!next) return std::nullopt;
    s = e;
    e = *next;
    cuts.push_back(e);
  }
  return cuts;
}

std::optional<std::vector<std::size_t>> ChainIndex::right_cuts(Path p) const {
  const Quiver& q = r_->quiver();
  std::size_t L = q.length(p);
  if (L == 0) return std::vector<std::size_t>{0};
  std::vector<std::size_t> cuts{L, L - 1};
  std::size_t e = L, b = L - 1;
  while (b > 0) {
    std::optional<std::size_t> next;
    for (std::size_t b2 = b; b2-- > 0;) {
      auto m = r_->match_starting_at(p, b2);
      if (!m) continue;
      std::size_t end = b2 + q.length(r_->rules()[m->rule].tip);
      if (end > e) continue;
      if (end <= b) return std::nullopt;
      next = b2;
      break;
    }
    if (!next) return std::nullopt;
    e = b;
    b = *next;
    cuts.push_back(b);
  }
  std::reverse(cuts.begin(), cuts.end());
  return cuts;
}

std::optional<int> ChainIndex::degree_of(Path p) const {
  auto it = degree_.find(p.id);
  if (it != degree_.end()) return it->second == -2 ? std::nullopt : std::optional<int>(it->second);
  auto cuts = left_cuts(p);
  int d = cuts ? static_cast<int>(cuts->size()) - 2 : -2;
  degree_.emplace(p.id, d);
  return d == -2 ? std::nullopt : std::optional<int>(d);
}

namespace {

std::vector<Path> split(const Quiver& q, Path p, const std::vector<std::size_t>& cuts) {
  std::vector<Path> parts;
  if (cuts.size() == 1) return {p};
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) parts.push_back(q.subpath(p, cuts[i], cuts[i + 1]));
  return parts;
}

}  // namespace

std::optional<std::vector<Path>> ChainIndex::left_factorization(Path p) const {
  auto cuts = left_cuts(p);
  if (!cuts) return std::nullopt;
  return split(r_->quiver(), p, *cuts);
}

std::optional<std::vector<Path>> ChainIndex::right_factorization(Path p) const {
  auto cuts = right_cuts(p);
  if (!cuts) return std::nullopt;
  return split(r_->quiver(), p, *cuts);
}

ChainSet ChainIndex::chains(int n, std::optional<std::size_t> length_cap) const {
  const Quiver& q = r_->quiver();
  if (n < -1) throw Error(ErrorCode::DegreeMismatch, "chain degree below -1");
  ChainSet out{n, {}, {}};
  std::size_t cap = length_cap ? *length_cap
                               : 1 + static_cast<std::size_t>(std::max(n, 0)) * (std::max<std::size_t>(r_->max_tip_length(), 1) - 1);
  std::vector<Chain> level;
  for (std::uint32_t v = 0; v < q.num_vertices(); ++v) level.push_back({-1, q.trivial(v), {q.trivial(v)}, {q.trivial(v)}});
  if (n == -1) {
    out.chains = std::move(level);
    return out;
  }
  level.clear();
  if (cap >= 1)
    for (std::uint32_t a = 0; a < q.num_arrows(); ++a)
      level.push_back({0, q.arrow_path(a), {q.arrow_path(a)}, {q.arrow_path(a)}});
  for (int deg = 1; deg <= n; ++deg) {
    std::vector<Chain> next;
    std::set<std::uint32_t> seen;
    for (const Chain& c : level) {
      const auto& w = q.word(c.path);
      std::size_t L = w.size();
      std::size_t a = L - q.length(c.left.back());
      for (const Rule& rule : r_->rules()) {
        const auto& T = q.word(rule.tip);
        std::size_t m = T.size();
        for (std::size_t k = 1; k < m && k <= L - a; ++k) {
          if (!std::equal(T.begin(), T.begin() + static_cast<long>(k), w.end() - static_cast<long>(k))) continue;
          if (L + m - k > cap) {
            if (out.truncated.empty() || out.truncated.back() != c.path) out.truncated.push_back(c.path);
            continue;
          }
          std::vector<std::uint32_t> word = w;
          word.insert(word.end(), T.begin() + static_cast<long>(k), T.end());
          Path p = *q.make_path(word);
          bool minimal = true;
          for (std::size_t e = L + 1; e < L + m - k && minimal; ++e) {
            auto hit = r_->match_ending_at(p, e);
            if (hit && hit->pos >= a) minimal = false;
          }
          if (!minimal || !seen.insert(p.id).second) continue;
          Chain nc{deg, p, c.left, {}};
          nc.left.push_back(q.subpath(p, L, word.size()));
          next.push_back(std::move(nc));
        }
      }
    }
    level = std::move(next);
  }
  for (Chain& c : level) {
    auto lf = left_factorization(c.path);
    auto rf = right_factorization(c.path);
    if (!lf || !rf || *lf != c.left || static_cast<int>(rf->size()) != n + 1)
      throw Error(ErrorCode::ComplexViolation, "left and right factorizations disagree on " + q.format(c.path));
    c.right = std::move(*rf);
  }
  std::sort(level.begin(), level.end(), [&](const Chain& x, const Chain& y) { return q.canonical_less(x.path, y.path); });
  out.chains = std::move(level);
  return out;
}

const std::vector<Path>& ChainIndex::generators(int n) const {
  auto it = generators_.find(n);
  if (it != generators_.end()) return it->second;
  std::vector<Path> paths;
  for (const auto& c : chains(n).chains) paths.push_back(c.path);
  return generators_.emplace(n, std::move(paths)).first->second;
}

std::vector<Path> chains_quadratic(const ReductionSystem& r, int n) {
  const Quiver& q = r.quiver();
  std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (const auto& rule : r.rules()) {
    const auto& w = q.word(rule.tip);
    if (w.size() != 2) throw Error(ErrorCode::NotQuadratic, "tip " + q.format(rule.tip) + " is not quadratic");
    pairs.insert({w[0], w[1]});
  }
  std::vector<Path> out;
  if (n == -1) {
    for (std::uint32_t v = 0; v < q.num_vertices(); ++v) out.push_back(q.trivial(v));
    return out;
  }
  std::vector<std::vector<std::uint32_t>> words;
  for (std::uint32_t a = 0; a < q.num_arrows(); ++a) words.push_back({a});
  for (int k = 0; k < n; ++k) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& w : words)
      for (const auto& [a, b] : pairs)
        if (a == w.back()) {
          auto x = w;
          x.push_back(b);
          next.push_back(std::move(x));
        }
    words = std::move(next);
  }
  for (const auto& w : words) out.push_back(*q.make_path(w));
  std::sort(out.begin(), out.end(), [&](Path a, Path b) { return q.canonical_less(a, b); });
  return out;
}

}  // namespace pathres
