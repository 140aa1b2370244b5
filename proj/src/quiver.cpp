#include "pathres/quiver.hpp"

#include <algorithm>

#include "pathres/errors.hpp"

namespace pathres {

std::size_t Quiver::WordHash::operator()(const std::vector<std::uint32_t>& w) const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto a : w) {
    h ^= a + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  if (vertices_.empty()) throw Error(ErrorCode::ParseError, "quiver has no vertices");
  for (std::uint32_t v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].empty() || !vertex_lookup_.emplace(vertices_[v], v).second)
      throw Error(ErrorCode::ParseError, "duplicate or empty vertex '" + vertices_[v] + "'");
    data_.push_back({{}, v, v});
  }
  for (std::uint32_t a = 0; a < arrows_.size(); ++a) {
    const Arrow& ar = arrows_[a];
    if (ar.id.empty() || ar.id.find_first_of(". :") != std::string::npos || ar.id == "1" ||
        !arrow_lookup_.emplace(ar.id, a).second)
      throw Error(ErrorCode::ParseError, "duplicate or malformed arrow id '" + ar.id + "'");
    if (ar.src >= vertices_.size() || ar.tgt >= vertices_.size())
      throw Error(ErrorCode::ParseError, "arrow '" + ar.id + "' has unknown endpoint");
    if (ar.id.size() != 1) single_char_ids_ = false;
    data_.push_back({{a}, ar.src, ar.tgt});
    index_.emplace(std::vector<std::uint32_t>{a}, static_cast<std::uint32_t>(data_.size() - 1));
  }
}

std::optional<std::uint32_t> Quiver::vertex_index(std::string_view name) const {
  auto it = vertex_lookup_.find(std::string(name));
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::uint32_t> Quiver::arrow_index(std::string_view name) const {
  auto it = arrow_lookup_.find(std::string(name));
  if (it == arrow_lookup_.end()) return std::nullopt;
  return it->second;
}

Path Quiver::intern(std::vector<std::uint32_t> word) const {
  auto it = index_.find(word);
  if (it != index_.end()) return Path{it->second};
  std::uint32_t src = arrows_[word.back()].src, tgt = arrows_[word.front()].tgt;
  auto id = static_cast<std::uint32_t>(data_.size());
  data_.push_back({word, src, tgt});
  index_.emplace(std::move(word), id);
  return Path{id};
}

std::optional<Path> Quiver::make_path(const std::vector<std::uint32_t>& word) const {
  if (word.empty()) throw Error(ErrorCode::ParseError, "empty word; use a trivial path");
  for (auto a : word)
    if (a >= arrows_.size()) throw Error(ErrorCode::ParseError, "arrow index out of range");
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (arrows_[word[i]].src != arrows_[word[i + 1]].tgt) return std::nullopt;
  return intern(word);
}

std::optional<Path> Quiver::concat(Path a, Path b) const {
  if (source(a) != target(b)) return std::nullopt;
  if (is_trivial(a)) return b;
  if (is_trivial(b)) return a;
  std::uint64_t key = (static_cast<std::uint64_t>(a.id) << 32) | b.id;
  auto it = concat_cache_.find(key);
  if (it != concat_cache_.end()) return Path{static_cast<std::uint32_t>(it->second)};
  std::vector<std::uint32_t> w = word(a);
  const auto& wb = word(b);
  w.insert(w.end(), wb.begin(), wb.end());
  Path p = intern(std::move(w));
  concat_cache_.emplace(key, p.id);
  return p;
}

std::optional<Path> Quiver::concat(Path a, Path b, Path c) const {
  auto ab = concat(a, b);
  if (!ab) return std::nullopt;
  return concat(*ab, c);
}

Path Quiver::subpath(Path p, std::size_t begin, std::size_t end) const {
  const auto& w = word(p);
  if (begin > end || end > w.size()) throw Error(ErrorCode::ParseError, "subpath range out of bounds");
  if (begin == end) return trivial(begin < w.size() ? arrows_[w[begin]].tgt : source(p));
  if (begin == 0 && end == w.size()) return p;
  return intern(std::vector<std::uint32_t>(w.begin() + static_cast<long>(begin), w.begin() + static_cast<long>(end)));
}

std::vector<std::size_t> Quiver::occurrences(Path d, Path p) const {
  std::vector<std::size_t> out;
  const auto& wd = word(d);
  const auto& wp = word(p);
  if (wd.empty()) {
    for (std::size_t i = 0; i <= wp.size(); ++i)
      if (subpath(p, i, i) == d) out.push_back(i);
    return out;
  }
  if (wd.size() > wp.size()) return out;
  for (std::size_t i = 0; i + wd.size() <= wp.size(); ++i)
    if (std::equal(wd.begin(), wd.end(), wp.begin() + static_cast<long>(i))) out.push_back(i);
  return out;
}

std::vector<std::pair<Path, Path>> Quiver::divisors(Path d, Path p) const {
  std::vector<std::pair<Path, Path>> out;
  std::size_t n = length(p), k = length(d);
  for (std::size_t i : occurrences(d, p)) out.emplace_back(subpath(p, 0, i), subpath(p, i + k, n));
  return out;
}

std::string Quiver::format(Path p) const {
  if (is_trivial(p)) return "e:" + vertices_[source(p)];
  std::string out;
  for (auto a : word(p)) {
    if (!single_char_ids_ && !out.empty()) out += '.';
    out += arrows_[a].id;
  }
  return out;
}

Path Quiver::parse(std::string_view text) const {
  auto err = [&](const std::string& m) { return Error(ErrorCode::ParseError, m + " in path '" + std::string(text) + "'"); };
  std::string_view t = text;
  while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
  while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
  if (t.substr(0, 2) == "e:") {
    auto v = vertex_index(t.substr(2));
    if (!v) throw err("unknown vertex");
    return trivial(*v);
  }
  if (t == "1") {
    if (vertices_.size() != 1) throw err("'1' is ambiguous with several vertices");
    return trivial(0);
  }
  std::vector<std::uint32_t> w;
  std::size_t i = 0;
  while (i < t.size()) {
    if (t[i] == '.' || t[i] == ' ') {
      ++i;
      continue;
    }
    std::size_t best = 0;
    std::uint32_t best_arrow = 0;
    for (std::uint32_t a = 0; a < arrows_.size(); ++a) {
      const auto& id = arrows_[a].id;
      if (id.size() > best && t.substr(i, id.size()) == id) {
        best = id.size();
        best_arrow = a;
      }
    }
    if (!best) throw err("unknown arrow at offset " + std::to_string(i));
    w.push_back(best_arrow);
    i += best;
  }
  if (w.empty()) throw err("empty path");
  auto p = make_path(w);
  if (!p) throw err("arrows are not composable");
  return *p;
}

int Quiver::canonical_compare(Path a, Path b) const {
  if (a == b) return 0;
  const auto& wa = word(a);
  const auto& wb = word(b);
  if (wa.size() != wb.size()) return wa.size() < wb.size() ? -1 : 1;
  if (wa.empty()) return source(a) < source(b) ? -1 : 1;
  for (std::size_t i = 0; i < wa.size(); ++i)
    if (wa[i] != wb[i]) return wa[i] < wb[i] ? -1 : 1;
  return 0;
}

// ---------------------------------------------------------------- PathPoly

PathPoly PathPoly::monomial(const Quiver& q, Path p, const Scalar& c) {
  PathPoly r(&q);
  if (!c.is_zero()) r.terms_.emplace_back(p, c);
  return r;
}

void PathPoly::check_parallel(const Quiver& q) const {
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (!q.parallel(terms_[0].first, terms_[i].first))
      throw Error(ErrorCode::NotParallel, q.format(terms_[0].first) + " and " + q.format(terms_[i].first));
}

PathPoly PathPoly::from_terms(const Quiver& q, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  PathPoly r(&q);
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first)
      r.terms_.back().second += t.second;
    else
      r.terms_.push_back(std::move(t));
    if (r.terms_.back().second.is_zero()) r.terms_.pop_back();
  }
  r.check_parallel(q);
  return r;
}

Scalar PathPoly::coef(Path p) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), p, [](const Term& t, Path x) { return t.first < x; });
  if (it != terms_.end() && it->first == p) return it->second;
  return Scalar();
}

std::vector<Path> PathPoly::support() const {
  std::vector<Path> out;
  for (const auto& t : terms_) out.push_back(t.first);
  if (q_) std::sort(out.begin(), out.end(), [this](Path a, Path b) { return q_->canonical_less(a, b); });
  return out;
}

PathPoly PathPoly::operator+(const PathPoly& o) const {
  PathPoly r(q_ ? q_ : o.q_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar s = terms_[i].second + o.terms_[j].second;
      if (!s.is_zero()) r.terms_.emplace_back(terms_[i].first, std::move(s));
      ++i, ++j;
    }
  }
  if (r.q_ && !terms_.empty() && !o.terms_.empty() && !r.q_->parallel(terms_[0].first, o.terms_[0].first))
    throw Error(ErrorCode::NotParallel, "sum of non-parallel polynomials");
  return r;
}

PathPoly PathPoly::operator-() const {
  PathPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

PathPoly PathPoly::operator-(const PathPoly& o) const { return *this + (-o); }

PathPoly PathPoly::scaled(const Scalar& c) const {
  if (c.is_zero()) return PathPoly(q_);
  PathPoly r = *this;
  for (auto& t : r.terms_) t.second = t.second * c;
  return r;
}

PathPoly PathPoly::operator*(const PathPoly& o) const {
  const Quiver* q = q_ ? q_ : o.q_;
  if (!q) return PathPoly();
  std::vector<Term> out;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_)
      if (auto p = q->concat(a.first, b.first)) out.emplace_back(*p, a.second * b.second);
  return from_terms(*q, std::move(out));
}

PathPoly PathPoly::sandwich(Path a, Path c) const {
  if (!q_) return *this;
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (auto p = q_->concat(a, t.first, c)) out.emplace_back(*p, t.second);
  return from_terms(*q_, std::move(out));
}

bool PathPoly::operator==(const PathPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].first != o.terms_[i].first || terms_[i].second != o.terms_[i].second) return false;
  return true;
}

std::string PathPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (Path p : support()) {
    std::string c = coef(p).str();
    bool neg = c[0] == '-';
    std::string body = neg ? c.substr(1) : c;
    if (body.find_first_of("+-/") != std::string::npos && !coef(p).is_rational()) body = "(" + body + ")";
    if (!out.empty() || neg) out += neg ? "-" : "+";
    if (body != "1") out += body + "*";
    out += q_->format(p);
  }
  return out;
}

}  // namespace pathres
