#include "pathres/tensor.hpp"

#include <algorithm>

#include "pathres/errors.hpp"

namespace pathres {

TensorElt TensorElt::from_terms(int degree, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  TensorElt r(degree);
  r.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first)
      r.terms_.back().second += t.second;
    else
      r.terms_.push_back(std::move(t));
    if (r.terms_.back().second.is_zero()) r.terms_.pop_back();
  }
  return r;
}

Scalar TensorElt::coef(const TensorKey& k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k, [](const Term& t, const TensorKey& x) { return t.first < x; });
  if (it != terms_.end() && it->first == k) return it->second;
  return Scalar();
}

void TensorElt::check_degree(const TensorElt& o) const {
  if (degree_ != o.degree_)
    throw Error(ErrorCode::DegreeMismatch,
                "degrees " + std::to_string(degree_) + " and " + std::to_string(o.degree_));
}

TensorElt TensorElt::operator+(const TensorElt& o) const {
  check_degree(o);
  TensorElt r(degree_);
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
  return r;
}

TensorElt TensorElt::operator-() const {
  TensorElt r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

TensorElt TensorElt::operator-(const TensorElt& o) const { return *this + (-o); }

TensorElt TensorElt::scaled(const Scalar& c) const {
  if (c.is_zero()) return TensorElt(degree_);
  TensorElt r = *this;
  for (auto& t : r.terms_) t.second = t.second * c;
  return r;
}

bool TensorElt::operator==(const TensorElt& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  if (!terms_.empty() && degree_ != o.degree_) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].first != o.terms_[i].first || terms_[i].second != o.terms_[i].second) return false;
  return true;
}

void TensorBuilder::add(const TensorElt& x, const Scalar& c) {
  if (x.degree() != degree_ && !x.is_zero())
    throw Error(ErrorCode::DegreeMismatch, "builder of degree " + std::to_string(degree_));
  for (const auto& [k, v] : x.terms()) add(k, v * c);
}

TensorElt TensorOps::sandwich_free(Path a, const TensorElt& x, Path c) const {
  const Quiver& q = r_->quiver();
  TensorBuilder b(x.degree());
  for (const auto& [k, v] : x.terms()) {
    auto l = q.concat(a, k.l());
    auto r = q.concat(k.r(), c);
    if (l && r) b.add(TensorKey::of(*l, k.g(), *r), v);
  }
  return b.build();
}

TensorElt TensorOps::sandwich(Path a, const TensorElt& x, Path c) const {
  const Quiver& q = r_->quiver();
  TensorBuilder b(x.degree());
  for (const auto& [k, v] : x.terms()) {
    auto l = q.concat(a, k.l());
    auto r = q.concat(k.r(), c);
    if (!l || !r) continue;
    const PathPoly& bl = r_->beta(*l);
    const PathPoly& br = r_->beta(*r);
    for (const auto& [pl, cl] : bl.terms())
      for (const auto& [pr, cr] : br.terms()) b.add(TensorKey::of(pl, k.g(), pr), v * cl * cr);
  }
  return b.build();
}

TensorElt TensorOps::sandwich(const PathPoly& a, const TensorElt& x, const PathPoly& c) const {
  TensorBuilder b(x.degree());
  for (const auto& [pa, ca] : a.terms())
    for (const auto& [pc, cc] : c.terms()) b.add(sandwich(pa, x, pc), ca * cc);
  return b.build();
}

TensorElt TensorOps::project(const TensorElt& x) const {
  TensorBuilder b(x.degree());
  for (const auto& [k, v] : x.terms()) {
    const PathPoly& bl = r_->beta(k.l());
    const PathPoly& br = r_->beta(k.r());
    for (const auto& [pl, cl] : bl.terms())
      for (const auto& [pr, cr] : br.terms()) b.add(TensorKey::of(pl, k.g(), pr), v * cl * cr);
  }
  return b.build();
}

std::string format_path(const Quiver& q, Path p, bool latex) {
  if (q.is_trivial(p)) return q.num_vertices() == 1 || latex ? "1" : q.format(p);
  if (!latex) return q.format(p);
  std::string out;
  const auto& w = q.word(p);
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    out += q.arrow(w[i]).id;
    if (j - i > 1) out += "^{" + std::to_string(j - i) + "}";
    i = j;
  }
  return out;
}

std::vector<TensorElt::Term> canonical_terms(const Quiver& q, const TensorElt& x) {
  std::vector<TensorElt::Term> t = x.terms();
  std::sort(t.begin(), t.end(), [&](const TensorElt::Term& a, const TensorElt::Term& b) {
    if (int c = q.canonical_compare(a.first.g(), b.first.g())) return c < 0;
    if (int c = q.canonical_compare(a.first.l(), b.first.l())) return c < 0;
    return q.canonical_compare(a.first.r(), b.first.r()) < 0;
  });
  return t;
}

namespace {

std::string dual_name(const Quiver& q, Path g, bool latex) {
  if (q.is_trivial(g)) return latex ? "1^{*}" : format_path(q, g) + "*";
  std::string s = format_path(q, g, latex);
  return latex ? "(" + s + ")^{*}" : s + "*";
}

std::string coef_text(const Scalar& c, bool latex, bool& negative) {
  std::string s = c.str();
  negative = s[0] == '-';
  if (negative) s = s.substr(1);
  bool compound = s.find_first_of("+-/") != std::string::npos && !c.is_rational();
  if (latex) {
    std::string t;
    for (char ch : s) t += ch == '*' ? std::string("\\,") : std::string(1, ch);
    s = t;
  }
  if (compound) s = "(" + s + ")";
  return s == "1" ? "" : s;
}

}  // namespace

std::string format_tensor(const Quiver& q, const TensorElt& x, const TensorFormat& f) {
  if (x.is_zero()) return "0";
  const char* otimes = f.latex ? " \\otimes " : " (x) ";
  std::string out;
  for (const auto& [k, v] : canonical_terms(q, x)) {
    bool neg = false;
    std::string c = coef_text(v, f.latex, neg);
    if (!out.empty())
      out += neg ? " - " : " + ";
    else if (neg)
      out += "-";
    if (!c.empty()) out += c + (f.latex ? "\\," : " ");
    std::string g = f.dual ? dual_name(q, k.g(), f.latex) : format_path(q, k.g(), f.latex);
    if (x.degree() == -2) {
      out += format_path(q, k.l(), f.latex);
    } else {
      out += format_path(q, k.l(), f.latex) + otimes + g + otimes + format_path(q, k.r(), f.latex);
    }
  }
  return out;
}

}  // namespace pathres
