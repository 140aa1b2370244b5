#include "pathres/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

#include "pathres/errors.hpp"

namespace pathres {

const Field* Field::get(const std::vector<std::string>& names) {
  static std::mutex mu;
  static std::vector<std::unique_ptr<Field>> registry;
  std::lock_guard<std::mutex> lock(mu);
  for (const auto& f : registry)
    if (f->names_ == names) return f.get();
  registry.push_back(std::make_unique<Field>(names));
  return registry.back().get();
}

std::optional<std::size_t> Field::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

// ---------------------------------------------------------------- QPoly

int QPoly::compare(const Exponents& a, const Exponents& b) {
  std::uint64_t da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

void QPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& x, const Term& y) { return compare(x.exps, y.exps) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exps == t.exps)
      out.back().coef += t.coef;
    else
      out.push_back(std::move(t));
    if (out.back().coef == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

QPoly QPoly::constant(std::size_t nvars, const mpq_class& c) {
  QPoly p(nvars);
  if (c != 0) p.terms_.push_back({Exponents(nvars, 0), c});
  return p;
}

QPoly QPoly::variable(std::size_t nvars, std::size_t index) {
  QPoly p(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.terms_.push_back({e, 1});
  return p;
}

bool QPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (auto e : terms_[0].exps)
    if (e) return false;
  return true;
}

mpq_class QPoly::constant_value() const { return terms_.empty() ? mpq_class(0) : terms_[0].coef; }

int QPoly::sole_variable() const {
  int found = -1;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < t.exps.size(); ++i)
      if (t.exps[i]) {
        if (found == -1)
          found = static_cast<int>(i);
        else if (found != static_cast<int>(i))
          return -2;
      }
  return found;
}

QPoly QPoly::operator+(const QPoly& o) const {
  QPoly r(std::max(nvars_, o.nvars_));
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c = i == terms_.size()     ? -1
            : j == o.terms_.size() ? 1
                                   : compare(terms_[i].exps, o.terms_[j].exps);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      mpq_class s = terms_[i].coef + o.terms_[j].coef;
      if (s != 0) r.terms_.push_back({terms_[i].exps, s});
      ++i, ++j;
    }
  }
  return r;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::scaled(const mpq_class& c) const {
  if (c == 0) return QPoly(nvars_);
  QPoly r = *this;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
  QPoly r(std::max(nvars_, o.nvars_));
  if (is_zero() || o.is_zero()) return r;
  r.terms_.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Exponents e(a.exps.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = a.exps[k] + b.exps[k];
      r.terms_.push_back({std::move(e), a.coef * b.coef});
    }
  r.normalize();
  return r;
}

bool QPoly::operator==(const QPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].exps != o.terms_[i].exps || terms_[i].coef != o.terms_[i].coef) return false;
  return true;
}

std::optional<QPoly> QPoly::divide_exact(const QPoly& o) const {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  QPoly q(nvars_), r = *this;
  const Term& lo = o.lead();
  while (!r.is_zero()) {
    const Term& lr = r.lead();
    Exponents e(lr.exps.size());
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (lr.exps[k] < lo.exps[k]) return std::nullopt;
      e[k] = lr.exps[k] - lo.exps[k];
    }
    QPoly t(nvars_);
    t.terms_.push_back({std::move(e), lr.coef / lo.coef});
    r = r - t * o;
    q = q + t;
  }
  return q;
}

Exponents QPoly::min_exponents() const {
  Exponents m(nvars_, 0);
  if (terms_.empty()) return m;
  m = terms_[0].exps;
  for (const auto& t : terms_)
    for (std::size_t k = 0; k < m.size(); ++k) m[k] = std::min(m[k], t.exps[k]);
  return m;
}

QPoly QPoly::divide_monomial(const Exponents& e) const {
  QPoly r = *this;
  for (auto& t : r.terms_)
    for (std::size_t k = 0; k < e.size(); ++k) t.exps[k] -= e[k];
  return r;
}

std::string QPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    mpq_class c = t.coef;
    bool neg = c < 0;
    if (neg) c = -c;
    if (neg)
      out += "-";
    else if (!first)
      out += "+";
    first = false;
    std::string mono;
    for (std::size_t k = 0; k < t.exps.size(); ++k) {
      if (!t.exps[k]) continue;
      if (!mono.empty()) mono += "*";
      mono += names[k];
      if (t.exps[k] > 1) mono += "^" + std::to_string(t.exps[k]);
    }
    if (mono.empty())
      out += c.get_str();
    else if (c == 1)
      out += mono;
    else
      out += c.get_str() + "*" + mono;
  }
  return out;
}

namespace {

using Dense = std::vector<mpq_class>;  // index = degree

Dense to_dense(const QPoly& p, std::size_t var) {
  Dense d;
  for (const auto& t : p.terms()) {
    std::size_t deg = t.exps.empty() ? 0 : t.exps[var];
    if (d.size() <= deg) d.resize(deg + 1, 0);
    d[deg] += t.coef;
  }
  while (!d.empty() && d.back() == 0) d.pop_back();
  return d;
}

QPoly from_dense(const Dense& d, std::size_t nvars, std::size_t var) {
  QPoly r(nvars);
  for (std::size_t deg = 0; deg < d.size(); ++deg) {
    if (d[deg] == 0) continue;
    QPoly m = QPoly::constant(nvars, d[deg]);
    for (std::size_t k = 0; k < deg; ++k) m = m * QPoly::variable(nvars, var);
    r = r + m;
  }
  return r;
}

Dense dense_rem(Dense a, const Dense& b) {
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

}  // namespace

QPoly univariate_gcd(const QPoly& a, const QPoly& b, std::size_t var) {
  Dense x = to_dense(a, var), y = to_dense(b, var);
  while (!y.empty()) {
    Dense r = dense_rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.empty()) {
    mpq_class l = x.back();
    for (auto& c : x) c /= l;
  }
  return from_dense(x, std::max(a.nvars(), b.nvars()), var);
}

// ---------------------------------------------------------------- Scalar

Scalar Scalar::parameter(const Field* field, std::size_t index) {
  auto n = field->size();
  if (index >= n) throw Error(ErrorCode::BadParams, "parameter index out of range");
  return from_fraction(field, QPoly::variable(n, index), QPoly::constant(n, 1));
}

Scalar Scalar::from_fraction(const Field* field, QPoly num, QPoly den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (num.is_zero()) return Scalar();
  std::size_t nv = field ? field->size() : 0;
  if (!den.is_constant() || !num.is_constant()) {
    Exponents m = num.min_exponents(), md = den.min_exponents();
    bool any = false;
    for (std::size_t k = 0; k < m.size(); ++k) {
      m[k] = std::min(m[k], md[k]);
      any = any || m[k];
    }
    if (any) {
      num = num.divide_monomial(m);
      den = den.divide_monomial(m);
    }
  }
  if (!den.is_constant()) {
    if (auto q = num.divide_exact(den)) {
      num = std::move(*q);
      den = QPoly::constant(nv, 1);
    } else if (auto q2 = den.divide_exact(num)) {
      num = QPoly::constant(nv, 1);
      den = std::move(*q2);
    } else {
      int vn = num.sole_variable(), vd = den.sole_variable();
      if (vd >= 0 && (vn == vd || vn == -1)) {
        QPoly g = univariate_gcd(num, den, static_cast<std::size_t>(vd));
        if (!g.is_constant()) {
          num = *num.divide_exact(g);
          den = *den.divide_exact(g);
        }
      }
    }
  }
  mpq_class lc = den.lead().coef;
  if (lc != 1) {
    mpq_class inv = 1 / lc;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  if (num.is_constant() && den.is_constant()) return Scalar(num.constant_value());
  Scalar s;
  s.f_ = std::make_shared<RationalFunction>(RationalFunction{field, std::move(num), std::move(den)});
  return s;
}

std::pair<QPoly, QPoly> Scalar::as_fraction(std::size_t nvars) const {
  if (f_) return {f_->num, f_->den};
  return {QPoly::constant(nvars, q_), QPoly::constant(nvars, 1)};
}

const Field* Scalar::common_field(const Scalar& a, const Scalar& b) {
  const Field* fa = a.field();
  const Field* fb = b.field();
  if (fa && fb && fa != fb) throw Error(ErrorCode::MixedFields, "operands belong to different fields");
  return fa ? fa : fb;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (!f_ && !o.f_) return Scalar(q_ + o.q_);
  const Field* F = common_field(*this, o);
  auto nv = F->size();
  auto [an, ad] = as_fraction(nv);
  auto [bn, bd] = o.as_fraction(nv);
  if (ad == bd) return from_fraction(F, an + bn, ad);
  return from_fraction(F, an * bd + bn * ad, ad * bd);
}

Scalar Scalar::operator-() const {
  if (!f_) return Scalar(mpq_class(-q_));
  Scalar s;
  s.f_ = std::make_shared<RationalFunction>(RationalFunction{f_->field, -f_->num, f_->den});
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (!f_ && !o.f_) return Scalar(q_ * o.q_);
  if (is_zero() || o.is_zero()) return Scalar();
  const Field* F = common_field(*this, o);
  if (!f_ || !o.f_) {
    const Scalar& r = f_ ? o : *this;
    const Scalar& g = f_ ? *this : o;
    Scalar s;
    s.f_ = std::make_shared<RationalFunction>(
        RationalFunction{F, g.f_->num.scaled(r.q_), g.f_->den});
    return s;
  }
  return from_fraction(F, f_->num * o.f_->num, f_->den * o.f_->den);
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (!f_) return Scalar(mpq_class(1 / q_));
  return from_fraction(f_->field, f_->den, f_->num);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Scalar result(1), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!f_ && !o.f_) return q_ == o.q_;
  if (!f_ || !o.f_) return false;
  common_field(*this, o);
  return f_->num * o.f_->den == o.f_->num * f_->den;
}

std::string Scalar::str() const {
  if (!f_) return q_.get_str();
  const auto& names = f_->field->parameters();
  std::string n = f_->num.str(names);
  if (f_->den.is_constant()) return n;
  bool simple_num = f_->num.terms().size() == 1 && f_->num.lead().coef == 1;
  return (simple_num ? n : "(" + n + ")") + "/(" + f_->den.str(names) + ")";
}

namespace {

QPoly substitute(const QPoly& p, std::size_t target_nvars, const std::vector<std::optional<mpq_class>>& values,
                 const std::vector<std::size_t>& remap) {
  QPoly r(target_nvars);
  for (const auto& t : p.terms()) {
    mpq_class c = t.coef;
    Exponents e(target_nvars, 0);
    for (std::size_t k = 0; k < t.exps.size(); ++k) {
      if (!t.exps[k]) continue;
      if (values[k]) {
        mpq_class v = *values[k];
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), v.get_num_mpz_t(), t.exps[k]);
        mpz_pow_ui(den.get_mpz_t(), v.get_den_mpz_t(), t.exps[k]);
        c *= mpq_class(num, den);
      } else {
        e[remap[k]] += t.exps[k];
      }
    }
    c.canonicalize();
    QPoly m(target_nvars);
    m = QPoly::constant(target_nvars, c);
    if (c != 0) {
      QPoly mono = QPoly::constant(target_nvars, 1);
      for (std::size_t k = 0; k < target_nvars; ++k)
        for (std::uint32_t j = 0; j < e[k]; ++j) mono = mono * QPoly::variable(target_nvars, k);
      r = r + m * mono;
    }
  }
  return r;
}

}  // namespace

Scalar Scalar::specialize(const Field* target, const std::vector<std::optional<mpq_class>>& values) const {
  if (!f_) return *this;
  const Field* src = f_->field;
  if (values.size() != src->size()) throw Error(ErrorCode::BadParams, "specialization arity mismatch");
  std::vector<std::size_t> remap(src->size(), 0);
  for (std::size_t k = 0; k < src->size(); ++k) {
    if (values[k]) continue;
    auto idx = target ? target->index_of(src->parameters()[k]) : std::nullopt;
    if (!idx) throw Error(ErrorCode::BadParams, "parameter " + src->parameters()[k] + " missing from target field");
    remap[k] = *idx;
  }
  std::size_t tn = target ? target->size() : 0;
  QPoly n = substitute(f_->num, tn, values, remap);
  QPoly d = substitute(f_->den, tn, values, remap);
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "specialization makes a denominator vanish");
  return from_fraction(target ? target : Field::rationals(), n, d);
}

// ---------------------------------------------------------------- parser

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view s, const Field* f) : s_(s), field_(f) {}

  Scalar run() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw Error(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }
  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        Scalar d = unary();
        if (d.is_zero()) fail("division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }
  Scalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Scalar power() {
    Scalar base = atom();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      long e = std::stol(std::string(s_.substr(start, pos_ - start)));
      if (neg && base.is_zero()) fail("division by zero");
      return base.pow(neg ? -e : e);
    }
    return base;
  }
  Scalar atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Scalar(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto idx = field_ ? field_->index_of(name) : std::nullopt;
      if (!idx) fail("unknown parameter '" + name + "'");
      return Scalar::parameter(field_, *idx);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  const Field* field_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, const Field* field) { return ScalarParser(text, field).run(); }

}  // namespace pathres
