#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pathres {

// A coefficient field: Q when there are no parameters, otherwise the field of
// rational functions Q(p_1, ..., p_k). Instances are interned, so two fields are
// the same iff their pointers are equal.
class Field {
 public:
  static const Field* get(const std::vector<std::string>& names);
  static const Field* rationals() { return get({}); }

  const std::vector<std::string>& parameters() const { return names_; }
  std::size_t size() const { return names_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  explicit Field(std::vector<std::string> names) : names_(std::move(names)) {}

 private:
  std::vector<std::string> names_;
};

using Exponents = std::vector<std::uint32_t>;

// Multivariate polynomial over Q. Terms are kept sorted by descending graded
// lexicographic order with no zero coefficients.
class QPoly {
 public:
  struct Term {
    Exponents exps;
    mpq_class coef;
  };

  QPoly() = default;
  explicit QPoly(std::size_t nvars) : nvars_(nvars) {}
  static QPoly constant(std::size_t nvars, const mpq_class& c);
  static QPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  mpq_class constant_value() const;  // pre: is_constant()
  const Term& lead() const { return terms_.front(); }
  // Index of the only variable occurring, -1 if none, -2 if several.
  int sole_variable() const;

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator-() const;
  QPoly scaled(const mpq_class& c) const;
  bool operator==(const QPoly& o) const;

  // Quotient if o divides *this exactly.
  std::optional<QPoly> divide_exact(const QPoly& o) const;
  // Exponent-wise minimum over all terms.
  Exponents min_exponents() const;
  QPoly divide_monomial(const Exponents& e) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  static int compare(const Exponents& a, const Exponents& b);
  void normalize();

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

// Univariate gcd (monic) for polynomials using at most one variable `var`.
QPoly univariate_gcd(const QPoly& a, const QPoly& b, std::size_t var);

struct RationalFunction {
  const Field* field;
  QPoly num;
  QPoly den;  // monic, non-constant
};

// Field element. Values that happen to be constants are always stored in the
// rational fast path regardless of the field they came from, so constants mix
// freely with every field.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  static Scalar parameter(const Field* field, std::size_t index);
  static Scalar from_fraction(const Field* field, QPoly num, QPoly den);

  bool is_zero() const { return !f_ && q_ == 0; }
  bool is_one() const { return !f_ && q_ == 1; }
  bool is_rational() const { return !f_; }
  const mpq_class& rational() const { return q_; }
  const Field* field() const { return f_ ? f_->field : nullptr; }
  const RationalFunction* function() const { return f_.get(); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inv() const;
  Scalar pow(long e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Parseable text form.
  std::string str() const;
  // Substitutes rational values for some or all parameters of `field`.
  Scalar specialize(const Field* target, const std::vector<std::optional<mpq_class>>& values) const;

 private:
  // Numerator/denominator over `field` (constants promoted).
  std::pair<QPoly, QPoly> as_fraction(std::size_t nvars) const;
  static const Field* common_field(const Scalar& a, const Scalar& b);

  mpq_class q_ = 0;
  std::shared_ptr<const RationalFunction> f_;
};

// Grammar: expr := term (('+'|'-') term)*, term := unary (('*'|'/') unary)*,
// unary := ('-'|'+') unary | power, power := atom ('^' integer)?,
// atom := integer | name | '(' expr ')'.
Scalar parse_scalar(std::string_view text, const Field* field);

}  // namespace pathres
