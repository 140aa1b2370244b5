#pragma once

#include <compare>
#include <string>
#include <vector>

#include "pathres/quiver.hpp"
#include "pathres/rewrite.hpp"

namespace pathres {

// left (x) gen (x) right, with gen a chain of the element's degree. Degree -2
// stands for the algebra itself: key (p, e, e) with e the source of p.
struct TensorKey {
  std::uint32_t left;
  std::uint32_t gen;
  std::uint32_t right;
  static TensorKey of(Path l, Path g, Path r) { return {l.id, g.id, r.id}; }
  Path l() const { return Path{left}; }
  Path g() const { return Path{gen}; }
  Path r() const { return Path{right}; }
  auto operator<=>(const TensorKey&) const = default;
};

class TensorElt {
 public:
  using Term = std::pair<TensorKey, Scalar>;

  TensorElt() = default;
  explicit TensorElt(int degree) : degree_(degree) {}
  static TensorElt from_terms(int degree, std::vector<Term> terms);

  int degree() const { return degree_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coef(const TensorKey& k) const;

  TensorElt operator+(const TensorElt& o) const;
  TensorElt operator-(const TensorElt& o) const;
  TensorElt operator-() const;
  TensorElt scaled(const Scalar& c) const;
  bool operator==(const TensorElt& o) const;
  bool operator!=(const TensorElt& o) const { return !(*this == o); }

 private:
  void check_degree(const TensorElt& o) const;

  int degree_ = 0;
  std::vector<Term> terms_;  // sorted by key, no zeros
};

// Collects terms, then sorts and merges once.
class TensorBuilder {
 public:
  explicit TensorBuilder(int degree) : degree_(degree) {}
  void add(const TensorKey& k, const Scalar& c) {
    if (!c.is_zero()) terms_.emplace_back(k, c);
  }
  void add(const TensorElt& x, const Scalar& c = Scalar(1));
  TensorElt build() { return TensorElt::from_terms(degree_, std::move(terms_)); }

 private:
  int degree_;
  std::vector<TensorElt::Term> terms_;
};

// Multiplication of tensor factors.
class TensorOps {
 public:
  explicit TensorOps(const ReductionSystem& r) : r_(&r) {}

  // a * x * c with factors concatenated in kQ.
  TensorElt sandwich_free(Path a, const TensorElt& x, Path c) const;
  // a * x * c with factors reduced to normal form.
  TensorElt sandwich(Path a, const TensorElt& x, Path c) const;
  TensorElt sandwich(const PathPoly& a, const TensorElt& x, const PathPoly& c) const;
  // Every factor replaced by its normal form.
  TensorElt project(const TensorElt& x) const;

 private:
  const ReductionSystem* r_;
};

struct TensorFormat {
  bool latex = false;
  bool dual = false;  // generators printed as duals
};

std::string format_path(const Quiver& q, Path p, bool latex = false);
std::string format_tensor(const Quiver& q, const TensorElt& x, const TensorFormat& f = {});
// Terms sorted canonically: (gen, left, right).
std::vector<TensorElt::Term> canonical_terms(const Quiver& q, const TensorElt& x);

}  // namespace pathres
