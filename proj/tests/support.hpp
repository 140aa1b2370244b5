#pragma once

#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pathres/calabi_yau.hpp"
#include "pathres/chains.hpp"
#include "pathres/cli.hpp"
#include "pathres/completion.hpp"
#include "pathres/complex.hpp"
#include "pathres/document.hpp"
#include "pathres/errors.hpp"
#include "pathres/examples.hpp"
#include "pathres/order.hpp"
#include "pathres/rewrite.hpp"
#include "pathres/scalar.hpp"
#include "pathres/tensor.hpp"

namespace support {

using namespace pathres;

struct Loaded {
  Example ex;
  Problem pr;
  std::unique_ptr<ReductionSystem> rs;
  const Quiver& q() const { return *pr.quiver; }
  const Field* field() const { return pr.field; }
  Path P(const std::string& s) const { return pr.quiver->parse(s); }
};

inline ExampleParams qci_params(long n, long m, std::map<std::string, std::string> values = {}) {
  ExampleParams p;
  p.ints = {{"n", n}, {"m", m}};
  p.values = std::move(values);
  return p;
}

inline ExampleParams with_values(std::map<std::string, std::string> values, std::string system = "") {
  ExampleParams p;
  p.values = std::move(values);
  p.system = std::move(system);
  return p;
}

inline std::unique_ptr<Loaded> load(const std::string& name, const ExampleParams& p = {}) {
  auto L = std::make_unique<Loaded>();
  L->ex = example(name, p);
  L->pr = instantiate(L->ex.doc);
  std::vector<Rule> rules = L->pr.rules;
  if (!L->pr.has_rules)
    rules = complete(*L->pr.quiver, orient(*L->pr.quiver, L->pr.generators, *L->pr.order), *L->pr.order).rules;
  L->rs = std::make_unique<ReductionSystem>(*L->pr.quiver, rules);
  return L;
}

inline std::string pw(const std::string& a, long k) {
  std::string s;
  for (long i = 0; i < k; ++i) s += a;
  return s.empty() ? "1" : s;
}

inline std::string cat(const std::string& a, const std::string& b) {
  if (a == "1") return b;
  if (b == "1") return a;
  return a + b;
}

struct Term {
  Scalar c;
  std::string l, g, r;
};

inline TensorElt tensor(const Quiver& q, int degree, const std::vector<Term>& terms) {
  TensorBuilder b(degree);
  for (const auto& t : terms) b.add(TensorKey::of(q.parse(t.l), q.parse(t.g), q.parse(t.r)), t.c);
  return b.build();
}

// ---- chain oracle: straight from the definition of an n-ambiguity --------

struct Words {
  std::vector<std::string> alphabet;
  std::vector<std::string> tips;
  bool irreducible(const std::string& w) const {
    for (const auto& t : tips)
      if (w.find(t) != std::string::npos) return false;
    return true;
  }
};

// Nonempty irreducible words of length <= L.
inline std::vector<std::string> irreducible_words(const Words& W, std::size_t L) {
  std::vector<std::string> out, frontier = {""};
  for (std::size_t len = 1; len <= L; ++len) {
    std::vector<std::string> next;
    for (const auto& w : frontier)
      for (const auto& a : W.alphabet)
        if (W.irreducible(w + a)) next.push_back(w + a);
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

// All n-ambiguities of length <= L: p = u_0 u_1 ... u_n, u_0 a letter, each
// u_i (i >= 1) irreducible, u_i u_{i+1} reducible while u_i d is irreducible
// for every proper left divisor d of u_{i+1}.
inline std::set<std::string> brute_chains(const Words& W, int n, std::size_t L) {
  std::set<std::string> out;
  if (n == 0) {
    for (const auto& a : W.alphabet) out.insert(a);
    return out;
  }
  auto irr = irreducible_words(W, L);
  std::function<void(const std::string&, const std::string&, int)> go = [&](const std::string& acc,
                                                                            const std::string& last, int i) {
    if (i == n) {
      out.insert(acc);
      return;
    }
    for (const auto& u : irr) {
      if (acc.size() + u.size() > L) continue;
      if (W.irreducible(last + u)) continue;
      bool minimal = true;
      for (std::size_t k = 0; k < u.size() && minimal; ++k)
        if (!W.irreducible(last + u.substr(0, k))) minimal = false;
      if (minimal) go(acc + u, u, i + 1);
    }
  };
  for (const auto& a : W.alphabet) go(a, a, 0);
  return out;
}

// ---- basis oracle: dimensions of graded pieces of kQ/I by row reduction ----

using Vec = std::map<std::string, mpq_class>;
using Relation = Vec;

// Row space over Q with rows reduced against pivots (largest key).
class RowSpace {
 public:
  // False when v already lies in the span.
  bool insert(Vec v) {
    reduce(v);
    if (v.empty()) return false;
    auto lead = std::prev(v.end());
    mpq_class c = lead->second;
    for (auto& [k, x] : v) x /= c;
    std::string key = lead->first;
    pivots_.emplace(key, std::move(v));
    return true;
  }
  bool contains(Vec v) const {
    reduce(v);
    return v.empty();
  }
  std::size_t rank() const { return pivots_.size(); }

 private:
  void reduce(Vec& v) const {
    while (!v.empty()) {
      auto lead = std::prev(v.end());
      auto it = pivots_.find(lead->first);
      if (it == pivots_.end()) return;
      mpq_class c = lead->second;
      for (const auto& [k, x] : it->second) {
        v[k] -= c * x;
        if (v[k] == 0) v.erase(k);
      }
    }
  }
  std::map<std::string, Vec> pivots_;
};

inline std::vector<std::string> words_of_length(const std::vector<std::string>& alphabet, std::size_t d) {
  std::vector<std::string> w = {""};
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<std::string> next;
    for (const auto& x : w)
      for (const auto& a : alphabet) next.push_back(x + a);
    w = std::move(next);
  }
  return w;
}

// Degree-d part of the two-sided ideal generated by homogeneous relations over
// a one-vertex quiver.
inline RowSpace ideal_component(const std::vector<std::string>& alphabet, const std::vector<Relation>& rels,
                                std::size_t d) {
  RowSpace space;
  for (const auto& rel : rels) {
    std::size_t rd = rel.begin()->first.size();
    if (rd > d) continue;
    for (std::size_t la = 0; la + rd <= d; ++la)
      for (const auto& a : words_of_length(alphabet, la))
        for (const auto& c : words_of_length(alphabet, d - rd - la)) {
          Vec v;
          for (const auto& [w, x] : rel) v[a + w + c] += x;
          space.insert(std::move(v));
        }
  }
  return space;
}

// dim (kQ/I)_d
inline std::size_t quotient_dimension(const std::vector<std::string>& alphabet, const std::vector<Relation>& rels,
                                      std::size_t d) {
  std::size_t total = 1;
  for (std::size_t k = 0; k < d; ++k) total *= alphabet.size();
  return total - ideal_component(alphabet, rels, d).rank();
}

inline std::vector<std::size_t> irreducible_counts(const ReductionSystem& r, std::size_t cap) {
  std::vector<std::size_t> c(cap + 1, 0);
  for (Path p : r.irreducible_basis(cap)) ++c[r.quiver().length(p)];
  return c;
}

// ---- closed forms -----------------------------------------------------------

// Happel algebra, d_n(1 (x) y^s x^t (x) 1) with s + t = n + 1.
inline TensorElt happel_closed(const Quiver& q, const Scalar& xi, int n, long s, long t) {
  Scalar sgn_n = (n + 1) % 2 == 0 ? Scalar(1) : Scalar(-1);
  if (t == 0) return tensor(q, n - 1, {{1, "y", pw("y", n), "1"}, {sgn_n, "1", pw("y", n), "y"}});
  if (s == 0) return tensor(q, n - 1, {{1, "x", pw("x", n), "1"}, {sgn_n, "1", pw("x", n), "x"}});
  Scalar es = s % 2 == 0 ? Scalar(1) : Scalar(-1);
  std::string a = cat(pw("y", s - 1), pw("x", t)), b = cat(pw("y", s), pw("x", t - 1));
  return tensor(q, n - 1,
                {{1, "y", a, "1"}, {sgn_n, "1", b, "x"}, {es * xi.pow(s), "x", b, "1"}, {es * xi.pow(t), "1", a, "y"}});
}

inline long phi(long s, long n) { return s % 2 == 0 ? (s / 2) * n : ((s - 1) / 2) * n + 1; }

inline std::string qci_chain(long s, long t, long n, long m) { return cat(pw("y", phi(s, m)), pw("x", phi(t, n))); }

// Quantum complete intersection x^n = y^m = 0, yx = xi xy: the four parity
// cases, with the (s-1, t) part absent for s = 0 and (s, t-1) for t = 0.
inline TensorElt qci_closed(const Quiver& q, const Scalar& xi, long n, long m, int N, long s, long t) {
  std::vector<Term> terms;
  Scalar es = s % 2 == 0 ? Scalar(1) : Scalar(-1);
  Scalar eN = (N + 1) % 2 == 0 ? Scalar(1) : Scalar(-1);
  if (s > 0) {
    std::string g = qci_chain(s - 1, t, n, m);
    if (s % 2 == 0) {
      terms.push_back({1, pw("y", m - 1), g, "1"});
      for (long j = 1; j <= m - 1; ++j) terms.push_back({es * xi.pow(phi(t, n) * j), pw("y", m - 1 - j), g, pw("y", j)});
    } else {
      terms.push_back({1, "y", g, "1"});
      terms.push_back({es * xi.pow(phi(t, n)), "1", g, "y"});
    }
  }
  if (t > 0) {
    std::string g = qci_chain(s, t - 1, n, m);
    if (t % 2 == 0) {
      terms.push_back({eN, "1", g, pw("x", n - 1)});
      for (long i = 1; i <= n - 1; ++i) terms.push_back({es * xi.pow(phi(s, m) * i), pw("x", i), g, pw("x", n - 1 - i)});
    } else {
      terms.push_back({eN, "1", g, "x"});
      terms.push_back({es * xi.pow(phi(s, m)), "x", g, "1"});
    }
  }
  return tensor(q, N - 1, terms);
}

// ---- random data ------------------------------------------------------------

inline mpq_class random_rational(std::mt19937_64& g) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  mpq_class r(num(g), den(g));
  r.canonicalize();
  return r;
}

inline Path random_path(const Quiver& q, std::mt19937_64& g, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::uint32_t> letter(0, static_cast<std::uint32_t>(q.num_arrows() - 1));
  std::vector<std::uint32_t> w(len(g));
  for (auto& a : w) a = letter(g);
  if (w.empty()) return q.trivial(0);
  auto p = q.make_path(w);
  return p ? *p : q.trivial(0);
}

}  // namespace support
