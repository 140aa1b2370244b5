#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <set>
#include <tuple>
#include <vector>

#include "pathres/chains.hpp"
#include "pathres/rewrite.hpp"
#include "pathres/tensor.hpp"

namespace pathres {

struct ResolutionOptions {
  // Derive d_1 and d_2 through the general recursion instead of the
  // closed descriptions via phi_0 and phi_1.
  bool generic_low_degrees = false;
  // Skip the diamond check on construction.
  bool assume_diamond = false;
  std::size_t rho_fuel = 2000000;
};

// The deformed Bardzell resolution of A = kQ/I for a reduction system with
// the diamond property. Degree n elements live in A (x) kA_n (x) A; degree -2
// is A itself. d_n lowers the degree by one; rho_n and s_n raise it by one,
// taking degree n-1 to degree n.
class Resolution {
 public:
  explicit Resolution(const ReductionSystem& r, ResolutionOptions opts = {});

  const ReductionSystem& system() const { return *r_; }
  const Quiver& quiver() const { return r_->quiver(); }
  const ChainIndex& chain_index() const { return chains_; }
  const TensorOps& ops() const { return ops_; }
  const std::vector<Path>& generators(int n) const { return chains_.generators(n); }

  TensorElt unit(int n, Path gen) const;           // 1 (x) gen (x) 1
  TensorElt basis(int n, Path gen, Path b) const;  // 1 (x) gen (x) b
  TensorElt algebra(const PathPoly& a) const;      // degree -2

  // f_n and S_n over kQ.
  TensorElt bardzell(int n, const TensorElt& x) const;
  TensorElt skoldberg(int n, const TensorElt& x) const;
  // Their reductions delta_n = pi f_n i and s_n = pi S_n i.
  TensorElt delta(int n, const TensorElt& x) const;
  TensorElt s(int n, const TensorElt& x) const;

  TensorElt phi0(const PathPoly& c) const;
  TensorElt phi1(const Trace& t, const PathPoly& x) const;

  const TensorElt& d_unit(int n, Path gen);
  TensorElt d(int n, const TensorElt& x);
  TensorElt rho(int n, const TensorElt& x);
  const TensorElt& rho_basis(int n, Path gen, Path b);

  // Differentials d_0 .. d_N.
  void build(int N);
  std::size_t rho_evaluations() const { return rho_evals_; }

 private:
  TensorElt bardzell_unit(int n, Path q) const;
  TensorElt skoldberg_unit(int n, Path q, Path b) const;
  TensorElt d2_overlap(Path p);

  const ReductionSystem* r_;
  ResolutionOptions opts_;
  ChainIndex chains_;
  TensorOps ops_;
  std::map<std::pair<int, std::uint32_t>, TensorElt> d_;
  std::map<int, std::unordered_map<std::uint64_t, TensorElt>> rho_;
  std::set<std::tuple<int, std::uint32_t, std::uint32_t>> rho_active_;
  std::size_t rho_evals_ = 0;
};

// Every rule is homogeneous for path length.
bool length_graded(const ReductionSystem& r);

// Same tips with zero right-hand sides.
ReductionSystem monomial_system(const ReductionSystem& r);

struct VerifyOptions {
  bool strict_prec = false;
  std::size_t length_cap = 4;
  std::size_t reach_fuel = 10000;
};

struct VerifyReport {
  int degree = 0;
  bool d_squared_zero = true;
  bool support_ok = true;
  bool contraction_ok = true;
  std::size_t checked_triples = 0;
  std::vector<std::string> failures;
  bool ok() const { return d_squared_zero && support_ok && contraction_ok; }
};

// (a) d o d = 0 through degree N; (b) each d_n(1 (x) q (x) 1) - delta_n(...)
// is supported on elements strictly below q; (c) d rho + rho d = id on basis
// triples 1 (x) q (x) b with |b| <= length_cap, for degrees -1 .. N-1.
VerifyReport verify_tower(Resolution& res, int N, const VerifyOptions& opts = {});

struct SkoldbergReport {
  bool ok = true;
  std::size_t checked = 0;
  std::vector<std::string> failures;
};

// delta s + s delta = id over the monomial algebra of the tips.
SkoldbergReport check_skoldberg(const ReductionSystem& r, int N, std::size_t length_cap);

struct MinimalityReport {
  bool minimal = true;
  std::vector<std::string> offending;
};

// Every term of every d_n (1 <= n <= N) has a factor of positive length.
MinimalityReport check_minimal(Resolution& res, int N);

struct KoszulReport {
  bool quadratic = false;
  std::optional<std::size_t> homogeneous_degree;  // common length of tips and rhs terms
  bool chain_growth = false;                      // A_n concentrated in the expected length
  bool koszul = false;
  std::string kind;
};

KoszulReport koszul_check(const ReductionSystem& r, int max_degree = 6);

// Dual maps d_n^* : A (x) kA_{n-1}^* (x) A -> A (x) kA_n^* (x) A for n = 0..N,
// keyed by the source generator. Terms use the generator of A_n.
struct DualComplex {
  int top = 0;
  std::map<int, std::vector<std::pair<Path, TensorElt>>> maps;
  const TensorElt& at(int n, Path gen) const;
};

DualComplex dualize(Resolution& res, int N);

}  // namespace pathres
