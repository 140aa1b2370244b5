#pragma once

#include <compare>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pathres/scalar.hpp"

namespace pathres {

// Handle to an interned path. Paths are words [c_n, ..., c_1] written left to
// right; composition is right to left, so c_1 is traversed first.
struct Path {
  std::uint32_t id = 0;
  friend auto operator<=>(Path, Path) = default;
};

struct Arrow {
  std::string id;
  std::uint32_t src;
  std::uint32_t tgt;
};

// Finite quiver together with its path intern table. The table grows from
// const methods; a Quiver must be confined to one thread.
class Quiver {
 public:
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);
  Quiver(const Quiver&) = delete;
  Quiver& operator=(const Quiver&) = delete;

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }
  const std::string& vertex_name(std::uint32_t v) const { return vertices_[v]; }
  const Arrow& arrow(std::uint32_t a) const { return arrows_[a]; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::optional<std::uint32_t> vertex_index(std::string_view name) const;
  std::optional<std::uint32_t> arrow_index(std::string_view name) const;

  Path trivial(std::uint32_t v) const { return Path{v}; }
  Path arrow_path(std::uint32_t a) const { return Path{static_cast<std::uint32_t>(vertices_.size() + a)}; }
  std::optional<Path> make_path(const std::vector<std::uint32_t>& word) const;
  // a written to the left of b; nullopt is the zero path.
  std::optional<Path> concat(Path a, Path b) const;
  std::optional<Path> concat(Path a, Path b, Path c) const;
  // Letters [begin, end) of the written word; an empty range gives the trivial
  // path at the vertex sitting at that position.
  Path subpath(Path p, std::size_t begin, std::size_t end) const;

  const std::vector<std::uint32_t>& word(Path p) const { return data_[p.id].word; }
  std::size_t length(Path p) const { return data_[p.id].word.size(); }
  bool is_trivial(Path p) const { return data_[p.id].word.empty(); }
  std::uint32_t source(Path p) const { return data_[p.id].src; }
  std::uint32_t target(Path p) const { return data_[p.id].tgt; }
  bool parallel(Path a, Path b) const { return source(a) == source(b) && target(a) == target(b); }

  // Start offsets of occurrences of d inside p.
  std::vector<std::size_t> occurrences(Path d, Path p) const;
  bool divides(Path d, Path p) const { return !occurrences(d, p).empty(); }
  // Every (a, c) with p = a d c, scanning left to right.
  std::vector<std::pair<Path, Path>> divisors(Path d, Path p) const;

  std::string format(Path p) const;
  Path parse(std::string_view text) const;

  // Deterministic order independent of interning history: length, then the
  // written word by arrow index, trivial paths by vertex.
  int canonical_compare(Path a, Path b) const;
  bool canonical_less(Path a, Path b) const { return canonical_compare(a, b) < 0; }

  std::size_t interned_count() const { return data_.size(); }

 private:
  struct PathData {
    std::vector<std::uint32_t> word;
    std::uint32_t src;
    std::uint32_t tgt;
  };
  struct WordHash {
    std::size_t operator()(const std::vector<std::uint32_t>& w) const;
  };

  Path intern(std::vector<std::uint32_t> word) const;

  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, std::uint32_t> vertex_lookup_, arrow_lookup_;
  bool single_char_ids_ = true;
  mutable std::deque<PathData> data_;  // stable references for word()
  mutable std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, WordHash> index_;
  mutable std::unordered_map<std::uint64_t, std::int64_t> concat_cache_;
};

// Linear combination of pairwise parallel paths, terms sorted by path id.
class PathPoly {
 public:
  using Term = std::pair<Path, Scalar>;

  PathPoly() = default;
  explicit PathPoly(const Quiver* q) : q_(q) {}
  static PathPoly monomial(const Quiver& q, Path p, const Scalar& c = Scalar(1));
  // Sums duplicates, drops zeros, checks parallelism.
  static PathPoly from_terms(const Quiver& q, std::vector<Term> terms);

  const Quiver* quiver() const { return q_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coef(Path p) const;
  // Support in canonical path order.
  std::vector<Path> support() const;

  PathPoly operator+(const PathPoly& o) const;
  PathPoly operator-(const PathPoly& o) const;
  PathPoly operator-() const;
  PathPoly operator*(const PathPoly& o) const;
  PathPoly scaled(const Scalar& c) const;
  // Multiply every path by a on the left and c on the right.
  PathPoly sandwich(Path a, Path c) const;
  bool operator==(const PathPoly& o) const;
  bool operator!=(const PathPoly& o) const { return !(*this == o); }

  // Terms in canonical path order, joined "c*path+...".
  std::string str() const;

 private:
  void check_parallel(const Quiver& q) const;

  const Quiver* q_ = nullptr;
  std::vector<Term> terms_;
};

}  // namespace pathres
