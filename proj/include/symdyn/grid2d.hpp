#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "symdyn/words.hpp"

namespace symdyn {

struct Cell {
  int x = 0;
  int y = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell& a, const Cell& b) {
    return a.y != b.y ? a.y <=> b.y : a.x <=> b.x;
  }
};

using Shape = std::vector<Cell>;

/// Finite pattern on a set of cells, kept sorted row-major by (y, x).
class Pattern2D {
 public:
  Pattern2D() = default;
  /// Throws invalid_argument on a repeated cell.
  explicit Pattern2D(std::vector<std::pair<Cell, Symbol>> cells);

  std::size_t size() const noexcept { return cells_.size(); }
  bool empty() const noexcept { return cells_.empty(); }
  const std::vector<std::pair<Cell, Symbol>>& cells() const noexcept { return cells_; }
  Shape shape() const;
  std::optional<Symbol> at(Cell c) const;
  /// Overwrites existing cells only.
  void set(Cell c, Symbol s);
  Pattern2D translated(int dx, int dy) const;
  /// Inclusive bounds (min_x, min_y, max_x, max_y); pattern must be nonempty.
  std::array<int, 4> bounds() const;

  friend bool operator==(const Pattern2D&, const Pattern2D&) = default;

 private:
  std::vector<std::pair<Cell, Symbol>> cells_;
};

/// Z^2 shift of finite type given by forbidden patterns.
class Grid2dSpec {
 public:
  Grid2dSpec(Alphabet alphabet, std::vector<Pattern2D> forbidden);
  static Grid2dSpec hard_square();

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Pattern2D>& forbidden() const noexcept { return forbidden_; }
  /// Largest coordinate extent (max - min) of a forbidden shape.
  int interaction_range() const noexcept { return range_; }

  /// No forbidden pattern sits entirely inside `p`.
  bool locally_legal(const Pattern2D& p) const;

  friend bool operator==(const Grid2dSpec&, const Grid2dSpec&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Pattern2D> forbidden_;
  int range_ = 0;
};

/// Coordinatewise-minimal period (N1, N2): every nonzero translate of F by
/// (a N1, b N2) misses F. Among minimal candidates the one with the smaller
/// product wins, then the smaller N1.
std::pair<int, int> lemma_one_period(const Shape& f);

/// Translates of F by distinct elements of S are pairwise disjoint.
bool f_sparse_check(const std::vector<Cell>& s, const Shape& f);

/// Translations g with u restricted to g + shape(v) equal to v.
std::vector<Cell> occurrences(const Pattern2D& u, const Pattern2D& v);

/// Simultaneous replacement of v by w at the translates in S.
Pattern2D replace_sparse(const Pattern2D& u, const Pattern2D& v, const Pattern2D& w,
                         const std::vector<Cell>& s);

struct StripValue {
  int width = 0;
  double value = 0.0;
  std::size_t columns = 0;  // legal column alphabet size
};

/// Parry-measure approximation of mu(pattern) on a strip of height `width`
/// running along x, periodic in y when `torus` is set, else with free
/// boundary rows. Forbidden shapes may span at most two columns.
StripValue strip_mme_mu(const Grid2dSpec& spec, int width, const Pattern2D& pattern,
                        bool torus = true);

struct Replaceability {
  bool holds = true;
  std::size_t halos_checked = 0;
  std::optional<Pattern2D> witness;  // a legal halo with v that breaks with w
};

/// For every locally legal assignment of the cells within Chebyshev
/// distance `radius` of shape(v), with v on the shape, putting w there keeps
/// it locally legal. A sufficient condition for E(v) subset of E(w).
Replaceability replaceability_windowed(const Grid2dSpec& spec, const Pattern2D& v,
                                       const Pattern2D& w, int radius,
                                       std::uint64_t budget = std::uint64_t{1} << 24);

/// Locally legal patterns on the rectangle [0,width) x [0,height), as
/// row-major symbol vectors in lexicographic order.
std::vector<Word> enumerate_legal_rectangles(const Grid2dSpec& spec, int width, int height,
                                             std::uint64_t budget = std::uint64_t{1} << 22);

Pattern2D rectangle_pattern(const Word& symbols, int width, int height);

}  // namespace symdyn
