#include "symdyn/grid2d.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "symdyn/mme.hpp"
#include "symdyn/subshift.hpp"

namespace symdyn {

// ---------------------------------------------------------------------------
// Pattern2D

Pattern2D::Pattern2D(std::vector<std::pair<Cell, Symbol>> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < cells_.size(); ++i)
    if (cells_[i].first == cells_[i - 1].first)
      throw Error(ErrorKind::invalid_argument,
                  "pattern repeats cell (" + std::to_string(cells_[i].first.x) + "," +
                      std::to_string(cells_[i].first.y) + ")");
}

Shape Pattern2D::shape() const {
  Shape s;
  s.reserve(cells_.size());
  for (const auto& [c, sym] : cells_) s.push_back(c);
  return s;
}

std::optional<Symbol> Pattern2D::at(Cell c) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), c,
                             [](const auto& entry, const Cell& key) { return entry.first < key; });
  if (it == cells_.end() || !(it->first == c)) return std::nullopt;
  return it->second;
}

void Pattern2D::set(Cell c, Symbol s) {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), c,
                             [](const auto& entry, const Cell& key) { return entry.first < key; });
  if (it == cells_.end() || !(it->first == c))
    throw Error(ErrorKind::invalid_argument, "cell outside the pattern");
  it->second = s;
}

Pattern2D Pattern2D::translated(int dx, int dy) const {
  Pattern2D p = *this;
  for (auto& [c, sym] : p.cells_) {
    c.x += dx;
    c.y += dy;
  }
  return p;
}

std::array<int, 4> Pattern2D::bounds() const {
  if (cells_.empty()) throw Error(ErrorKind::invalid_argument, "empty pattern has no bounds");
  std::array<int, 4> b{cells_[0].first.x, cells_[0].first.y, cells_[0].first.x, cells_[0].first.y};
  for (const auto& [c, sym] : cells_) {
    b[0] = std::min(b[0], c.x);
    b[1] = std::min(b[1], c.y);
    b[2] = std::max(b[2], c.x);
    b[3] = std::max(b[3], c.y);
  }
  return b;
}

Pattern2D rectangle_pattern(const Word& symbols, int width, int height) {
  if (symbols.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
    throw Error(ErrorKind::invalid_argument, "rectangle size mismatch");
  std::vector<std::pair<Cell, Symbol>> cells;
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x)
      cells.push_back({{x, y}, symbols[static_cast<std::size_t>(y * width + x)]});
  return Pattern2D(std::move(cells));
}

// ---------------------------------------------------------------------------
// Grid2dSpec

Grid2dSpec::Grid2dSpec(Alphabet alphabet, std::vector<Pattern2D> forbidden)
    : alphabet_(std::move(alphabet)), forbidden_(std::move(forbidden)) {
  for (auto& f : forbidden_) {
    if (f.empty()) throw Error(ErrorKind::invalid_argument, "forbidden patterns must be nonempty");
    for (const auto& [c, s] : f.cells())
      if (s >= alphabet_.size())
        throw Error(ErrorKind::invalid_argument, "forbidden pattern uses a symbol outside the alphabet");
    const auto b = f.bounds();
    f = f.translated(-b[0], -b[1]);
    range_ = std::max({range_, b[2] - b[0], b[3] - b[1]});
  }
}

Grid2dSpec Grid2dSpec::hard_square() {
  return Grid2dSpec(Alphabet::binary(),
                    {Pattern2D({{{0, 0}, 1}, {{1, 0}, 1}}), Pattern2D({{{0, 0}, 1}, {{0, 1}, 1}})});
}

bool Grid2dSpec::locally_legal(const Pattern2D& p) const {
  for (const auto& f : forbidden_) {
    const Cell anchor = f.cells()[0].first;
    for (const auto& [c, s] : p.cells()) {
      const int dx = c.x - anchor.x, dy = c.y - anchor.y;
      bool hit = true;
      for (const auto& [fc, fs] : f.cells()) {
        auto got = p.at({fc.x + dx, fc.y + dy});
        if (!got || *got != fs) {
          hit = false;
          break;
        }
      }
      if (hit) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Periods and sparse replacement

namespace {

bool translate_misses(const std::set<Cell>& f, int dx, int dy) {
  for (const Cell& c : f)
    if (f.count({c.x + dx, c.y + dy})) return false;
  return true;
}

bool period_valid(const std::set<Cell>& f, int width, int height, int n1, int n2) {
  for (int a = -(width - 1) / n1; a <= (width - 1) / n1; ++a)
    for (int b = -(height - 1) / n2; b <= (height - 1) / n2; ++b)
      if ((a != 0 || b != 0) && !translate_misses(f, a * n1, b * n2)) return false;
  return true;
}

}  // namespace

std::pair<int, int> lemma_one_period(const Shape& f) {
  if (f.empty()) throw Error(ErrorKind::invalid_argument, "shape must be nonempty");
  const std::set<Cell> cells(f.begin(), f.end());
  int minx = f[0].x, maxx = f[0].x, miny = f[0].y, maxy = f[0].y;
  for (const Cell& c : f) {
    minx = std::min(minx, c.x);
    maxx = std::max(maxx, c.x);
    miny = std::min(miny, c.y);
    maxy = std::max(maxy, c.y);
  }
  const int width = maxx - minx + 1, height = maxy - miny + 1;
  std::vector<std::vector<char>> valid(static_cast<std::size_t>(width) + 1,
                                       std::vector<char>(static_cast<std::size_t>(height) + 1, 0));
  for (int n1 = 1; n1 <= width; ++n1)
    for (int n2 = 1; n2 <= height; ++n2) valid[n1][n2] = period_valid(cells, width, height, n1, n2);
  std::optional<std::pair<int, int>> best;
  for (int n1 = 1; n1 <= width; ++n1)
    for (int n2 = 1; n2 <= height; ++n2) {
      if (!valid[n1][n2]) continue;
      bool minimal = true;
      for (int m1 = 1; m1 < n1 && minimal; ++m1) minimal = !valid[m1][n2];
      for (int m2 = 1; m2 < n2 && minimal; ++m2) minimal = !valid[n1][m2];
      if (!minimal) continue;
      if (!best || n1 * n2 < best->first * best->second ||
          (n1 * n2 == best->first * best->second && n1 < best->first))
        best = std::make_pair(n1, n2);
    }
  return *best;  // the bounding box itself is always valid
}

bool f_sparse_check(const std::vector<Cell>& s, const Shape& f) {
  std::set<Cell> diffs;
  for (const Cell& a : f)
    for (const Cell& b : f) diffs.insert({a.x - b.x, a.y - b.y});
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (diffs.count({s[i].x - s[j].x, s[i].y - s[j].y})) return false;
  return true;
}

std::vector<Cell> occurrences(const Pattern2D& u, const Pattern2D& v) {
  if (v.empty()) throw Error(ErrorKind::invalid_argument, "pattern v must be nonempty");
  std::vector<Cell> out;
  const Cell anchor = v.cells()[0].first;
  for (const auto& [c, s] : u.cells()) {
    const int dx = c.x - anchor.x, dy = c.y - anchor.y;
    bool hit = true;
    for (const auto& [vc, vs] : v.cells()) {
      auto got = u.at({vc.x + dx, vc.y + dy});
      if (!got || *got != vs) {
        hit = false;
        break;
      }
    }
    if (hit) out.push_back({dx, dy});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Pattern2D replace_sparse(const Pattern2D& u, const Pattern2D& v, const Pattern2D& w,
                         const std::vector<Cell>& s) {
  if (v.shape() != w.shape()) throw Error(ErrorKind::invalid_argument, "v and w must share a shape");
  if (!f_sparse_check(s, v.shape()))
    throw Error(ErrorKind::not_sparse, "replacement set is not sparse for the shape of v");
  const auto occ = occurrences(u, v);
  for (const Cell& g : s)
    if (!std::binary_search(occ.begin(), occ.end(), g))
      throw Error(ErrorKind::position_not_occurrence,
                  "v does not occur at (" + std::to_string(g.x) + "," + std::to_string(g.y) + ")");
  Pattern2D out = u;
  for (const Cell& g : s)
    for (const auto& [c, sym] : w.cells()) out.set({c.x + g.x, c.y + g.y}, sym);
  return out;
}

// ---------------------------------------------------------------------------
// Strip transfer matrix

namespace {

using Column = std::vector<Symbol>;

// Does forbidden pattern f (normalized to min corner 0,0) occur with its left
// edge on column `cols[0]` and top row at y0?
bool hits(const Pattern2D& f, const std::vector<const Column*>& cols, int y0, int height, bool torus) {
  for (const auto& [c, s] : f.cells()) {
    int y = y0 + c.y;
    if (torus) {
      y %= height;
    } else if (y >= height) {
      return false;
    }
    if ((*cols[static_cast<std::size_t>(c.x)])[static_cast<std::size_t>(y)] != s) return false;
  }
  return true;
}

bool any_hit(const std::vector<const Pattern2D*>& patterns, const std::vector<const Column*>& cols,
             int height, bool torus) {
  for (const Pattern2D* f : patterns)
    for (int y0 = 0; y0 < height; ++y0)
      if (hits(*f, cols, y0, height, torus)) return true;
  return false;
}

}  // namespace

StripValue strip_mme_mu(const Grid2dSpec& spec, int width, const Pattern2D& pattern, bool torus) {
  if (pattern.empty()) throw Error(ErrorKind::invalid_argument, "pattern must be nonempty");
  const auto b = pattern.bounds();
  const int r = spec.interaction_range();
  if (width < (b[3] - b[1] + 1) + 2 * r)
    throw Error(ErrorKind::invalid_argument, "strip width must be at least pattern height + 2r");
  std::vector<const Pattern2D*> single, pair;
  for (const auto& f : spec.forbidden()) {
    const auto fb = f.bounds();
    if (fb[2] == 0)
      single.push_back(&f);
    else if (fb[2] == 1)
      pair.push_back(&f);
    else
      throw Error(ErrorKind::invalid_argument, "strip model supports forbidden shapes spanning at most two columns");
    if (torus && fb[3] >= width)
      throw Error(ErrorKind::invalid_argument, "forbidden shape taller than the strip");
  }

  const std::size_t k = spec.alphabet().size();
  std::uint64_t total = 1;
  for (int i = 0; i < width; ++i) {
    total *= k;
    if (total > (std::uint64_t{1} << 20))
      throw Error(ErrorKind::resource_limit, "column alphabet exceeds 2^20");
  }
  std::vector<Column> columns;
  Column col(static_cast<std::size_t>(width));
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int y = width; y-- > 0;) {
      col[static_cast<std::size_t>(y)] = static_cast<Symbol>(c % k);
      c /= k;
    }
    if (!any_hit(single, {&col}, width, torus)) columns.push_back(col);
  }
  if (columns.size() > 0xFFFF)
    throw Error(ErrorKind::resource_limit, "too many legal columns for the symbol type");

  std::vector<std::string> names;
  std::vector<Automaton::Edge> edges;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    names.push_back("c" + std::to_string(i));
    for (std::size_t j = 0; j < columns.size(); ++j)
      if (!any_hit(pair, {&columns[i], &columns[j]}, width, torus))
        edges.push_back({i, static_cast<Symbol>(j), j});
  }
  auto automaton = std::make_shared<const Automaton>(columns.size(), std::move(names), edges);
  const ParryModel model(automaton);

  // Centre the pattern vertically; each pattern column constrains one step.
  const int dy = (width - (b[3] - b[1] + 1)) / 2 - b[1];
  std::vector<std::vector<Symbol>> choices;
  for (int x = b[0]; x <= b[2]; ++x) {
    std::vector<Symbol> allowed;
    for (std::size_t j = 0; j < columns.size(); ++j) {
      bool ok = true;
      for (const auto& [c, s] : pattern.cells())
        if (c.x == x && columns[j][static_cast<std::size_t>(c.y + dy)] != s) {
          ok = false;
          break;
        }
      if (ok) allowed.push_back(static_cast<Symbol>(j));
    }
    choices.push_back(std::move(allowed));
  }
  // Labels index `columns`, so trimming must not have dropped any state.
  if (automaton->num_states() != columns.size())
    throw Error(ErrorKind::reducible_presentation, "column graph lost states when trimmed");
  return {width, mu_parry_choices(model, choices), columns.size()};
}

// ---------------------------------------------------------------------------
// Windowed replaceability and rectangle enumeration

namespace {

// Forbidden placements entirely inside a region, as lists of
// (region index, symbol), plus the largest index each one touches.
struct Placement {
  std::vector<std::pair<std::size_t, Symbol>> cells;
  std::size_t last = 0;
};

std::vector<Placement> placements_inside(const Grid2dSpec& spec, const std::vector<Cell>& region) {
  std::map<Cell, std::size_t> index;
  for (std::size_t i = 0; i < region.size(); ++i) index[region[i]] = i;
  std::vector<Placement> out;
  for (const auto& f : spec.forbidden()) {
    const Cell anchor = f.cells()[0].first;
    for (const Cell& c : region) {
      const int dx = c.x - anchor.x, dy = c.y - anchor.y;
      Placement p;
      bool inside = true;
      for (const auto& [fc, fs] : f.cells()) {
        auto it = index.find({fc.x + dx, fc.y + dy});
        if (it == index.end()) {
          inside = false;
          break;
        }
        p.cells.emplace_back(it->second, fs);
        p.last = std::max(p.last, it->second);
      }
      if (inside) out.push_back(std::move(p));
    }
  }
  return out;
}

bool placement_hits(const Placement& p, const Word& values) {
  for (const auto& [i, s] : p.cells)
    if (values[i] != s) return false;
  return true;
}

// Backtracking over region cells fixed..end; `visit` sees each legal assignment.
template <class Visit>
void enumerate_region(std::size_t fixed, std::size_t size, std::size_t alphabet,
                      const std::vector<Placement>& placements, Word& values,
                      std::uint64_t budget, std::uint64_t& visited, Visit&& visit) {
  std::vector<std::vector<const Placement*>> closing(size);
  for (const auto& p : placements) closing[p.last].push_back(&p);
  for (std::size_t i = 0; i < fixed; ++i)
    for (const Placement* p : closing[i])
      if (placement_hits(*p, values)) return;
  if (fixed == size) {
    ++visited;
    visit(values);
    return;
  }
  std::size_t i = fixed;
  values[i] = 0;
  // Iterative odometer with pruning at the deepest assigned cell.
  while (true) {
    bool ok = true;
    for (const Placement* p : closing[i])
      if (placement_hits(*p, values)) {
        ok = false;
        break;
      }
    if (ok && i + 1 == size) {
      if (++visited > budget) throw Error(ErrorKind::resource_limit, "assignment budget exceeded");
      visit(values);
    } else if (ok) {
      values[++i] = 0;
      continue;
    }
    // Advance to the next candidate, backing up as needed.
    while (true) {
      if (values[i] + 1u < alphabet) {
        ++values[i];
        break;
      }
      if (i == fixed) return;
      --i;
    }
  }
}

}  // namespace

Replaceability replaceability_windowed(const Grid2dSpec& spec, const Pattern2D& v,
                                       const Pattern2D& w, int radius, std::uint64_t budget) {
  if (v.shape() != w.shape()) throw Error(ErrorKind::invalid_argument, "v and w must share a shape");
  if (v.empty()) throw Error(ErrorKind::invalid_argument, "patterns must be nonempty");
  if (radius < spec.interaction_range())
    throw Error(ErrorKind::invalid_argument, "halo radius must be at least the interaction range");
  const Shape f = v.shape();
  std::set<Cell> halo;
  for (const Cell& c : f)
    for (int dy = -radius; dy <= radius; ++dy)
      for (int dx = -radius; dx <= radius; ++dx) halo.insert({c.x + dx, c.y + dy});
  for (const Cell& c : f) halo.erase(c);
  std::vector<Cell> region(f.begin(), f.end());
  region.insert(region.end(), halo.begin(), halo.end());

  const auto placements = placements_inside(spec, region);
  std::vector<const Placement*> touching_f;
  for (const auto& p : placements)
    for (const auto& [i, s] : p.cells)
      if (i < f.size()) {
        touching_f.push_back(&p);
        break;
      }

  Word values(region.size(), 0);
  for (std::size_t i = 0; i < f.size(); ++i) values[i] = v.cells()[i].second;
  Replaceability result;
  std::uint64_t visited = 0;
  Word swapped;
  enumerate_region(f.size(), region.size(), spec.alphabet().size(), placements, values, budget,
                   visited, [&](const Word& vals) {
                     if (!result.holds) return;
                     swapped = vals;
                     for (std::size_t i = 0; i < f.size(); ++i) swapped[i] = w.cells()[i].second;
                     for (const Placement* p : touching_f)
                       if (placement_hits(*p, swapped)) {
                         result.holds = false;
                         std::vector<std::pair<Cell, Symbol>> cells;
                         for (std::size_t i = 0; i < region.size(); ++i)
                           cells.push_back({region[i], vals[i]});
                         result.witness = Pattern2D(std::move(cells));
                         return;
                       }
                   });
  result.halos_checked = visited;
  return result;
}

std::vector<Word> enumerate_legal_rectangles(const Grid2dSpec& spec, int width, int height,
                                             std::uint64_t budget) {
  if (width <= 0 || height <= 0) throw Error(ErrorKind::invalid_argument, "rectangle must be nonempty");
  std::vector<Cell> region;
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) region.push_back({x, y});
  const auto placements = placements_inside(spec, region);
  Word values(region.size(), 0);
  std::vector<Word> out;
  std::uint64_t visited = 0;
  enumerate_region(0, region.size(), spec.alphabet().size(), placements, values, budget, visited,
                   [&](const Word& vals) { out.push_back(vals); });
  return out;
}

}  // namespace symdyn
