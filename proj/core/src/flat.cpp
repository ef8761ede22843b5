// Copyright 2026 The tilecount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tilecount/flat.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "tilecount/detail/connected_sets.hpp"
#include "tilecount/errors.hpp"

namespace tilecount {

int FlatStructure::height() const {
  int h = 0;
  for (const Tile& t : tiles) h = std::max(h, t.row + 1);
  return h;
}

FlatStructure Canonicalize(FlatStructure s) {
  if (s.tiles.empty()) return s;
  int min_row = s.tiles.front().row;
  for (const Tile& t : s.tiles) min_row = std::min(min_row, t.row);
  int base_left = 0;
  bool found = false;
  for (const Tile& t : s.tiles) {
    if (t.row == min_row && (!found || t.left < base_left)) {
      base_left = t.left;
      found = true;
    }
  }
  for (Tile& t : s.tiles) {
    t.row -= min_row;
    t.left -= base_left;
  }
  std::sort(s.tiles.begin(), s.tiles.end());
  return s;
}

namespace {

bool Interlock(const Tile& a, const Tile& b, int w) {
  return (a.row - b.row == 1 || b.row - a.row == 1) && a.left - b.left < w &&
         b.left - a.left < w;
}

}  // namespace

std::string ValidateFlat(const FlatStructure& s) {
  if (s.w < 1) return "tile width must be positive";
  if (s.tiles.empty()) return "structure has no tiles";
  if (!std::is_sorted(s.tiles.begin(), s.tiles.end())) return "tiles not sorted by (row, left)";
  const int h = s.height();
  std::vector<bool> used(static_cast<std::size_t>(h), false);
  for (const Tile& t : s.tiles) {
    if (t.row < 0) return "negative row";
    used[static_cast<std::size_t>(t.row)] = true;
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) return "empty row inside structure";
  for (std::size_t i = 0; i + 1 < s.tiles.size(); ++i) {
    const Tile& a = s.tiles[i];
    const Tile& b = s.tiles[i + 1];
    if (a.row == b.row && b.left - a.left < s.w) return "overlapping tiles in one row";
  }
  if (s.tiles.front().row != 0 || s.tiles.front().left != 0) {
    return "not canonical: leftmost bottom tile is not at (0, 0)";
  }
  // connectivity by flood fill over interlocks
  std::vector<bool> reached(s.tiles.size(), false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < s.tiles.size(); ++j) {
      if (!reached[j] && Interlock(s.tiles[i], s.tiles[j], s.w)) {
        reached[j] = true;
        ++count;
        stack.push_back(j);
      }
    }
  }
  if (count != s.tiles.size()) return "structure is not connected";
  return {};
}

OffsetSequence Offsets(const FlatStructure& s) {
  FlatStructure c = Canonicalize(s);
  OffsetSequence b;
  b.reserve(c.tiles.size());
  for (const Tile& t : c.tiles) b.push_back(t.left);
  return b;
}

bool IsPyramid(const FlatStructure& s) {
  FlatStructure c = Canonicalize(s);
  int base = 0;
  for (const Tile& t : c.tiles) {
    if (t.row == 0) {
      ++base;
      continue;
    }
    bool supported = false;
    for (const Tile& u : c.tiles) {
      if (u.row == t.row - 1 && Interlock(t, u, c.w)) {
        supported = true;
        break;
      }
    }
    if (!supported) return false;
  }
  return base == 1;
}

std::string Serialize(const FlatStructure& s) {
  std::ostringstream out;
  out << "w=" << s.w << " tiles=";
  for (std::size_t i = 0; i < s.tiles.size(); ++i) {
    if (i > 0) out << ';';
    out << '(' << s.tiles[i].row << ',' << s.tiles[i].left << ')';
  }
  return out.str();
}

namespace {

int ParseInt(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw DomainError("bad " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

FlatStructure ParseFlatStructure(std::string_view line) {
  constexpr std::string_view kW = "w=";
  constexpr std::string_view kTiles = " tiles=";
  if (line.substr(0, kW.size()) != kW) throw DomainError("structure line must start with 'w='");
  auto tiles_at = line.find(kTiles);
  if (tiles_at == std::string_view::npos) throw DomainError("structure line lacks ' tiles='");
  FlatStructure s;
  s.w = ParseInt(line.substr(kW.size(), tiles_at - kW.size()), "tile width");
  std::string_view rest = line.substr(tiles_at + kTiles.size());
  while (!rest.empty()) {
    auto end = rest.find(';');
    std::string_view item = rest.substr(0, end);
    if (item.size() < 5 || item.front() != '(' || item.back() != ')') {
      throw DomainError("bad tile: '" + std::string(item) + "'");
    }
    item = item.substr(1, item.size() - 2);
    auto comma = item.find(',');
    if (comma == std::string_view::npos) throw DomainError("bad tile: missing ','");
    s.tiles.push_back({ParseInt(item.substr(0, comma), "row"), ParseInt(item.substr(comma + 1), "left")});
    if (end == std::string_view::npos) break;
    rest = rest.substr(end + 1);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Brute force: connected sets of tile placements rooted at the leftmost tile
// of the bottom row.

namespace {

struct FlatLattice {
  int w;
  int n;
  int span;  // left coordinates lie in [-span, span]

  FlatLattice(int w_, int n_) : w(w_), n(n_), span((n_ - 1) * (w_ - 1)) {}

  int columns() const { return 2 * span + 1; }
  int Site(int row, int left) const { return row * columns() + left + span; }
  Tile At(int site) const { return {site / columns(), site % columns() - span}; }

  detail::SiteGraph Build() const {
    detail::SiteGraph g;
    const int sites = n * columns();
    g.neighbors.resize(static_cast<std::size_t>(sites));
    g.conflicts.resize(static_cast<std::size_t>(sites));
    g.admissible.resize(static_cast<std::size_t>(sites));
    g.root = Site(0, 0);
    for (int s = 0; s < sites; ++s) {
      Tile t = At(s);
      g.admissible[static_cast<std::size_t>(s)] = t.row > 0 || t.left >= 0;
    }
    for (int s = 0; s < sites; ++s) {
      Tile t = At(s);
      for (int d = -(w - 1); d <= w - 1; ++d) {
        int left = t.left + d;
        if (left < -span || left > span) continue;
        for (int dr : {-1, 1}) {
          int row = t.row + dr;
          if (row < 0 || row >= n) continue;
          int u = Site(row, left);
          if (g.admissible[static_cast<std::size_t>(u)]) g.neighbors[static_cast<std::size_t>(s)].push_back(u);
        }
        g.conflicts[static_cast<std::size_t>(s)].push_back(Site(t.row, left));
      }
    }
    return g;
  }
};

template <typename OnSet>
void Walk(int w, int n, const EnumerationLimits& limits, OnSet&& on_set) {
  if (w < 1 || n < 1) throw DomainError("tile width and count must be positive");
  FlatLattice lattice(w, n);
  detail::SiteGraph graph = lattice.Build();
  std::uint64_t visited = 0;
  bool over_budget = false;
  auto visit = [&](std::span<const int> set) {
    if (++visited > limits.max_visited) {
      over_budget = true;
      return false;
    }
    on_set(lattice, set);
    return true;
  };
  detail::ConnectedSetWalker walker(graph, n, visit);
  walker.Run();
  if (over_budget) {
    throw ResourceLimitError("flat enumeration exceeded " + std::to_string(limits.max_visited) +
                                 " visited structures",
                             0);
  }
}

FlatStructure MakeStructure(const FlatLattice& lattice, std::span<const int> set) {
  FlatStructure s;
  s.w = lattice.w;
  s.tiles.reserve(set.size());
  for (int site : set) s.tiles.push_back(lattice.At(site));
  std::sort(s.tiles.begin(), s.tiles.end());
  return s;
}

}  // namespace

void EnumerateFlat(int w, int n, const std::function<void(const FlatStructure&)>& sink,
                   EnumerationLimits limits) {
  Walk(w, n, limits, [&](const FlatLattice& lattice, std::span<const int> set) {
    if (static_cast<int>(set.size()) == n) sink(MakeStructure(lattice, set));
  });
}

std::vector<FlatStructure> ListFlat(int w, int n, EnumerationLimits limits) {
  std::vector<FlatStructure> out;
  EnumerateFlat(w, n, [&](const FlatStructure& s) { out.push_back(s); }, limits);
  std::sort(out.begin(), out.end(), [](const FlatStructure& a, const FlatStructure& b) {
    return a.tiles < b.tiles;
  });
  return out;
}

namespace {

std::vector<BigInt> CountFlatPrefix(int w, int n_max, const EnumerationLimits& limits) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n_max), 0);
  Walk(w, n_max, limits, [&](const FlatLattice&, std::span<const int> set) {
    ++counts[set.size() - 1];
  });
  std::vector<BigInt> out;
  out.reserve(counts.size());
  for (std::uint64_t c : counts) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

}  // namespace

std::vector<BigInt> CountFlatSeries(int w, int n_max, EnumerationLimits limits) {
  try {
    return CountFlatPrefix(w, n_max, limits);
  } catch (const ResourceLimitError& e) {
    // The walk is depth first, so recount smaller sizes for an exact prefix.
    for (int m = n_max - 1; m >= 1; --m) {
      try {
        auto part = CountFlatPrefix(w, m, limits);
        throw ResourceLimitError(e.what(), m, std::move(part));
      } catch (const ResourceLimitError& inner) {
        if (inner.largest_completed_n() == m) throw;
      }
    }
    throw;
  }
}

BigInt CountFlat(int w, int n, EnumerationLimits limits) {
  return CountFlatSeries(w, n, limits).back();
}

std::vector<BigInt> CountFlatByComplexity(int w, int n, EnumerationLimits limits) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
  std::vector<int> residue_seen(static_cast<std::size_t>(w), 0);
  Walk(w, n, limits, [&](const FlatLattice& lattice, std::span<const int> set) {
    if (static_cast<int>(set.size()) != n) return;
    int distinct = 0;
    for (int site : set) {
      int r = ((lattice.At(site).left % w) + w) % w;
      if (residue_seen[static_cast<std::size_t>(r)]++ == 0) ++distinct;
    }
    for (int site : set) residue_seen[static_cast<std::size_t>(((lattice.At(site).left % w) + w) % w)] = 0;
    ++counts[static_cast<std::size_t>(distinct - 1)];
  });
  std::vector<BigInt> out;
  for (std::uint64_t c : counts) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

}  // namespace tilecount
