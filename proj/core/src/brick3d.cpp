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

#include "tilecount/brick3d.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

#include "tilecount/detail/connected_sets.hpp"
#include "tilecount/errors.hpp"

namespace tilecount {

bool FootprintsOverlap(const BrickPlacement& a, const BrickPlacement& b) {
  return a.x < b.x + b.x_extent() && b.x < a.x + a.x_extent() && a.y < b.y + b.y_extent() &&
         b.y < a.y + a.y_extent();
}

BrickPlacement RotateQuarter(const BrickPlacement& b) {
  // studs [x, x+xe) x [y, y+ye) map to [-(y+ye-1), -y] x [x, x+xe)
  BrickPlacement r;
  r.x = -(b.y + b.y_extent() - 1);
  r.y = b.x;
  r.z = b.z;
  r.orient = b.orient == Orientation::kEastWest ? Orientation::kNorthSouth : Orientation::kEastWest;
  return r;
}

std::string ValidateBuilding(const Building& b) {
  if (b.empty()) return "building has no bricks";
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (b[i].z == b[j].z && FootprintsOverlap(b[i], b[j])) return "bricks overlap within a layer";
    }
  }
  std::vector<bool> reached(b.size(), false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!reached[j] && std::abs(b[i].z - b[j].z) == 1 && FootprintsOverlap(b[i], b[j])) {
        reached[j] = true;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count == b.size() ? std::string() : std::string("building is not connected");
}

Building NormalizeTranslation(Building b) {
  if (b.empty()) return b;
  std::sort(b.begin(), b.end());
  const BrickPlacement origin = b.front();
  for (BrickPlacement& p : b) {
    p.x -= origin.x;
    p.y -= origin.y;
    p.z -= origin.z;
  }
  return b;
}

Building CanonicalForm(const Building& b) {
  Building best = NormalizeTranslation(b);
  Building rotated = b;
  for (int turn = 1; turn < 4; ++turn) {
    for (BrickPlacement& p : rotated) p = RotateQuarter(p);
    Building candidate = NormalizeTranslation(rotated);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

std::string SerializeBuilding(const Building& b) {
  std::ostringstream out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i > 0) out << ';';
    out << '(' << b[i].x << ',' << b[i].y << ',' << b[i].z << ','
        << (b[i].orient == Orientation::kEastWest ? "EW" : "NS") << ')';
  }
  return out.str();
}

// ---------------------------------------------------------------------------

namespace {

/// Bounded stud lattice around a root brick at the origin. Site indices grow
/// with (z, y, x, orientation), so "after the root" is "larger index".
struct BrickLattice {
  int n;
  int reach;

  explicit BrickLattice(int n_) : n(n_), reach(3 * (n_ - 1)) {}

  int side() const { return 2 * reach + 1; }
  int sites() const { return n * side() * side() * 2; }
  int Site(const BrickPlacement& b) const {
    return ((b.z * side() + (b.y + reach)) * side() + (b.x + reach)) * 2 + static_cast<int>(b.orient);
  }
  bool Inside(const BrickPlacement& b) const {
    return b.z >= 0 && b.z < n && b.x >= -reach && b.x <= reach && b.y >= -reach && b.y <= reach;
  }
  BrickPlacement At(int site) const {
    BrickPlacement b;
    b.orient = static_cast<Orientation>(site % 2);
    site /= 2;
    b.x = site % side() - reach;
    site /= side();
    b.y = site % side() - reach;
    b.z = site / side();
    return b;
  }

  detail::SiteGraph Build(Orientation root_orient) const {
    detail::SiteGraph g;
    const auto count = static_cast<std::size_t>(sites());
    g.neighbors.resize(count);
    g.conflicts.resize(count);
    g.admissible.resize(count);
    g.root = Site({0, 0, 0, root_orient});
    for (int s = 0; s < sites(); ++s) g.admissible[static_cast<std::size_t>(s)] = s >= g.root;
    for (int s = 0; s < sites(); ++s) {
      const BrickPlacement b = At(s);
      for (int o = 0; o < 2; ++o) {
        for (int dy = -3; dy <= 3; ++dy) {
          for (int dx = -3; dx <= 3; ++dx) {
            BrickPlacement c{b.x + dx, b.y + dy, b.z, static_cast<Orientation>(o)};
            if (!FootprintsOverlap(b, c)) continue;
            if (Inside(c)) g.conflicts[static_cast<std::size_t>(s)].push_back(Site(c));
            for (int dz : {-1, 1}) {
              BrickPlacement d = c;
              d.z += dz;
              if (Inside(d) && g.admissible[static_cast<std::size_t>(Site(d))]) {
                g.neighbors[static_cast<std::size_t>(s)].push_back(Site(d));
              }
            }
          }
        }
      }
    }
    return g;
  }
};

constexpr int kMaxBricks = 16;

/// Is the translation class of `set` mapped to itself by `turns` quarter turns?
bool RotationInvariant(const BrickLattice& lattice, std::span<const int> set, int turns) {
  std::array<BrickPlacement, kMaxBricks> orig{};
  std::array<BrickPlacement, kMaxBricks> rot{};
  const std::size_t k = set.size();
  for (std::size_t i = 0; i < k; ++i) {
    orig[i] = lattice.At(set[i]);
    rot[i] = orig[i];
    for (int t = 0; t < turns; ++t) rot[i] = RotateQuarter(rot[i]);
  }
  std::sort(orig.begin(), orig.begin() + static_cast<long>(k));
  std::sort(rot.begin(), rot.begin() + static_cast<long>(k));
  const BrickPlacement base = rot[0];
  for (std::size_t i = 0; i < k; ++i) {
    BrickPlacement p = rot[i];
    p.x -= base.x;
    p.y -= base.y;
    p.z -= base.z;
    if (!(p == orig[i])) return false;
  }
  return true;
}

}  // namespace

BuildingTally TallyBuildings(int n_max, const BuildingCountOptions& options) {
  if (n_max < 1 || n_max > kMaxBricks) throw DomainError("brick count must be in 1..16");
  const int threads = std::max(1, options.threads);
  BrickLattice lattice(n_max);
  const auto len = static_cast<std::size_t>(n_max);

  std::vector<BuildingTally> partial(static_cast<std::size_t>(threads));
  std::atomic<bool> over_budget{false};
  const std::uint64_t budget = options.max_visited / static_cast<std::uint64_t>(threads) + 1;

  for (Orientation root : {Orientation::kEastWest, Orientation::kNorthSouth}) {
    const detail::SiteGraph graph = lattice.Build(root);
    auto work = [&](int worker) {
      BuildingTally& t = partial[static_cast<std::size_t>(worker)];
      t.translation_classes.resize(len, 0);
      t.quarter_turn_symmetric.resize(len, 0);
      t.half_turn_symmetric.resize(len, 0);
      std::uint64_t visited = 0;
      auto visit = [&](std::span<const int> set) {
        if (++visited > budget || over_budget.load(std::memory_order_relaxed)) {
          over_budget = true;
          return false;
        }
        const std::size_t k = set.size() - 1;
        ++t.translation_classes[k];
        if (RotationInvariant(lattice, set, 2)) {
          ++t.half_turn_symmetric[k];
          if (RotationInvariant(lattice, set, 1)) ++t.quarter_turn_symmetric[k];
        }
        return true;
      };
      detail::ConnectedSetWalker walker(graph, n_max, visit);
      walker.SetPartition(worker, threads);
      walker.Run();
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int i = 0; i < threads; ++i) pool.emplace_back(work, i);
      for (auto& th : pool) th.join();
    }
  }
  if (over_budget) {
    throw ResourceLimitError("3D enumeration exceeded " + std::to_string(options.max_visited) +
                                 " visited buildings",
                             0);
  }
  BuildingTally total;
  total.translation_classes.assign(len, 0);
  total.quarter_turn_symmetric.assign(len, 0);
  total.half_turn_symmetric.assign(len, 0);
  for (const BuildingTally& t : partial) {
    for (std::size_t k = 0; k < len; ++k) {
      total.translation_classes[k] += t.translation_classes[k];
      total.quarter_turn_symmetric[k] += t.quarter_turn_symmetric[k];
      total.half_turn_symmetric[k] += t.half_turn_symmetric[k];
    }
  }
  return total;
}

std::vector<BigInt> CountBuildingsSeries(int n_max, const BuildingCountOptions& options) {
  BuildingTally t = TallyBuildings(n_max, options);
  std::vector<BigInt> out;
  for (std::size_t k = 0; k < t.translation_classes.size(); ++k) {
    // Burnside over the rotation group {0, 90, 180, 270}.
    BigInt sum = BigInt(static_cast<unsigned long>(t.translation_classes[k])) +
                 2 * BigInt(static_cast<unsigned long>(t.quarter_turn_symmetric[k])) +
                 BigInt(static_cast<unsigned long>(t.half_turn_symmetric[k]));
    if (sum % 4 != 0) throw std::logic_error("Burnside sum not divisible by group order");
    out.push_back(sum / 4);
  }
  return out;
}

BigInt CountBuildings(int n, const BuildingCountOptions& options) {
  return CountBuildingsSeries(n, options).back();
}

// ---------------------------------------------------------------------------

namespace {

std::vector<BrickPlacement> AttachmentCandidates(const BrickPlacement& b) {
  std::vector<BrickPlacement> out;
  for (int o = 0; o < 2; ++o) {
    for (int dy = -3; dy <= 3; ++dy) {
      for (int dx = -3; dx <= 3; ++dx) {
        BrickPlacement c{b.x + dx, b.y + dy, b.z, static_cast<Orientation>(o)};
        if (!FootprintsOverlap(b, c)) continue;
        for (int dz : {-1, 1}) {
          BrickPlacement d = c;
          d.z += dz;
          out.push_back(d);
        }
      }
    }
  }
  return out;
}

std::set<Building> GrowLevel(const std::set<Building>& level) {
  std::set<Building> next;
  for (const Building& b : level) {
    for (const BrickPlacement& anchor : b) {
      for (const BrickPlacement& c : AttachmentCandidates(anchor)) {
        bool clash = false;
        for (const BrickPlacement& other : b) {
          if (other.z == c.z && FootprintsOverlap(other, c)) {
            clash = true;
            break;
          }
        }
        if (clash) continue;
        Building grown = b;
        grown.push_back(c);
        next.insert(CanonicalForm(grown));
      }
    }
  }
  return next;
}

}  // namespace

std::vector<BigInt> CountBuildingsByOrbitDedup(int n_max) {
  std::vector<BigInt> out;
  std::set<Building> level{CanonicalForm({BrickPlacement{}})};
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) level = GrowLevel(level);
    out.emplace_back(static_cast<unsigned long>(level.size()));
  }
  return out;
}

std::vector<Building> ListCanonicalBuildings(int n) {
  std::set<Building> level{CanonicalForm({BrickPlacement{}})};
  for (int k = 2; k <= n; ++k) level = GrowLevel(level);
  return {level.begin(), level.end()};
}

}  // namespace tilecount
