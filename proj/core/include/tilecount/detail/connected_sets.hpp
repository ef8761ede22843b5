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

#pragma once

// Redelmeier-style enumeration of connected placement sets on a bounded site
// graph. Each connected set containing the root, and otherwise only sites
// that come after the root in the lattice order, is visited exactly once.
// Placements that conflict (overlap in the same layer) are never combined.

#include <cstdint>
#include <span>
#include <vector>

namespace tilecount::detail {

struct SiteGraph {
  /// Adjacency restricted to admissible sites (those ordered after the root).
  std::vector<std::vector<int>> neighbors;
  /// Sites that may not coexist with a given site (includes the site itself).
  std::vector<std::vector<int>> conflicts;
  std::vector<bool> admissible;
  int root = 0;

  int size() const { return static_cast<int>(neighbors.size()); }
};

/// Visitor is called with the current set (sites in insertion order) each
/// time a set of size 1..max_size is formed; returning false aborts.
template <typename Visitor>
class ConnectedSetWalker {
 public:
  ConnectedSetWalker(const SiteGraph& graph, int max_size, Visitor& visit)
      : graph_(graph),
        max_size_(max_size),
        visit_(visit),
        seen_(static_cast<std::size_t>(graph.size()), 0),
        blocked_(static_cast<std::size_t>(graph.size()), 0),
        untried_(static_cast<std::size_t>(max_size) + 1),
        fresh_(static_cast<std::size_t>(max_size) + 1) {
    for (int s = 0; s < graph.size(); ++s) {
      if (!graph.admissible[Idx(s)]) seen_[Idx(s)] = 1;
    }
  }

  /// Restricts the walk to every `stride`-th subtree below the root, starting
  /// at `offset`; the union over offsets 0..stride-1 is the full walk and the
  /// single-site set is only reported for offset 0.
  void SetPartition(int offset, int stride) {
    offset_ = offset;
    stride_ = stride;
  }

  /// Returns false if the visitor aborted.
  bool Run() {
    current_.clear();
    seen_[Idx(graph_.root)] = 1;
    untried_[0].assign(1, graph_.root);
    return Recurse(0);
  }


 private:
  static std::size_t Idx(int s) { return static_cast<std::size_t>(s); }

  bool Recurse(std::size_t depth) {
    std::vector<int>& untried = untried_[depth];
    int branch = 0;
    while (!untried.empty()) {
      const int v = untried.back();
      untried.pop_back();
      if (depth == 1 && (branch++ % stride_) != offset_) continue;
      if (blocked_[Idx(v)] != 0) continue;

      current_.push_back(v);
      for (int c : graph_.conflicts[Idx(v)]) ++blocked_[Idx(c)];
      bool keep_going = (depth == 0 && offset_ != 0) || visit_(std::span<const int>(current_));
      if (keep_going && static_cast<int>(current_.size()) < max_size_) {
        std::vector<int>& next = untried_[depth + 1];
        next.assign(untried.begin(), untried.end());
        const std::size_t fresh_begin = next.size();
        for (int u : graph_.neighbors[Idx(v)]) {
          if (seen_[Idx(u)] == 0) {
            seen_[Idx(u)] = 1;
            next.push_back(u);
          }
        }
        // The child consumes `next`; remember which sites were marked here.
        std::vector<int>& fresh = fresh_[depth];
        fresh.assign(next.begin() + static_cast<long>(fresh_begin), next.end());
        keep_going = Recurse(depth + 1);
        for (int u : fresh) seen_[Idx(u)] = 0;
      }
      for (int c : graph_.conflicts[Idx(v)]) --blocked_[Idx(c)];
      current_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  const SiteGraph& graph_;
  int max_size_;
  Visitor& visit_;
  std::vector<std::uint8_t> seen_;
  std::vector<std::uint16_t> blocked_;
  std::vector<std::vector<int>> untried_;
  std::vector<std::vector<int>> fresh_;
  std::vector<int> current_;
  int offset_ = 0;
  int stride_ = 1;
};

}  // namespace tilecount::detail
