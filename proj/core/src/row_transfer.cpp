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

#include "row_transfer.hpp"

#include <absl/container/flat_hash_map.h>
#include <absl/container/inlined_vector.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstring>
#include <limits>
#include <string>
#include <exception>
#include <mutex>
#include <thread>

#include "resource.hpp"
#include "tilecount/errors.hpp"

namespace tilecount::detail {

namespace {

constexpr int kMaxTiles = kRowTransferMaxTiles;
constexpr int kNoLabel = 0xff;

struct Overflow {};

template <typename C>
void AddChecked(C& into, C v) {
  if (into > std::numeric_limits<C>::max() - v) throw Overflow{};
  into += v;
}

BigInt ToBig(unsigned __int128 c) {
  BigInt hi(static_cast<unsigned long>(static_cast<std::uint64_t>(c >> 64)));
  BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(c)));
  return (hi << 64) + lo;
}

// Byte layout: [0] tiles in the current row, [1] tiles kept from the row
// below, [2..20] gaps between consecutive tiles, [21..30] label nibbles.
struct Key {
  std::array<std::uint8_t, 32> b{};
  friend bool operator==(const Key& x, const Key& y) { return std::memcmp(x.b.data(), y.b.data(), 32) == 0; }
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::uint64_t h = 0x9E3779B97F4A7C15ull;
    for (int i = 0; i < 4; ++i) {
      std::uint64_t x;
      std::memcpy(&x, k.b.data() + 8 * i, 8);
      h ^= x;
      h *= 0xbf58476d1ce4e5b9ull;
      h ^= h >> 31;
    }
    return static_cast<std::size_t>(h);
  }
};

// Tiles sorted by position; the first nq belong to the row being built.
struct Boundary {
  int nq = 0;
  int np = 0;
  std::array<int, kMaxTiles> pos{};
  std::array<std::uint8_t, kMaxTiles> lab{};
  int size() const { return nq + np; }
};

template <typename C>
struct CountVec {
  std::uint8_t lo = 0;
  absl::InlinedVector<C, 2> c;

  void Add(int t, C v) {
    if (c.empty()) {
      lo = static_cast<std::uint8_t>(t);
      c.push_back(v);
      return;
    }
    if (t < lo) {
      c.insert(c.begin(), static_cast<std::size_t>(lo - t), C{0});
      lo = static_cast<std::uint8_t>(t);
    }
    const auto idx = static_cast<std::size_t>(t - lo);
    if (idx >= c.size()) c.resize(idx + 1, C{0});
    AddChecked(c[idx], v);
  }
};

// Relabels 0..c-1 in order of first occurrence; returns c.
int Canonicalize(Boundary& b) {
  std::array<std::uint8_t, 256> map;
  map.fill(kNoLabel);
  int next = 0;
  for (int i = 0; i < b.size(); ++i) {
    auto& l = b.lab[static_cast<std::size_t>(i)];
    if (map[l] == kNoLabel) map[l] = static_cast<std::uint8_t>(next++);
    l = map[l];
  }
  return next;
}

Key Encode(const Boundary& b) {
  Key k;
  k.b[0] = static_cast<std::uint8_t>(b.nq);
  k.b[1] = static_cast<std::uint8_t>(b.np);
  for (int i = 0; i + 1 < b.size(); ++i) {
    const int gap = b.pos[static_cast<std::size_t>(i + 1)] - b.pos[static_cast<std::size_t>(i)];
    if (gap > 255) throw DomainError("row transfer: tile gap exceeds 255 columns");
    k.b[static_cast<std::size_t>(2 + i)] = static_cast<std::uint8_t>(gap);
  }
  for (int i = 0; i < b.size(); ++i) {
    if (b.lab[static_cast<std::size_t>(i)] > 15) throw DomainError("row transfer: more than 16 classes");
    k.b[static_cast<std::size_t>(21 + i / 2)] |=
        static_cast<std::uint8_t>(b.lab[static_cast<std::size_t>(i)] << ((i & 1) * 4));
  }
  return k;
}

// Positions come back with the last current-row tile at 0, or with the
// first tile at 0 when the current row is empty.
Boundary Decode(const Key& k) {
  Boundary b;
  b.nq = k.b[0];
  b.np = k.b[1];
  int p = 0;
  for (int i = 0; i < b.size(); ++i) {
    if (i > 0) p += k.b[static_cast<std::size_t>(2 + i - 1)];
    b.pos[static_cast<std::size_t>(i)] = p;
    b.lab[static_cast<std::size_t>(i)] =
        static_cast<std::uint8_t>((k.b[static_cast<std::size_t>(21 + i / 2)] >> ((i & 1) * 4)) & 15u);
  }
  if (b.nq > 0) {
    const int shift = b.pos[static_cast<std::size_t>(b.nq - 1)];
    for (int i = 0; i < b.size(); ++i) b.pos[static_cast<std::size_t>(i)] -= shift;
  }
  return b;
}

template <typename C>
using Table = absl::flat_hash_map<Key, CountVec<C>, KeyHash>;

template <typename C>
class RowEngine {
 public:
  RowEngine(int w, int n_max, const RowTransferOptions& options)
      : w_(w), n_(n_max), options_(options), done_(static_cast<std::size_t>(n_max) + 1, C{0}) {}

  RowTransferResult Run() {
    Table<C> rowstart;
    for (int row = 0; row < n_; ++row) {
      Table<C> level;
      if (row == 0) {
        Boundary b;
        b.nq = 1;
        CountVec<C> one;
        one.Add(1, C{1});
        if (n_ == 1) {
          AddChecked(done_[1], C{1});
        } else {
          level.emplace(Encode(b), std::move(one));
        }
      } else {
        Expand(rowstart, [&](const Key& key, const CountVec<C>& cv, Sink& sink) { StartRow(key, cv, sink); },
               level, nullptr);
      }
      rowstart.clear();
      // every structure of height <= row has been counted by now
      finished_n_ = row;
      Table<C> next_rowstart;
      while (!level.empty()) {
        Table<C> next_level;
        Expand(level, [&](const Key& key, const CountVec<C>& cv, Sink& sink) { Advance(key, cv, sink); },
               next_level, &next_rowstart);
        level = std::move(next_level);
      }
      rowstart = std::move(next_rowstart);
      if (rowstart.empty()) break;
    }
    RowTransferResult result;
    result.peak_table_size = peak_;
    for (int n = 1; n <= n_; ++n) result.counts.push_back(ToBig(static_cast<unsigned __int128>(done_[static_cast<std::size_t>(n)])));
    return result;
  }

 private:
  struct Sink {
    Table<C>* level = nullptr;
    Table<C>* rowstart = nullptr;
    std::vector<C>* done = nullptr;
  };

  template <typename F>
  void Expand(const Table<C>& source, F&& step, Table<C>& level_out, Table<C>* rowstart_out) {
    const int threads = std::max(1, options_.threads);
    if (threads == 1 || source.size() < 4096) {
      Sink sink{&level_out, rowstart_out, &done_};
      std::size_t seen = 0;
      for (const auto& [key, cv] : source) {
        step(key, cv, sink);
        if ((++seen & 0xfffu) == 0) CheckResident(level_out);
      }
    } else {
      std::vector<const typename Table<C>::value_type*> items;
      items.reserve(source.size());
      for (const auto& item : source) items.push_back(&item);
      const auto nt = static_cast<std::size_t>(threads);
      std::vector<Table<C>> levels(nt);
      std::vector<Table<C>> starts(nt);
      std::vector<std::vector<C>> dones(nt, std::vector<C>(done_.size(), C{0}));
      std::vector<std::thread> pool;
      bool overflow = false;
      std::exception_ptr error;
      std::mutex mu;
      for (std::size_t t = 0; t < nt; ++t) {
        pool.emplace_back([&, t] {
          try {
            Sink sink{&levels[t], rowstart_out != nullptr ? &starts[t] : nullptr, &dones[t]};
            for (std::size_t i = items.size() * t / nt; i < items.size() * (t + 1) / nt; ++i) {
              step(items[i]->first, items[i]->second, sink);
              if ((i & 0xfffu) == 0) CheckResident(levels[t]);
            }
          } catch (const Overflow&) {
            std::lock_guard<std::mutex> lock(mu);
            overflow = true;
          } catch (...) {
            std::lock_guard<std::mutex> lock(mu);
            error = std::current_exception();
          }
        });
      }
      for (auto& th : pool) th.join();
      if (error) std::rethrow_exception(error);
      if (overflow) throw Overflow{};
      for (std::size_t t = 0; t < nt; ++t) {
        Merge(levels[t], level_out);
        if (rowstart_out != nullptr) Merge(starts[t], *rowstart_out);
        for (std::size_t i = 0; i < done_.size(); ++i) AddChecked(done_[i], dones[t][i]);
      }
    }
    peak_ = std::max({peak_, level_out.size(), rowstart_out != nullptr ? rowstart_out->size() : 0});
    CheckMemory(source.size() + level_out.size() + (rowstart_out != nullptr ? rowstart_out->size() : 0));
  }

  static void Merge(Table<C>& from, Table<C>& into) {
    for (auto& [key, cv] : from) {
      CountVec<C>& dst = into[key];
      for (std::size_t i = 0; i < cv.c.size(); ++i) {
        if (cv.c[i] != C{0}) dst.Add(cv.lo + static_cast<int>(i), cv.c[i]);
      }
    }
    from.clear();
  }

  // A single level can outgrow the budget, so look at the process too. The
  // next rehash of the growing table allocates twice its slot array.
  void CheckResident(const Table<C>& growing) const {
    const std::uint64_t rehash = 2ull * growing.capacity() * (sizeof(typename Table<C>::value_type) + 1);
    if (ResidentBytes() + rehash > options_.memory_budget_bytes) {
      CheckMemory(std::numeric_limits<std::size_t>::max() / 1024);
    }
  }

  void CheckMemory(std::size_t entries) const {
    const std::uint64_t bytes = static_cast<std::uint64_t>(entries) * (sizeof(Key) + sizeof(CountVec<C>) + 16);
    const bool over_time =
        options_.time_budget_seconds > 0 &&
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count() >
            options_.time_budget_seconds;
    const bool over_memory =
        bytes > options_.memory_budget_bytes || ResidentBytes() > options_.memory_budget_bytes;
    if (over_memory || over_time) {
      std::vector<BigInt> partial;
      for (int n = 1; n <= finished_n_; ++n) {
        partial.push_back(ToBig(static_cast<unsigned __int128>(done_[static_cast<std::size_t>(n)])));
      }
      throw ResourceLimitError(over_time ? "row transfer ran out of time"
                                         : "row transfer tables exceeded the memory budget",
                               finished_n_, std::move(partial));
    }
  }

  int LinkCost(int d) const {
    // shortest odd path of tiles above the row joining two tiles d apart
    int k = (d + w_ - 2) / (w_ - 1) - 1;
    if (k < 1) k = 1;
    if (k % 2 == 0) ++k;
    return k;
  }

  // Lower bound on further tiles for a finished row whose tiles are `b`
  // (nq == 0, np tiles with labels).
  int RowLowerBound(const Boundary& b, int classes) const {
    if (classes <= 1) return 0;
    std::array<int, 16> nearest;
    nearest.fill(std::numeric_limits<int>::max());
    for (int i = 0; i + 1 < b.np; ++i) {
      const auto a = b.lab[static_cast<std::size_t>(i)];
      const auto c = b.lab[static_cast<std::size_t>(i + 1)];
      if (a == c) continue;
      const int d = b.pos[static_cast<std::size_t>(i + 1)] - b.pos[static_cast<std::size_t>(i)];
      nearest[a] = std::min(nearest[a], d);
      nearest[c] = std::min(nearest[c], d);
    }
    int lb = classes - 1;
    for (int l = 0; l < classes; ++l) lb = std::max(lb, LinkCost(nearest[static_cast<std::size_t>(l)]));
    return lb;
  }

  // Lower bound on further tiles from a mid-row boundary whose next tile
  // starts at or after w.
  int LevelLowerBound(const Boundary& b, int classes) const {
    std::array<bool, 16> in_row{};
    std::array<bool, 16> below{};
    for (int i = 0; i < b.nq; ++i) in_row[b.lab[static_cast<std::size_t>(i)]] = true;
    for (int i = b.nq; i < b.size(); ++i) below[b.lab[static_cast<std::size_t>(i)]] = true;
    int untouched = 0;
    int closed = 0;
    int open = 0;
    for (int l = 0; l < classes; ++l) {
      if (!in_row[static_cast<std::size_t>(l)]) {
        ++untouched;
      } else if (below[static_cast<std::size_t>(l)]) {
        ++open;
      } else {
        ++closed;
      }
    }
    // a tile overlaps at most two tiles of the row below
    const int this_row = (untouched + 1) / 2;
    const int components = closed + (open + untouched > 0 ? 1 : 0);
    if (components <= 1) return this_row;
    int lb = components - 1;
    // closed classes cannot merge in this row; their nearest other tile is
    // known except to the right of the last tile
    std::array<int, 16> nearest;
    nearest.fill(std::numeric_limits<int>::max());
    for (int i = 0; i + 1 < b.nq; ++i) {
      const auto a = b.lab[static_cast<std::size_t>(i)];
      const auto c = b.lab[static_cast<std::size_t>(i + 1)];
      if (a == c) continue;
      const int d = b.pos[static_cast<std::size_t>(i + 1)] - b.pos[static_cast<std::size_t>(i)];
      nearest[a] = std::min(nearest[a], d);
      nearest[c] = std::min(nearest[c], d);
    }
    const auto last = b.lab[static_cast<std::size_t>(b.nq - 1)];
    nearest[last] = std::min(nearest[last], w_);
    for (int l = 0; l < classes; ++l) {
      if (in_row[static_cast<std::size_t>(l)] && !below[static_cast<std::size_t>(l)] &&
          nearest[static_cast<std::size_t>(l)] != std::numeric_limits<int>::max()) {
        lb = std::max(lb, LinkCost(nearest[static_cast<std::size_t>(l)]));
      }
    }
    return this_row + lb;
  }

  // Adds a tile at `q` (same frame as `in`). On success `out` is
  // canonical with the new tile at 0 and holds only row-below tiles a later
  // tile could overlap. Fails when a class of the row below gets stranded.
  bool Place(const Boundary& in, int q, Boundary& out, int& classes) const {
    std::array<std::uint8_t, 17> parent;
    for (std::uint8_t i = 0; i < 17; ++i) parent[i] = i;
    auto find = [&](std::uint8_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    constexpr std::uint8_t kNew = 16;
    for (int i = in.nq; i < in.size(); ++i) {
      const int p = in.pos[static_cast<std::size_t>(i)];
      if (p - q <= w_ - 1 && q - p <= w_ - 1) {
        const std::uint8_t a = find(in.lab[static_cast<std::size_t>(i)]);
        const std::uint8_t c = find(kNew);
        if (a != c) parent[a] = c;
      }
    }
    if (in.nq + 1 > kMaxTiles) throw DomainError("row transfer: too many tiles in one row");
    out.nq = in.nq + 1;
    out.np = 0;
    std::array<bool, 17> alive{};
    for (int i = 0; i < in.nq; ++i) {
      out.pos[static_cast<std::size_t>(i)] = in.pos[static_cast<std::size_t>(i)] - q;
      out.lab[static_cast<std::size_t>(i)] = find(in.lab[static_cast<std::size_t>(i)]);
      alive[out.lab[static_cast<std::size_t>(i)]] = true;
    }
    out.pos[static_cast<std::size_t>(in.nq)] = 0;
    out.lab[static_cast<std::size_t>(in.nq)] = find(kNew);
    alive[find(kNew)] = true;
    int k = out.nq;
    for (int i = in.nq; i < in.size(); ++i) {
      const int p = in.pos[static_cast<std::size_t>(i)];
      if (p < q + 1) continue;  // out of reach of any later tile
      if (k >= kMaxTiles) throw DomainError("row transfer: boundary holds too many tiles");
      out.pos[static_cast<std::size_t>(k)] = p - q;
      out.lab[static_cast<std::size_t>(k)] = find(in.lab[static_cast<std::size_t>(i)]);
      alive[out.lab[static_cast<std::size_t>(k)]] = true;
      ++k;
      ++out.np;
    }
    for (int i = in.nq; i < in.size(); ++i) {
      if (!alive[find(in.lab[static_cast<std::size_t>(i)])]) return false;
    }
    classes = Canonicalize(out);
    return true;
  }

  // Emits `cv` shifted by `extra` tiles under `key` in `table`, keeping
  // only tile counts that can still finish within the budget.
  void Emit(Table<C>& table, const Key& key, const CountVec<C>& cv, int extra, int lb) const {
    CountVec<C>* dst = nullptr;
    for (std::size_t i = 0; i < cv.c.size(); ++i) {
      if (cv.c[i] == C{0}) continue;
      const int t = cv.lo + static_cast<int>(i) + extra;
      if (t + lb > n_) continue;
      if (dst == nullptr) dst = &table[key];
      dst->Add(t, cv.c[i]);
    }
  }

  // Closes the current row of `b`; the row becomes the one below.
  void EndRow(const Boundary& b, const CountVec<C>& cv, int extra, Sink& sink) const {
    std::array<bool, 16> in_row{};
    for (int i = 0; i < b.nq; ++i) in_row[b.lab[static_cast<std::size_t>(i)]] = true;
    for (int i = b.nq; i < b.size(); ++i) {
      if (!in_row[b.lab[static_cast<std::size_t>(i)]]) return;  // a class of the row below is stranded
    }
    Boundary p;
    p.nq = 0;
    p.np = b.nq;
    for (int i = 0; i < b.nq; ++i) {
      p.pos[static_cast<std::size_t>(i)] = b.pos[static_cast<std::size_t>(i)] - b.pos[0];
      p.lab[static_cast<std::size_t>(i)] = b.lab[static_cast<std::size_t>(i)];
    }
    const int classes = Canonicalize(p);
    const int lb = RowLowerBound(p, classes);
    CountVec<C>* dst = nullptr;
    for (std::size_t i = 0; i < cv.c.size(); ++i) {
      if (cv.c[i] == C{0}) continue;
      const int t = cv.lo + static_cast<int>(i) + extra;
      if (t + lb > n_) continue;
      if (t == n_ || sink.rowstart == nullptr) {
        if (classes == 1) AddChecked((*sink.done)[static_cast<std::size_t>(t)], cv.c[i]);
        continue;
      }
      if (dst == nullptr) dst = &(*sink.rowstart)[Encode(p)];
      dst->Add(t, cv.c[i]);
    }
  }

  // Places tile `q` and routes the result: full-budget states can only close
  // their row, everything else goes to the next level.
  // Returns false once larger q cannot succeed either.
  bool PlaceAndEmit(const Boundary& b, int q, const CountVec<C>& cv, Sink& sink, bool beyond_below) const {
    Boundary o;
    int classes = 0;
    if (!Place(b, q, o, classes)) return false;
    const int lb = LevelLowerBound(o, classes);
    if (cv.lo + 1 + lb > n_) return !beyond_below;
    const Key key = Encode(o);
    // states at the full budget can only close the row
    CountVec<C> keep;
    CountVec<C> full;
    for (std::size_t i = 0; i < cv.c.size(); ++i) {
      if (cv.c[i] == C{0}) continue;
      const int t = cv.lo + static_cast<int>(i) + 1;
      if (t + lb > n_) continue;
      if (t == n_) {
        full.Add(t, cv.c[i]);
      } else {
        keep.Add(t, cv.c[i]);
      }
    }
    if (!full.c.empty()) {
      Sink closing{nullptr, nullptr, sink.done};
      EndRow(o, full, 0, closing);
    }
    if (!keep.c.empty()) Emit(*sink.level, key, keep, 0, lb);
    return true;
  }

  void StartRow(const Key& key, const CountVec<C>& cv, Sink& sink) const {
    const Boundary p = Decode(key);
    int classes = 0;
    for (int i = 0; i < p.np; ++i) classes = std::max(classes, p.lab[static_cast<std::size_t>(i)] + 1);
    if (classes == 1) {
      // the structure may stop below this row
      for (std::size_t i = 0; i < cv.c.size(); ++i) {
        AddChecked((*sink.done)[cv.lo + i], cv.c[i]);
      }
    }
    const int budget = n_ - cv.lo - 1;  // tiles left after this one
    if (budget < 0) return;
    const int last = p.pos[static_cast<std::size_t>(p.np - 1)];
    // a chain of at most `budget` tiles must join the new tile to the row below
    const int first = p.pos[0] - (budget + 1) * (w_ - 1);
    for (int q = first; q <= last + w_ - 1; ++q) {
      if (!PlaceAndEmit(p, q, cv, sink, false)) break;
    }
  }

  void Advance(const Key& key, const CountVec<C>& cv, Sink& sink) const {
    const Boundary b = Decode(key);
    EndRow(b, cv, 0, sink);
    if (cv.lo >= n_) return;
    const int below_end = b.np > 0 ? b.pos[static_cast<std::size_t>(b.size() - 1)] + w_ - 1 : 0;
    const int budget = n_ - cv.lo - 1;
    const int limit = std::max(below_end, w_) + (budget + 1) * (w_ - 1);
    for (int q = w_; q <= limit; ++q) {
      if (!PlaceAndEmit(b, q, cv, sink, q > below_end)) break;
    }
  }

  int w_;
  int n_;
  RowTransferOptions options_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
  std::vector<C> done_;
  std::size_t peak_ = 0;
  int finished_n_ = 0;
};

}  // namespace

RowTransferResult RowTransferCount(int w, int n_max, const RowTransferOptions& options) {
  if (w < 2 || w > 16) throw DomainError("row transfer needs tile width in 2..16");
  if (n_max < 1 || n_max > kMaxTiles) {
    throw DomainError("row transfer supports 1.." + std::to_string(kMaxTiles) + " tiles");
  }
  try {
    return RowEngine<std::uint64_t>(w, n_max, options).Run();
  } catch (const Overflow&) {
    try {
      return RowEngine<unsigned __int128>(w, n_max, options).Run();
    } catch (const Overflow&) {
      throw DomainError("row transfer count overflowed 128 bits");
    }
  }
}

}  // namespace tilecount::detail
