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

#include "tilecount/flat_transfer.hpp"

#include <absl/container/flat_hash_map.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <limits>
#include <string>
#include <thread>

#include "resource.hpp"
#include "row_transfer.hpp"
#include "tilecount/errors.hpp"

namespace tilecount {

namespace {

using Count = unsigned __int128;

BigInt ToBig(Count c) {
  BigInt hi(static_cast<unsigned long>(static_cast<std::uint64_t>(c >> 64)));
  BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(c)));
  return (hi << 64) + lo;
}

void AddChecked(Count& into, Count v) {
  if (into > std::numeric_limits<Count>::max() - v) {
    throw DomainError("transfer-matrix count overflowed 128 bits");
  }
  into += v;
}

constexpr std::uint8_t kLeft = 1;
constexpr std::uint8_t kRight = 2;
constexpr int kMaxLabel = 15;

/// Boundary packed four bits per cell; the two nibbles after the last cell
/// hold the owed tile cells and the edge flags.
template <int Words>
struct Key {
  std::array<std::uint64_t, Words> word{};

  std::uint8_t Get(int i) const {
    return static_cast<std::uint8_t>((word[static_cast<std::size_t>(i >> 4)] >> ((i & 15) * 4)) & 15u);
  }
  void Set(int i, std::uint8_t v) {
    std::uint64_t& x = word[static_cast<std::size_t>(i >> 4)];
    const int shift = (i & 15) * 4;
    x = (x & ~(std::uint64_t{15} << shift)) | (std::uint64_t{v} << shift);
  }
  friend bool operator==(const Key&, const Key&) = default;
};

template <int Words>
struct KeyHash {
  std::size_t operator()(const Key<Words>& k) const {
    std::uint64_t h = 0x9E3779B97F4A7C15ull;
    for (std::uint64_t x : k.word) {
      h ^= x;
      h *= 0xbf58476d1ce4e5b9ull;
      h ^= h >> 31;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Counts indexed by tiles used, stored from the smallest nonzero index.
struct CountVector {
  std::uint8_t lo = 0;
  std::vector<Count> c;

  void Add(int t, Count v) {
    if (c.empty()) {
      lo = static_cast<std::uint8_t>(t);
      c.push_back(v);
      return;
    }
    if (t < lo) {
      c.insert(c.begin(), static_cast<std::size_t>(lo - t), 0);
      lo = static_cast<std::uint8_t>(t);
    }
    const auto idx = static_cast<std::size_t>(t - lo);
    if (idx >= c.size()) c.resize(idx + 1, 0);
    AddChecked(c[idx], v);
  }
};

class EngineBase {
 public:
  virtual ~EngineBase() = default;
  virtual void Step() = 0;
  virtual std::size_t Prune() = 0;
  virtual std::size_t table_size() const = 0;
  virtual std::uint64_t approx_memory_bytes() const = 0;
  virtual std::vector<SignatureEntry> Snapshot() const = 0;
  virtual bool finished() const = 0;
  virtual std::uint64_t position() const = 0;
  virtual std::size_t peak_table_size() const = 0;
  virtual const std::vector<Count>& completed() const = 0;
};

template <int Words>
class Engine final : public EngineBase {
 public:
  using K = Key<Words>;
  using Table = absl::flat_hash_map<K, CountVector, KeyHash<Words>>;

  Engine(int w, int n_max, int width, const TransferOptions& options)
      : w_(w), n_max_(n_max), width_(width), rows_(n_max), options_(options),
        completed_(static_cast<std::size_t>(n_max) + 1, 0) {
    for (int i = 0; i < width; ++i) cells_[static_cast<std::size_t>(i >> 4)] |= std::uint64_t{15} << ((i & 15) * 4);
    CountVector start;
    start.Add(0, 1);
    table_.emplace(K{}, std::move(start));
    peak_ = 1;
  }

  bool finished() const override {
    return table_.empty() || pos_ >= static_cast<std::uint64_t>(width_) * static_cast<std::uint64_t>(rows_);
  }
  std::uint64_t position() const override { return pos_; }
  std::size_t table_size() const override { return table_.size(); }
  std::size_t peak_table_size() const override { return peak_; }
  const std::vector<Count>& completed() const override { return completed_; }

  std::uint64_t approx_memory_bytes() const override {
    std::uint64_t bytes = table_.capacity() * (sizeof(typename Table::value_type) + 1);
    for (const auto& [k, v] : table_) bytes += v.c.capacity() * sizeof(Count) + 16;
    return bytes;
  }

  void Step() override {
    if (finished()) return;
    const int col = static_cast<int>(pos_ % static_cast<std::uint64_t>(width_));
    const int row = static_cast<int>(pos_ / static_cast<std::uint64_t>(width_));
    Table next;
    next.reserve(table_.size() * 2);
    const int threads = std::max(1, options_.threads);
    if (threads == 1 || table_.size() < 4096) {
      for (const auto& [key, counts] : table_) Expand(key, counts, col, next, completed_);
    } else {
      std::vector<const typename Table::value_type*> items;
      items.reserve(table_.size());
      for (const auto& item : table_) items.push_back(&item);
      std::vector<Table> local(static_cast<std::size_t>(threads));
      std::vector<std::vector<Count>> local_done(static_cast<std::size_t>(threads),
                                                 std::vector<Count>(completed_.size(), 0));
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
          const std::size_t begin = items.size() * static_cast<std::size_t>(t) / static_cast<std::size_t>(threads);
          const std::size_t end = items.size() * static_cast<std::size_t>(t + 1) / static_cast<std::size_t>(threads);
          for (std::size_t i = begin; i < end; ++i) {
            Expand(items[i]->first, items[i]->second, col, local[static_cast<std::size_t>(t)],
                   local_done[static_cast<std::size_t>(t)]);
          }
        });
      }
      for (auto& th : pool) th.join();
      for (int t = 0; t < threads; ++t) {
        for (auto& [key, counts] : local[static_cast<std::size_t>(t)]) {
          CountVector& dst = next[key];
          for (std::size_t i = 0; i < counts.c.size(); ++i) {
            if (counts.c[i] != 0) dst.Add(counts.lo + static_cast<int>(i), counts.c[i]);
          }
        }
        for (std::size_t i = 0; i < completed_.size(); ++i) {
          AddChecked(completed_[i], local_done[static_cast<std::size_t>(t)][i]);
        }
      }
    }
    table_ = std::move(next);
    ++pos_;
    if (row == 0 && col == width_ - 1) table_.erase(K{});  // structures must touch row 0
    if (pos_ == static_cast<std::uint64_t>(width_) * static_cast<std::uint64_t>(rows_)) Finalize();
    peak_ = std::max(peak_, table_.size());
    if (options_.on_cell) options_.on_cell(pos_ - 1, table_.size());
  }

  std::size_t Prune() override {
    std::size_t removed = 0;
    for (auto it = table_.begin(); it != table_.end();) {
      const int lb = LowerBound(it->first, static_cast<int>((pos_ + width_ - 1) % width_));
      CountVector& cv = it->second;
      for (std::size_t i = 0; i < cv.c.size(); ++i) {
        if (cv.lo + static_cast<int>(i) + lb > n_max_) cv.c[i] = 0;
      }
      bool empty = std::all_of(cv.c.begin(), cv.c.end(), [](Count c) { return c == 0; });
      if (empty) {
        table_.erase(it++);
        ++removed;
      } else {
        ++it;
      }
    }
    return removed;
  }

  std::vector<SignatureEntry> Snapshot() const override {
    std::vector<SignatureEntry> out;
    for (const auto& [key, counts] : table_) {
      SignatureEntry e;
      for (int i = 0; i < width_; ++i) e.signature.cells.push_back(key.Get(i));
      e.signature.remaining = key.Get(width_);
      e.signature.touches_left = (key.Get(width_ + 1) & kLeft) != 0;
      e.signature.touches_right = (key.Get(width_ + 1) & kRight) != 0;
      e.counts.assign(static_cast<std::size_t>(n_max_) + 1, 0);
      for (std::size_t i = 0; i < counts.c.size(); ++i) e.counts[counts.lo + i] = ToBig(counts.c[i]);
      out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [](const SignatureEntry& a, const SignatureEntry& b) {
      return std::tie(a.signature.cells, a.signature.remaining, a.signature.touches_left,
                      a.signature.touches_right) < std::tie(b.signature.cells, b.signature.remaining,
                                                            b.signature.touches_left,
                                                            b.signature.touches_right);
    });
    return out;
  }

 private:
  // Nibble masks: cells_[i] covers the cell nibbles of word i.
  static constexpr std::uint64_t kOnes = 0x1111111111111111ull;

  // High bit of every nibble of `x` that equals `v`.
  static std::uint64_t NibbleEq(std::uint64_t x, std::uint8_t v) {
    const std::uint64_t t = x ^ (kOnes * v);
    const std::uint64_t low = 0x7777777777777777ull;
    return ~(((t & low) + low) | t) & 0x8888888888888888ull;
  }

  bool Contains(const K& k, std::uint8_t v) const {
    for (int i = 0; i < Words; ++i) {
      if ((NibbleEq(k.word[i], v) & cells_[i]) != 0) return true;
    }
    return false;
  }

  bool AnyOccupied(const K& k) const {
    for (int i = 0; i < Words; ++i) {
      if ((k.word[i] & cells_[i]) != 0) return true;
    }
    return false;
  }

  void Replace(K& k, std::uint8_t from, std::uint8_t to) const {
    for (int i = 0; i < Words; ++i) {
      const std::uint64_t m = ((NibbleEq(k.word[i], from) & cells_[i]) >> 3) * 15;
      k.word[i] = (k.word[i] & ~m) | ((kOnes * to) & m);
    }
  }

  // Relabels classes 1..c in order of first occurrence; returns c.
  int Canonicalize(K& k) const {
    std::array<std::uint8_t, 16> map{};
    int next = 0;
    for (int i = 0; i < Words; ++i) {
      std::uint64_t x = k.word[i] & cells_[i];
      std::uint64_t out = k.word[i] & ~cells_[i];
      while (x != 0) {
        const int shift = __builtin_ctzll(x) & ~3;
        const auto v = static_cast<std::uint8_t>((x >> shift) & 15u);
        if (map[v] == 0) map[v] = static_cast<std::uint8_t>(++next);
        out |= std::uint64_t{map[v]} << shift;
        x &= ~(std::uint64_t{15} << shift);
      }
      k.word[i] = out;
    }
    return next;
  }

  // Fewest extra tiles that could still finish a structure from `key`;
  // `col` is the column of the cell that was just scanned.
  int LowerBound(const K& key, int col) const {
    const int rem = key.Get(width_);
    const int flags = key.Get(width_ + 1);
    K k = key;
    if (rem > 0) {
      // the tile in progress will cover col+1..col+rem
      const std::uint8_t label = k.Get(col);
      for (int c = col + 1; c <= col + rem; ++c) {
        const std::uint8_t v = k.Get(c);
        if (v != 0 && v != label) Replace(k, v, label);
        k.Set(c, label);
      }
    }
    // sweep occupied cells left to right; a class needs at least one chain
    // of new tiles reaching the nearest cell of another class
    std::array<int, 16> nearest;
    nearest.fill(std::numeric_limits<int>::max());
    std::uint16_t labels = 0;
    int leftmost = -1;
    int prev_col = -1;
    std::uint8_t prev = 0;
    for (int i = 0; i < Words; ++i) {
      std::uint64_t x = k.word[i] & cells_[i];
      while (x != 0) {
        const int shift = __builtin_ctzll(x) & ~3;
        const auto v = static_cast<std::uint8_t>((x >> shift) & 15u);
        const int c = i * 16 + shift / 4;
        x &= ~(std::uint64_t{15} << shift);
        if (leftmost < 0) leftmost = c;
        labels = static_cast<std::uint16_t>(labels | (1u << v));
        if (prev != 0 && prev != v) {
          nearest[v] = std::min(nearest[v], c - prev_col);
          nearest[prev] = std::min(nearest[prev], c - prev_col);
        }
        prev = v;
        prev_col = c;
      }
    }
    if (leftmost < 0) return 0;  // not started yet
    const int rightmost = prev_col;
    const int step = w_ - 1;
    int lb = 0;
    if ((labels & (labels - 1)) != 0) {
      for (int v = 1; v < 16; ++v) {
        if ((labels >> v) & 1u) lb = std::max(lb, (nearest[v] + step - 1) / step);
      }
    }
    const bool need_left = (flags & kLeft) == 0;
    const bool need_right = anchor_right_ && (flags & kRight) == 0;
    const int left = need_left ? (leftmost + step - 1) / step : 0;
    const int right = need_right ? (width_ - 1 - rightmost + step - 1) / step : 0;
    int edges = std::max(left, right);
    if (need_left && need_right) {
      // disjoint chains to both edges, or one chain of new tiles spanning the region
      edges = std::max(edges, std::min(left + right, (width_ - 1 + step - 1) / step));
    }
    return std::max(lb, edges);
  }

  // Adds `counts` shifted by `extra_tiles` to `next` under key `k`.
  void Emit(K& k, const CountVector& counts, int extra_tiles, int col, Table& next,
            std::vector<Count>& done) const {
    if (Canonicalize(k) > kMaxLabel - 1) {
      throw DomainError("boundary needs more than 14 connectivity classes");
    }
    int lb = 0;
    bool complete_now = false;
    const bool owes = k.Get(width_) != 0;
    if (options_.prune) {
      lb = LowerBound(k, col);
      if (lb == 0 && !owes) complete_now = true;  // one class, edges touched
    }
    CountVector* dst = nullptr;
    for (std::size_t i = 0; i < counts.c.size(); ++i) {
      const Count c = counts.c[i];
      if (c == 0) continue;
      const int t = counts.lo + static_cast<int>(i) + extra_tiles;
      if (t + lb > n_max_) continue;
      if (options_.prune && t == n_max_) {
        if (complete_now) AddChecked(done[static_cast<std::size_t>(t)], c);
        if (!owes) continue;
      }
      if (dst == nullptr) dst = &next[k];
      dst->Add(t, c);
    }
  }

  void Expand(const K& key, const CountVector& counts, int col, Table& next,
              std::vector<Count>& done) const {
    const std::uint8_t rem = key.Get(width_);
    const std::uint8_t flags = key.Get(width_ + 1);
    const std::uint8_t old = key.Get(col);

    if (rem > 0) {
      // forced: the tile in progress covers this cell
      const std::uint8_t label = key.Get(col - 1);
      K k = key;
      if (old != 0 && old != label) Replace(k, old, label);
      k.Set(col, label);
      k.Set(width_, static_cast<std::uint8_t>(rem - 1));
      Emit(k, counts, 0, col, next, done);
      return;
    }

    // leave the cell empty
    {
      K k = key;
      k.Set(col, 0);
      if (old == 0 || Contains(k, old)) {
        Emit(k, counts, 0, col, next, done);
      } else if (!AnyOccupied(k)) {
        // the last class left the boundary: the structure is finished
        if (flags == Done()) {
          for (std::size_t i = 0; i < counts.c.size(); ++i) {
            AddChecked(done[counts.lo + i], counts.c[i]);
          }
        }
      }
      // otherwise a class was cut off from the rest: disconnected, dropped
    }

    // start a new tile here
    if (col + w_ <= width_) {
      K k = key;
      // a fresh class gets the spare label; Canonicalize renumbers it
      const std::uint8_t label = old == 0 ? kMaxLabel : old;
      std::uint8_t f = flags;
      if (col == 0) f |= kLeft;
      if (anchor_right_ && col + w_ == width_) f |= kRight;
      k.Set(col, label);
      k.Set(width_, static_cast<std::uint8_t>(w_ - 1));
      k.Set(width_ + 1, f);
      Emit(k, counts, 1, col, next, done);
    }
  }

  void Finalize() {
    // an extra empty row above the region: single-class states finish
    for (const auto& [key, counts] : table_) {
      std::uint8_t labels_seen = 0;
      bool multi = false;
      for (int i = 0; i < width_; ++i) {
        const std::uint8_t v = key.Get(i);
        if (v == 0) continue;
        if (labels_seen != 0 && v != labels_seen) multi = true;
        labels_seen = v;
      }
      if (multi || labels_seen == 0 || (key.Get(width_ + 1) & Done()) != Done()) continue;
      for (std::size_t i = 0; i < counts.c.size(); ++i) AddChecked(completed_[counts.lo + i], counts.c[i]);
    }
    table_.clear();
  }

  std::uint8_t Done() const { return anchor_right_ ? (kLeft | kRight) : kLeft; }

  std::array<std::uint64_t, Words> cells_{};
  int w_;
  int n_max_;
  int width_;
  int rows_;
  TransferOptions options_;
  bool anchor_right_ = options_.anchor == TransferOptions::Anchor::kExactWidth;
  std::vector<Count> completed_;
  Table table_;
  std::uint64_t pos_ = 0;
  std::size_t peak_ = 0;
};

std::unique_ptr<EngineBase> MakeEngine(int w, int n_max, int width, const TransferOptions& options) {
  const int nibbles = width + 2;
  if (nibbles <= 16) return std::make_unique<Engine<1>>(w, n_max, width, options);
  if (nibbles <= 32) return std::make_unique<Engine<2>>(w, n_max, width, options);
  if (nibbles <= 48) return std::make_unique<Engine<3>>(w, n_max, width, options);
  if (nibbles <= 64) return std::make_unique<Engine<4>>(w, n_max, width, options);
  if (nibbles <= 80) return std::make_unique<Engine<5>>(w, n_max, width, options);
  if (nibbles <= 96) return std::make_unique<Engine<6>>(w, n_max, width, options);
  if (nibbles <= 128) return std::make_unique<Engine<8>>(w, n_max, width, options);
  if (nibbles <= 256) return std::make_unique<Engine<16>>(w, n_max, width, options);
  throw DomainError("region width " + std::to_string(width) + " exceeds the supported 254 columns");
}

}  // namespace

struct TransferMatrix::Impl {
  std::unique_ptr<EngineBase> engine;
  int width;
  int rows;
};

TransferMatrix::TransferMatrix(int w, int n_max, int region_width, TransferOptions options) {
  if (w < 2 || w > 16) throw DomainError("transfer matrix needs tile width in 2..16");
  if (n_max < 1 || n_max > 200) throw DomainError("tile count must be in 1..200");
  if (region_width < w) throw DomainError("region narrower than one tile");
  impl_ = std::make_unique<Impl>(Impl{MakeEngine(w, n_max, region_width, options), region_width, n_max});
}

TransferMatrix::~TransferMatrix() = default;
TransferMatrix::TransferMatrix(TransferMatrix&&) noexcept = default;
TransferMatrix& TransferMatrix::operator=(TransferMatrix&&) noexcept = default;

int TransferMatrix::region_width() const { return impl_->width; }
int TransferMatrix::rows() const { return impl_->rows; }
std::uint64_t TransferMatrix::position() const { return impl_->engine->position(); }
bool TransferMatrix::finished() const { return impl_->engine->finished(); }
void TransferMatrix::Step() { impl_->engine->Step(); }
std::size_t TransferMatrix::Prune() { return impl_->engine->Prune(); }
std::size_t TransferMatrix::table_size() const { return impl_->engine->table_size(); }
std::size_t TransferMatrix::peak_table_size() const { return impl_->engine->peak_table_size(); }
std::uint64_t TransferMatrix::approx_memory_bytes() const { return impl_->engine->approx_memory_bytes(); }
std::vector<SignatureEntry> TransferMatrix::Snapshot() const { return impl_->engine->Snapshot(); }

void TransferMatrix::Run() {
  while (!finished()) Step();
}

std::vector<BigInt> TransferMatrix::completed() const {
  std::vector<BigInt> out;
  for (Count c : impl_->engine->completed()) out.push_back(ToBig(c));
  return out;
}

TransferResult TmCountDetailed(int w, int n_max, const TransferOptions& options) {
  if (w < 1) throw DomainError("tile width must be positive");
  if (n_max < 1) throw DomainError("tile count must be positive");
  TransferResult result;
  result.counts.assign(static_cast<std::size_t>(n_max), 0);
  if (w == 1) {
    std::fill(result.counts.begin(), result.counts.end(), BigInt(1));
    return result;
  }
  auto method = options.method;
  if (method == TransferOptions::Method::kAuto) {
    method = w <= 3 || n_max > detail::kRowTransferMaxTiles ? TransferOptions::Method::kCellScan
                                                           : TransferOptions::Method::kRowTransfer;
  }
  if (method == TransferOptions::Method::kRowTransfer) {
    detail::RowTransferOptions row_options;
    row_options.threads = options.threads;
    row_options.memory_budget_bytes = options.memory_budget_bytes;
    row_options.time_budget_seconds = options.time_budget_seconds;
    detail::RowTransferResult r = detail::RowTransferCount(w, n_max, row_options);
    result.counts = std::move(r.counts);
    result.peak_table_size = r.peak_table_size;
    return result;
  }
  const int widest = 1 + n_max * (w - 1);
  TransferOptions local = options;
  local.anchor = TransferOptions::Anchor::kLeftEdge;
  const auto start = std::chrono::steady_clock::now();
  TransferMatrix tm(w, n_max, widest, local);
  std::uint64_t check = 0;
  // bytes per signature, refreshed from the O(table) estimate every 16 cells
  double per_entry = 0;
  while (!tm.finished()) {
    tm.Step();
    const std::size_t entries = tm.table_size();
    bool over_memory = false;
    if ((++check & 15u) == 0) {
      const std::uint64_t approx = tm.approx_memory_bytes();
      per_entry = entries ? static_cast<double>(approx) / static_cast<double>(entries) : 0;
      over_memory = approx > options.memory_budget_bytes;
    }
    // the next cell builds a second table while this one is alive
    const double projected = static_cast<double>(detail::ResidentBytes()) +
                             per_entry * static_cast<double>(entries);
    over_memory = over_memory || projected > static_cast<double>(options.memory_budget_bytes);
    const bool over_time =
        options.time_budget_seconds > 0 &&
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() >
            options.time_budget_seconds;
    if (over_memory || over_time) {
      // a structure of n tiles is at most n rows tall and is counted once
      // the row above it has been scanned
      const int done_n = std::max(0, static_cast<int>(tm.position() / static_cast<std::uint64_t>(widest)) - 1);
      const std::vector<BigInt> done = tm.completed();
      std::vector<BigInt> partial(done.begin() + 1, done.begin() + 1 + std::min(done_n, n_max));
      throw ResourceLimitError(std::string(over_memory ? "signature table exceeded the memory budget"
                                                       : "time budget ran out") +
                                   " at cell " + std::to_string(tm.position()),
                               done_n, std::move(partial));
    }
  }
  const std::vector<BigInt> done = tm.completed();
  for (int n = 1; n <= n_max; ++n) result.counts[static_cast<std::size_t>(n - 1)] = done[static_cast<std::size_t>(n)];
  result.peak_table_size = tm.peak_table_size();
  return result;
}

std::vector<BigInt> TmCount(int w, int n_max, const TransferOptions& options) {
  return TmCountDetailed(w, n_max, options).counts;
}

}  // namespace tilecount
