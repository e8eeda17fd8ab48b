#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace tsigma {

/// Fixed-universe bitset used for element-index sets and subgroup-index sets.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  int universe() const { return n_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  bool subset_of(const IndexSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  bool intersects(const IndexSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  IndexSet& operator&=(const IndexSet& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  IndexSet& operator|=(const IndexSet& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }

  bool operator==(const IndexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const IndexSet& o) const { return !(*this == o); }

  /// Member-list order for sets of equal cardinality: the set owning the
  /// smallest non-shared member comes first.
  static bool lex_less(const IndexSet& a, const IndexSet& b) {
    for (std::size_t k = 0; k < a.w_.size(); ++k) {
      std::uint64_t d = a.w_[k] ^ b.w_[k];
      if (d) {
        std::uint64_t low = d & (~d + 1);
        return (a.w_[k] & low) != 0;
      }
    }
    return false;
  }

  /// Canonical subgroup key: (cardinality, member-list lex).
  static bool key_less(const IndexSet& a, const IndexSet& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return lex_less(a, b);
  }

  int first() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return int(k * 64) + std::countr_zero(w_[k]);
    return -1;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  template <class F>
  void for_each(F f) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        int b = std::countr_zero(w);
        f(int(k * 64) + b);
        w &= w - 1;
      }
    }
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto w : w_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h ^ std::size_t(n_);
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct IndexSetHash {
  std::size_t operator()(const IndexSet& s) const { return s.hash(); }
};

}  // namespace tsigma
