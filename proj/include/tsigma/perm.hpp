#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tsigma {

/// A permutation of {0, ..., degree-1} stored as its image sequence.
struct Perm {
  std::vector<std::uint16_t> images;

  int degree() const { return int(images.size()); }

  static Perm identity(int degree) {
    Perm p;
    p.images.resize(degree);
    for (int i = 0; i < degree; ++i) p.images[i] = std::uint16_t(i);
    return p;
  }

  /// Every point in 0..degree-1 appears exactly once.
  bool is_valid() const {
    std::vector<bool> seen(images.size(), false);
    for (auto v : images) {
      if (v >= images.size() || seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images.size(); ++i)
      if (images[i] != i) return false;
    return true;
  }

  bool operator==(const Perm& o) const { return images == o.images; }
  bool operator<(const Perm& o) const { return images < o.images; }
};

/// Apply a, then b.
inline Perm compose(const Perm& a, const Perm& b) {
  Perm r;
  r.images.resize(a.images.size());
  for (std::size_t i = 0; i < a.images.size(); ++i)
    r.images[i] = b.images[a.images[i]];
  return r;
}

inline Perm inverse_of(const Perm& a) {
  Perm r;
  r.images.resize(a.images.size());
  for (std::size_t i = 0; i < a.images.size(); ++i)
    r.images[a.images[i]] = std::uint16_t(i);
  return r;
}

/// Disjoint-cycle notation with fixed points omitted; identity prints "()".
inline std::string cycle_string(const Perm& p) {
  std::string out;
  std::vector<bool> done(p.images.size(), false);
  for (std::size_t i = 0; i < p.images.size(); ++i) {
    if (done[i] || p.images[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
      j = p.images[j];
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p.images) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace tsigma
