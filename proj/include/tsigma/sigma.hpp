#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "tsigma/errors.hpp"
#include "tsigma/group.hpp"
#include "tsigma/primes.hpp"
#include "tsigma/structure.hpp"

namespace tsigma {

/// A partition of the primes into named blocks: explicit blocks plus an
/// optional complement block ("*") that absorbs every remaining prime.
/// The special spec "minimal" is the partition into singletons.
///
/// Block ids: explicit blocks are numbered in spec order; the complement
/// block, when present, gets id = number of explicit blocks. Under "minimal"
/// the block id of a prime is the prime itself.
class SigmaPartition {
 public:
  static SigmaPartition minimal() {
    SigmaPartition s;
    s.minimal_ = true;
    s.spec_ = "minimal";
    return s;
  }

  static SigmaPartition explicit_blocks(std::vector<std::vector<int>> blocks,
                                        bool has_complement, std::string spec) {
    SigmaPartition s;
    s.blocks_ = std::move(blocks);
    s.has_complement_ = has_complement;
    s.spec_ = std::move(spec);
    return s;
  }

  bool is_minimal() const { return minimal_; }
  bool has_complement() const { return has_complement_; }
  const std::string& spec() const { return spec_; }
  int explicit_block_count() const { return int(blocks_.size()); }
  int complement_block_id() const { return int(blocks_.size()); }

  int block_of(int prime) const {
    if (minimal_) return prime;
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (std::find(blocks_[i].begin(), blocks_[i].end(), prime) != blocks_[i].end())
        return int(i);
    if (has_complement_) return complement_block_id();
    throw ValidationError("prime " + std::to_string(prime) +
                          " is not covered by sigma spec \"" + spec_ + "\"");
  }

  std::string block_label(int id) const {
    if (minimal_) return "{" + std::to_string(id) + "}";
    if (has_complement_ && id == complement_block_id()) return "*";
    std::string out = "{";
    for (std::size_t k = 0; k < blocks_[id].size(); ++k) {
      if (k) out += ",";
      out += std::to_string(blocks_[id][k]);
    }
    return out + "}";
  }

  /// Distinct block ids met by the primes of n, ascending.
  std::vector<int> blocks_of(int n) const {
    std::vector<int> out;
    for (int p : prime_factors(n)) {
      int b = block_of(p);
      if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Primes of n lying in the given block.
  std::vector<int> block_primes_of(int id, int n) const {
    std::vector<int> out;
    for (int p : prime_factors(n))
      if (block_of(p) == id) out.push_back(p);
    return out;
  }

 private:
  bool minimal_ = false;
  bool has_complement_ = false;
  std::vector<std::vector<int>> blocks_;
  std::string spec_;
};

/// Grammar: blocks separated by '|'; each block a comma list of primes, or
/// '*' (at most once, last). "minimal" denotes the singleton partition.
inline SigmaPartition parse_sigma(const std::string& spec) {
  if (spec.empty()) throw ParseError("empty sigma spec");
  if (spec == "minimal") return SigmaPartition::minimal();

  std::vector<std::vector<int>> blocks;
  bool complement = false;
  std::vector<bool> used(1024, false);

  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t bar = spec.find('|', pos);
    std::string tok = spec.substr(pos, bar == std::string::npos ? bar : bar - pos);
    if (complement)
      throw ParseError("sigma spec \"" + spec + "\": '*' must be the last block");
    if (tok == "*") {
      complement = true;
    } else {
      std::vector<int> block;
      std::size_t p = 0;
      while (p <= tok.size()) {
        std::size_t comma = tok.find(',', p);
        std::string num = tok.substr(p, comma == std::string::npos ? comma : comma - p);
        if (num.empty())
          throw ParseError("sigma spec \"" + spec + "\": empty prime token");
        for (char c : num)
          if (c < '0' || c > '9')
            throw ParseError("sigma spec \"" + spec + "\": token \"" + num +
                             "\" is not a prime");
        if (num.size() > 4)
          throw ParseError("sigma spec \"" + spec + "\": token \"" + num +
                           "\" is not a prime");
        long v = std::stol(num);
        if (v >= int(used.size()) || !is_prime(int(v)))
          throw ParseError("sigma spec \"" + spec + "\": token \"" + num +
                           "\" is not a prime");
        if (used[v])
          throw ParseError("sigma spec \"" + spec + "\": prime " + num +
                           " appears in two blocks");
        used[v] = true;
        block.push_back(int(v));
        if (comma == std::string::npos) break;
        p = comma + 1;
      }
      std::sort(block.begin(), block.end());
      blocks.push_back(std::move(block));
    }
    if (bar == std::string::npos) break;
    pos = bar + 1;
  }
  return SigmaPartition::explicit_blocks(std::move(blocks), complement, spec);
}

/// n's primes lie in at most one block. True for n = 1.
inline bool is_sigma_primary(int n, const SigmaPartition& sigma) {
  return sigma.blocks_of(n).size() <= 1;
}

/// sigma(G): blocks meeting pi(|G|).
inline std::vector<int> sigma_of(const FiniteGroup& g, const SigmaPartition& sigma) {
  return sigma.blocks_of(g.order());
}

/// Sigma-nilpotent iff G has a normal Hall sigma_i-subgroup for every block of
/// sigma(G); the pairwise-coprime normal Hall pieces form the direct
/// decomposition into sigma-primary factors.
inline bool is_sigma_nilpotent_members(const FiniteGroup& g, const IndexSet& members,
                                       const SigmaPartition& sigma) {
  int n = members.count();
  for (int b : sigma.blocks_of(n))
    if (!detail::has_normal_hall(g, members, n, sigma.block_primes_of(b, n)))
      return false;
  return true;
}

inline bool is_sigma_nilpotent(const FiniteGroup& g, const SigmaPartition& sigma) {
  return is_sigma_nilpotent_members(g, g.full_set(), sigma);
}

inline bool is_sigma_soluble_factors(const std::vector<int>& chief_factor_orders,
                                     const SigmaPartition& sigma) {
  for (int f : chief_factor_orders)
    if (!is_sigma_primary(f, sigma)) return false;
  return true;
}

/// Every chief factor is sigma-primary. One series suffices: chief factor
/// orders are independent of the series.
inline bool is_sigma_soluble(const FiniteGroup& g, const SigmaPartition& sigma) {
  return is_sigma_soluble_factors(chief_series(g).factor_orders, sigma);
}

}  // namespace tsigma
