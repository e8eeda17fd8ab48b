#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "tsigma/errors.hpp"
#include "tsigma/group.hpp"
#include "tsigma/products.hpp"

namespace tsigma {

inline FiniteGroup make_cyclic(int n, int cap = kDefaultGroupCap) {
  if (n < 1) throw ValidationError("cyclic order must be positive");
  if (n > cap)
    throw CapExceededError("cyclic:" + std::to_string(n) + " exceeds cap", n);
  std::string name = "cyclic:" + std::to_string(n);
  if (n == 1) return build_from_generators(1, {}, name, cap);
  Perm r;
  r.images.resize(n);
  for (int i = 0; i < n; ++i) r.images[i] = std::uint16_t((i + 1) % n);
  return build_from_generators(n, {r}, name, cap);
}

/// Dihedral group of the given (even) order. Order 4 degenerates to the
/// Klein four-group on four points.
inline FiniteGroup make_dihedral(int order, int cap = kDefaultGroupCap) {
  if (order < 4 || order % 2 != 0)
    throw ValidationError("dihedral order must be even and at least 4");
  if (order > cap)
    throw CapExceededError("dihedral:" + std::to_string(order) + " exceeds cap",
                           order);
  std::string name = "dihedral:" + std::to_string(order);
  int n = order / 2;
  if (n == 2) {
    Perm a, b;
    a.images = {1, 0, 2, 3};
    b.images = {0, 1, 3, 2};
    return build_from_generators(4, {a, b}, name, cap);
  }
  Perm rot, refl;
  rot.images.resize(n);
  refl.images.resize(n);
  for (int i = 0; i < n; ++i) {
    rot.images[i] = std::uint16_t((i + 1) % n);
    refl.images[i] = std::uint16_t(n - 1 - i);
  }
  return build_from_generators(n, {rot, refl}, name, cap);
}

inline FiniteGroup make_symmetric(int n, int cap = kDefaultGroupCap) {
  if (n < 1 || n > 5)
    throw ValidationError("sym:n supports 1 <= n <= 5");
  std::string name = "sym:" + std::to_string(n);
  if (n == 1) return build_from_generators(1, {}, name, cap);
  Perm cycle, swap = Perm::identity(n);
  cycle.images.resize(n);
  for (int i = 0; i < n; ++i) cycle.images[i] = std::uint16_t((i + 1) % n);
  swap.images[0] = 1;
  swap.images[1] = 0;
  return build_from_generators(n, {swap, cycle}, name, cap);
}

inline FiniteGroup make_alternating(int n, int cap = kDefaultGroupCap) {
  if (n < 3 || n > 5)
    throw ValidationError("alt:n supports 3 <= n <= 5");
  std::string name = "alt:" + std::to_string(n);
  Perm three = Perm::identity(n);
  three.images[0] = 1;
  three.images[1] = 2;
  three.images[2] = 0;
  if (n == 3) return build_from_generators(n, {three}, name, cap);
  Perm shift = Perm::identity(n);
  if (n == 4) {
    // (1 2 3)
    shift.images[1] = 2;
    shift.images[2] = 3;
    shift.images[3] = 1;
  } else {
    // (0 1 2 3 4)
    for (int i = 0; i < 5; ++i) shift.images[i] = std::uint16_t((i + 1) % 5);
  }
  return build_from_generators(n, {three, shift}, name, cap);
}

/// Quaternion group on its 8 elements {1,-1,i,-i,j,-j,k,-k} by right
/// multiplication with i and j.
inline FiniteGroup make_quaternion8(int cap = kDefaultGroupCap) {
  Perm i, j;
  i.images = {2, 3, 1, 0, 7, 6, 4, 5};
  j.images = {4, 5, 6, 7, 1, 0, 3, 2};
  return build_from_generators(8, {i, j}, "q8", cap);
}

/// (C_p)^k on p*k points, one p-cycle per coordinate.
inline FiniteGroup make_elementary_abelian(int p, int k, int cap = kDefaultGroupCap) {
  if (!is_prime(p)) throw ValidationError("elab:p,k requires p prime");
  if (k < 1) throw ValidationError("elab:p,k requires k >= 1");
  long n = 1;
  for (int t = 0; t < k; ++t) {
    n *= p;
    if (n > cap)
      throw CapExceededError("elab:" + std::to_string(p) + "," + std::to_string(k) +
                                 " exceeds cap",
                             std::size_t(n));
  }
  std::string name = "elab:" + std::to_string(p) + "," + std::to_string(k);
  std::vector<Perm> gens;
  for (int c = 0; c < k; ++c) {
    Perm g = Perm::identity(p * k);
    for (int i = 0; i < p; ++i)
      g.images[c * p + i] = std::uint16_t(c * p + (i + 1) % p);
    gens.push_back(std::move(g));
  }
  return build_from_generators(p * k, gens, name, cap);
}

namespace detail {

struct FamilyParser {
  const std::string& s;
  std::size_t pos = 0;
  int cap;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }

  int number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start)
      throw ParseError("family spec \"" + s + "\": expected a number at position " +
                       std::to_string(start));
    return std::stoi(s.substr(start, pos - start));
  }

  FiniteGroup parse() {
    std::string w = word();
    if (w == "prod") {
      if (!eat('(')) throw ParseError("family spec \"" + s + "\": expected '('");
      FiniteGroup a = parse();
      if (!eat(',')) throw ParseError("family spec \"" + s + "\": expected ','");
      FiniteGroup b = parse();
      if (!eat(')')) throw ParseError("family spec \"" + s + "\": expected ')'");
      return direct_product(a, b, cap);
    }
    if (w == "semidirect") {
      if (!eat('(')) throw ParseError("family spec \"" + s + "\": expected '('");
      FiniteGroup n = parse();
      if (!eat(',')) throw ParseError("family spec \"" + s + "\": expected ','");
      FiniteGroup h = parse();
      if (!eat(',')) throw ParseError("family spec \"" + s + "\": expected ','");
      std::string act = word();
      int power = -1;
      if (act == "pow") {
        if (!eat(':'))
          throw ParseError("family spec \"" + s + "\": pow action needs ':k'");
        power = number();
      } else if (act != "inv" && act != "trivial") {
        throw ParseError("family spec \"" + s + "\": unknown action \"" + act +
                         "\" (expected inv, trivial, or pow:k)");
      }
      if (!eat(')')) throw ParseError("family spec \"" + s + "\": expected ')'");
      std::vector<AutomorphismSpec> action;
      for (std::size_t k = 0; k < h.generators.size(); ++k) {
        AutomorphismSpec images;
        for (int gen : n.generators) {
          if (act == "inv")
            images.push_back(n.inv(gen));
          else if (act == "trivial")
            images.push_back(gen);
          else
            images.push_back(n.power(gen, power));
        }
        action.push_back(std::move(images));
      }
      return semidirect_product(n, h, action, cap);
    }
    if (w == "cyclic") {
      if (!eat(':')) throw ParseError("family spec \"" + s + "\": expected ':'");
      return make_cyclic(number(), cap);
    }
    if (w == "dihedral") {
      if (!eat(':')) throw ParseError("family spec \"" + s + "\": expected ':'");
      return make_dihedral(number(), cap);
    }
    if (w == "sym") {
      if (!eat(':')) throw ParseError("family spec \"" + s + "\": expected ':'");
      return make_symmetric(number(), cap);
    }
    if (w == "alt") {
      if (!eat(':')) throw ParseError("family spec \"" + s + "\": expected ':'");
      return make_alternating(number(), cap);
    }
    if (w == "elab") {
      if (!eat(':')) throw ParseError("family spec \"" + s + "\": expected ':'");
      int p = number();
      if (!eat(',')) throw ParseError("family spec \"" + s + "\": expected ','");
      int k = number();
      return make_elementary_abelian(p, k, cap);
    }
    if (w == "q8") return make_quaternion8(cap);
    throw ParseError("unknown family \"" + w + "\" in spec \"" + s + "\"");
  }
};

}  // namespace detail

/// Family mini-language: cyclic:6, dihedral:8, sym:4, alt:5, q8, elab:2,3,
/// prod(a,b), semidirect(n,h,inv|trivial|pow:k). The constructed group is
/// renamed to the spec string so corpus entries are reproducible.
inline FiniteGroup build_family(const std::string& spec, int cap = kDefaultGroupCap) {
  detail::FamilyParser parser{spec, 0, cap};
  FiniteGroup g = parser.parse();
  parser.skip_ws();
  if (parser.pos != spec.size())
    throw ParseError("family spec \"" + spec + "\": trailing input at position " +
                     std::to_string(parser.pos));
  g.name = spec;
  return g;
}

}  // namespace tsigma
