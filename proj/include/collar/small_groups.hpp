#pragma once

#include <functional>
#include <string>
#include <vector>

#include "collar/perm_group.hpp"

namespace collar {

struct NamedGroup {
  std::string name;
  PermGroup group;
};

namespace detail {

/// Left-regular representation of a finite group given by a multiplication
/// rule on element indices. `gens` are element indices that must generate.
inline PermGroup regular_rep(int n, const std::function<int(int, int)>& mul,
                             const std::vector<int>& gens) {
  std::vector<Permutation> pgens;
  for (int g : gens) {
    std::vector<int> im(n);
    for (int x = 0; x < n; ++x) im[x] = mul(g, x);
    pgens.push_back(Permutation(std::move(im)));
  }
  PermGroup out = PermGroup::generate(n, std::move(pgens));
  if (out.order() != static_cast<std::size_t>(n))
    throw ValidationError("regular_rep: generators do not generate the table group");
  return out;
}

}  // namespace detail

/// Dicyclic group of order 4n (n=2 gives Q8, n=4 gives Q16).
inline PermGroup dicyclic(int n) {
  if (n < 2) throw ValidationError("dicyclic requires n >= 2");
  const int m = 2 * n;           // order of the cyclic part <a>
  const int sz = 4 * n;          // elements a^i b^e, e in {0,1}
  auto idx = [m](int i, int e) { return e * m + ((i % m) + m) % m; };
  auto mul = [m, n, idx](int x, int y) {
    int i = x % m, e = x / m, j = y % m, f = y / m;
    if (e == 0) return idx(i + j, f);
    if (f == 0) return idx(i - j, 1);
    return idx(i - j + n, 0);    // (a^i b)(a^j b) = a^{i-j+n}
  };
  return detail::regular_rep(sz, mul, {idx(1, 0), idx(0, 1)});
}

/// C_m ⋊ C_k with the action a ↦ a^j; requires j^k ≡ 1 (mod m), gcd(j,m)=1.
/// Compact model of degree m + k.
inline PermGroup semidirect_cyclic(int m, int k, long j) {
  long jk = 1;
  for (int t = 0; t < k; ++t) jk = (jk * j) % m;
  if (jk % m != 1 % m) throw ValidationError("semidirect_cyclic: j^k != 1 mod m");
  const int deg = m + k;
  std::vector<int> a(deg), b(deg);
  for (int i = 0; i < deg; ++i) a[i] = b[i] = i;
  for (int i = 0; i < m; ++i) a[i] = (i + 1) % m;
  for (int i = 0; i < m; ++i) b[i] = static_cast<int>((static_cast<long>(i) * j) % m);
  for (int i = 0; i < k; ++i) b[m + i] = m + (i + 1) % k;
  return PermGroup::generate(deg, {Permutation(std::move(a)), Permutation(std::move(b))});
}

/// (C2 x C2) ⋊ C4, the order-4 generator swapping the two C2 coordinates.
inline PermGroup klein_by_c4_swap() {
  // elements (s,t,u): s,t in Z2, u in Z4
  auto idx = [](int s, int t, int u) { return ((u & 3) << 2) | ((t & 1) << 1) | (s & 1); };
  auto mul = [idx](int x, int y) {
    int s1 = x & 1, t1 = (x >> 1) & 1, u1 = x >> 2;
    int s2 = y & 1, t2 = (y >> 1) & 1, u2 = y >> 2;
    if (u1 & 1) std::swap(s2, t2);
    return idx(s1 ^ s2, t1 ^ t2, u1 + u2);
  };
  return detail::regular_rep(16, mul, {idx(1, 0, 0), idx(0, 0, 1)});
}

/// Central product D4 ∘ C4 (identifying the central involutions).
inline PermGroup central_product_d4_c4() {
  PermGroup d4 = PermGroup::dihedral(4);
  const auto& el = d4.elements();
  auto find = [&](const Permutation& p) {
    for (std::size_t i = 0; i < el.size(); ++i)
      if (el[i] == p) return static_cast<int>(i);
    throw ValidationError("element not found");
  };
  const Permutation r = Permutation::from_cycles(4, {{0, 1, 2, 3}});
  const int r2 = find(r * r);
  auto d4mul = [&](int x, int y) { return find(el[x] * el[y]); };
  // elements (d, c) with c in {0,1}; (d,2) is rewritten as (d*r^2, 0)
  auto idx = [](int d, int c) { return c * 8 + d; };
  auto mul = [&, r2](int x, int y) {
    int d1 = x % 8, c1 = x / 8, d2 = y % 8, c2 = y / 8;
    int d = d4mul(d1, d2), c = c1 + c2;
    if (c >= 2) {
      c -= 2;
      d = d4mul(d, r2);
    }
    return idx(d, c);
  };
  return detail::regular_rep(16, mul, {idx(find(r), 0), idx(find(Permutation::from_cycles(4, {{1, 3}})), 0), idx(0, 1)});
}

/// Generalized dihedral group over C3 x C3 (inverting automorphism).
inline PermGroup elementary9_by_inversion() {
  return PermGroup::generate(
      6, {Permutation::from_cycles(6, {{0, 1, 2}}), Permutation::from_cycles(6, {{3, 4, 5}}),
          Permutation::from_cycles(6, {{1, 2}, {4, 5}})});
}

/// C3 ⋊ D4 where the rotation inverts and the reflection fixes C3.
inline PermGroup c3_by_d4() {
  return PermGroup::generate(
      7, {Permutation::from_cycles(7, {{0, 1, 2}}),
          Permutation::from_cycles(7, {{1, 2}, {3, 4, 5, 6}}),
          Permutation::from_cycles(7, {{4, 6}})});
}

/// SL(2,3) acting on the 8 nonzero vectors of F3^2.
inline PermGroup sl_2_3() {
  auto idx = [](int x, int y) { return 3 * x + y - 1; };  // (0,0) excluded
  auto act = [idx](int a, int b, int c, int d) {
    std::vector<int> im(8);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) {
        if (x == 0 && y == 0) continue;
        im[idx(x, y)] = idx((a * x + b * y) % 3, (c * x + d * y) % 3);
      }
    return Permutation(std::move(im));
  };
  return PermGroup::generate(8, {act(1, 1, 0, 1), act(1, 0, 1, 1)});
}

/// Every group of order <= max_order (default 24), one permutation model per
/// isomorphism class. Assembled from generic constructions plus the handful
/// of groups they miss, then deduplicated with the brute-force isomorphism
/// test; a unit test pins the per-order class counts to the classification.
inline std::vector<NamedGroup> small_group_catalogue(int max_order = 24) {
  std::vector<NamedGroup> pool;
  auto add = [&](const std::string& name, const PermGroup& g) {
    if (g.order() > static_cast<std::size_t>(max_order)) return;
    pool.push_back({name, g});
  };

  for (int n = 1; n <= max_order; ++n) add("C" + std::to_string(n), PermGroup::cyclic(n));
  for (int n = 3; 2 * n <= max_order; ++n)
    add("D" + std::to_string(2 * n), PermGroup::dihedral(n));
  for (int n = 2; 4 * n <= max_order; ++n)
    add("Dic" + std::to_string(n), dicyclic(n));
  for (int m = 3; m <= max_order; ++m)
    for (int k = 2; m * k <= max_order; ++k)
      for (long j = 2; j < m; ++j) {
        if (std::gcd(static_cast<long>(m), j) != 1) continue;
        long jk = 1;
        for (int t = 0; t < k; ++t) jk = (jk * j) % m;
        if (jk % m == 1 % m)
          add("C" + std::to_string(m) + ":C" + std::to_string(k) + "(" + std::to_string(j) + ")",
              semidirect_cyclic(m, k, j));
      }
  add("A4", PermGroup::alternating(4));
  add("S4", PermGroup::symmetric(4));
  add("SL(2,3)", sl_2_3());
  add("(C2xC2):C4", klein_by_c4_swap());
  add("D4oC4", central_product_d4_c4());
  add("(C3xC3):C2", elementary9_by_inversion());
  add("C3:D4", c3_by_d4());

  // close under direct products up to max_order
  for (std::size_t grew = 1; grew;) {
    grew = 0;
    const std::size_t sz = pool.size();
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t j = i; j < sz; ++j) {
        const std::size_t prod = pool[i].group.order() * pool[j].group.order();
        if (pool[i].group.order() < 2 || pool[j].group.order() < 2) continue;
        if (prod > static_cast<std::size_t>(max_order)) continue;
        PermGroup p = PermGroup::direct_product(pool[i].group, pool[j].group);
        bool known = false;
        for (const auto& e : pool)
          if (e.group.order() == p.order() && are_isomorphic(e.group, p)) {
            known = true;
            break;
          }
        if (!known) {
          pool.push_back({pool[i].name + "x" + pool[j].name, p});
          ++grew;
        }
      }
  }

  // dedupe up to isomorphism, keep first (most descriptive) name
  std::vector<NamedGroup> out;
  for (const auto& cand : pool) {
    bool dup = false;
    for (const auto& kept : out)
      if (kept.group.order() == cand.group.order() && are_isomorphic(kept.group, cand.group)) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(cand);
  }
  std::sort(out.begin(), out.end(), [](const NamedGroup& a, const NamedGroup& b) {
    return a.group.order() < b.group.order();
  });
  return out;
}

/// The acceptance fixture: every group of order <= 24 plus A5, S5, A5xA5.
inline std::vector<NamedGroup> fixture_set() {
  std::vector<NamedGroup> out = small_group_catalogue(24);
  PermGroup a5 = PermGroup::alternating(5);
  out.push_back({"A5", a5});
  out.push_back({"S5", PermGroup::symmetric(5)});
  out.push_back({"A5xA5", PermGroup::direct_product(a5, a5)});
  return out;
}

}  // namespace collar
