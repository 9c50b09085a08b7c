#pragma once
// Brute-force reference computations on explicit element lists. Deliberately
// shares no code with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Int = std::int64_t;
using Mods = std::vector<Int>;  // Z/m1 ⊕ Z/m2 ⊕ ...
using OrderStats = std::map<Int, Int>;  // element order -> count

inline Int size_of(const Mods& m) {
  Int n = 1;
  for (Int x : m) n *= x;
  return n;
}

inline std::vector<Int> decode(const Mods& m, Int idx) {
  std::vector<Int> c(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    c[i] = idx % m[i];
    idx /= m[i];
  }
  return c;
}

inline Int encode(const Mods& m, const std::vector<Int>& c) {
  Int idx = 0;
  for (std::size_t i = m.size(); i-- > 0;) idx = idx * m[i] + ((c[i] % m[i]) + m[i]) % m[i];
  return idx;
}

inline Int add(const Mods& m, Int a, Int b) {
  auto x = decode(m, a), y = decode(m, b);
  for (std::size_t i = 0; i < m.size(); ++i) x[i] += y[i];
  return encode(m, x);
}

inline Int element_order(const Mods& m, Int a) {
  Int o = 1;
  auto c = decode(m, a);
  for (std::size_t i = 0; i < m.size(); ++i) o = std::lcm(o, m[i] / std::gcd(m[i], c[i]));
  return o;
}

inline OrderStats order_stats(const Mods& m) {
  OrderStats s;
  for (Int a = 0; a < size_of(m); ++a) ++s[element_order(m, a)];
  return s;
}

/// Two finite abelian groups are isomorphic iff they have equal order statistics.
inline bool isomorphic(const Mods& a, const Mods& b) { return order_stats(a) == order_stats(b); }

/// Subgroup generated by `gens`, as a sorted element list.
inline std::vector<Int> span(const Mods& m, const std::vector<Int>& gens) {
  std::set<Int> seen{0};
  std::vector<Int> frontier{0};
  while (!frontier.empty()) {
    std::vector<Int> next;
    for (Int x : frontier)
      for (Int g : gens) {
        Int y = add(m, x, g);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

inline OrderStats subgroup_stats(const Mods& m, const std::vector<Int>& elems) {
  OrderStats s;
  for (Int a : elems) ++s[element_order(m, a)];
  return s;
}

inline OrderStats quotient_stats(const Mods& m, const std::vector<Int>& sub) {
  std::set<Int> h(sub.begin(), sub.end());
  OrderStats s;
  for (Int a = 0; a < size_of(m); ++a) {
    Int o = 1;
    Int x = a;
    while (!h.count(x)) {
      x = add(m, x, a);
      ++o;
    }
    ++s[o];
  }
  for (auto& [o, c] : s) c /= static_cast<Int>(sub.size());
  return s;
}

/// Every subgroup of Z/m1 ⊕ ... generated by at most `max_gens` elements.
inline std::set<std::vector<Int>> subgroups(const Mods& m, int max_gens) {
  std::set<std::vector<Int>> out{{0}};
  std::set<std::vector<Int>> layer{{0}};
  for (int g = 0; g < max_gens; ++g) {
    std::set<std::vector<Int>> next;
    for (const auto& h : layer)
      for (Int x = 0; x < size_of(m); ++x) {
        if (std::binary_search(h.begin(), h.end(), x)) continue;
        auto gens = h;
        gens.push_back(x);
        auto s = span(m, gens);
        if (out.insert(s).second) next.insert(s);
      }
    layer = std::move(next);
  }
  return out;
}

/// All invariant-factor chains d1 | d2 | ... with product n (each di >= 2).
inline void chains_into(Int remaining, Int min_factor, Mods& cur, std::vector<Mods>& out) {
  if (remaining == 1) {
    out.push_back(cur);
    return;
  }
  for (Int d = min_factor; d <= remaining; ++d) {
    if (remaining % d || (!cur.empty() && d % cur.back())) continue;
    // the rest must be divisible by d, since later factors are multiples of d
    if ((remaining / d) % d && remaining / d != 1) continue;
    cur.push_back(d);
    chains_into(remaining / d, d, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Mods> groups_of_order(Int n) {
  std::vector<Mods> out;
  Mods cur;
  chains_into(n, 2, cur, out);
  return out;
}

inline int rank_of(const Mods& m) { return static_cast<int>(std::count_if(m.begin(), m.end(), [](Int x) { return x > 1; })); }

/// Groups B of order |A||C| containing H ≅ A with B/H ≅ C; returned as invariant chains.
inline std::vector<Mods> extensions(const Mods& a, const Mods& c) {
  const auto a_stats = order_stats(a);
  const auto c_stats = order_stats(c);
  std::vector<Mods> out;
  for (const auto& b : groups_of_order(size_of(a) * size_of(c))) {
    bool found = false;
    std::set<std::vector<Int>> pool;
    if (rank_of(a) == 1) {
      // cyclic A: only elements of order |A| can generate it
      for (Int x = 0; x < size_of(b); ++x)
        if (element_order(b, x) == size_of(a)) pool.insert(span(b, {x}));
    } else {
      pool = subgroups(b, rank_of(a));
    }
    for (const auto& h : pool) {
      if (static_cast<Int>(h.size()) != size_of(a) || subgroup_stats(b, h) != a_stats) continue;
      if (quotient_stats(b, h) == c_stats) {
        found = true;
        break;
      }
    }
    if (found) out.push_back(b);
  }
  return out;
}

/// Order statistics of G/H over subgroups H ≅ a.
inline std::set<OrderStats> quotient_types(const Mods& g, const Mods& a) {
  const auto a_stats = order_stats(a);
  std::set<OrderStats> out;
  for (const auto& h : subgroups(g, rank_of(a)))
    if (static_cast<Int>(h.size()) == size_of(a) && subgroup_stats(g, h) == a_stats) out.insert(quotient_stats(g, h));
  return out;
}

/// Order statistics of K over subgroups K with G/K ≅ q.
inline std::set<OrderStats> kernel_types(const Mods& g, const Mods& q) {
  const auto q_stats = order_stats(q);
  std::set<OrderStats> out;
  for (const auto& k : subgroups(g, rank_of(g)))
    if (static_cast<Int>(k.size()) * size_of(q) == size_of(g) && quotient_stats(g, k) == q_stats)
      out.insert(subgroup_stats(g, k));
  return out;
}

}  // namespace oracle
