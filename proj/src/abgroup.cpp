#include "smooth/abgroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace smooth {

namespace {

Int checked_mul(Int a, Int b) {
  Int out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("group order overflows 64 bits");
  return out;
}

Int ipow(Int base, int e) {
  Int out = 1;
  for (int i = 0; i < e; ++i) out = checked_mul(out, base);
  return out;
}

// Per-prime exponent lists, each sorted descending.
using PrimeProfile = std::map<Int, std::vector<int>>;

PrimeProfile profile_of(const FinAbGroup& g) {
  PrimeProfile prof;
  for (Int d : g.torsion())
    for (auto [p, e] : factorize(d)) prof[p].push_back(e);
  for (auto& [p, v] : prof) std::sort(v.rbegin(), v.rend());
  return prof;
}

void partitions_into(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_into(n - part, part, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_into(n, n, cur, out);
  return out;
}

// Brute-force model of a finite abelian p-group Z/p^e1 ⊕ ... ⊕ Z/p^en with
// elements indexed by mixed radix.
class PGroup {
 public:
  PGroup(Int p, std::vector<int> exps) : p_(p), exps_(std::move(exps)) {
    size_ = 1;
    for (int e : exps_) {
      Int m = ipow(p_, e);
      radix_.push_back(m);
      size_ = checked_mul(size_, m);
    }
  }

  Int size() const { return size_; }
  Int prime() const { return p_; }

  std::vector<Int> coords(Int idx) const {
    std::vector<Int> c(radix_.size());
    for (std::size_t i = 0; i < radix_.size(); ++i) {
      c[i] = idx % radix_[i];
      idx /= radix_[i];
    }
    return c;
  }

  Int index(const std::vector<Int>& c) const {
    Int idx = 0;
    for (std::size_t i = radix_.size(); i-- > 0;) idx = idx * radix_[i] + c[i];
    return idx;
  }

  Int add(Int a, Int b) const {
    Int out = 0, scale = 1;
    for (Int m : radix_) {
      out += ((a % m + b % m) % m) * scale;
      a /= m;
      b /= m;
      scale *= m;
    }
    return out;
  }

  Int scale(Int a, Int n) const {
    Int out = 0, sc = 1;
    for (Int m : radix_) {
      out += ((a % m) * (n % m) % m) * sc;
      a /= m;
      sc *= m;
    }
    return out;
  }

 private:
  Int p_;
  std::vector<int> exps_;
  std::vector<Int> radix_;
  Int size_ = 1;
};

// log_p of |H[p^i]| for i = 0..top, computed from an explicit element list.
std::vector<int> killed_profile(const PGroup& g, const std::vector<Int>& elems, int top) {
  std::vector<int> out(top + 1, 0);
  for (int i = 0; i <= top; ++i) {
    Int pi = ipow(g.prime(), i);
    Int cnt = 0;
    for (Int x : elems)
      if (g.scale(x, pi) == 0) ++cnt;
    int lg = 0;
    while (cnt > 1) {
      cnt /= g.prime();
      ++lg;
    }
    out[i] = lg;
  }
  return out;
}

std::vector<int> expected_profile(const std::vector<int>& exps, int top) {
  std::vector<int> out(top + 1, 0);
  for (int i = 0; i <= top; ++i)
    for (int e : exps) out[i] += std::min(e, i);
  return out;
}

// Partition (descending) from the sequence s_i = log_p |G[p^i]|.
std::vector<int> partition_from_profile(const std::vector<int>& s) {
  // parts >= i number s_i - s_{i-1}
  std::vector<int> parts;
  int top = static_cast<int>(s.size()) - 1;
  for (int i = top; i >= 1; --i) {
    int at_least_i = s[i] - s[i - 1];
    int at_least_next = i < top ? s[i + 1] - s[i] : 0;
    for (int c = 0; c < at_least_i - at_least_next; ++c) parts.push_back(i);
  }
  return parts;
}

// Types (descending exponent lists) of g/H as H ranges over subgroups of type sub.
std::set<std::vector<int>> pgroup_quotients(Int p, const std::vector<int>& g_exps,
                                            std::vector<int> sub_exps, bool stop_at_first = false,
                                            const std::vector<int>* wanted = nullptr) {
  std::sort(sub_exps.rbegin(), sub_exps.rend());
  std::set<std::vector<int>> result;
  int g_total = std::accumulate(g_exps.begin(), g_exps.end(), 0);
  int s_total = std::accumulate(sub_exps.begin(), sub_exps.end(), 0);
  if (s_total > g_total) return result;
  if (s_total == 0) {
    auto e = g_exps;
    std::sort(e.rbegin(), e.rend());
    result.insert(e);
    return result;
  }
  // Necessary condition: sub embeds, i.e. its parts fit under the parts of g.
  {
    auto ge = g_exps;
    std::sort(ge.rbegin(), ge.rend());
    if (sub_exps.size() > ge.size()) return result;
    for (std::size_t i = 0; i < sub_exps.size(); ++i)
      if (sub_exps[i] > ge[i]) return result;
  }

  PGroup g(p, g_exps);
  const Int n = g.size();
  int top = g_exps.empty() ? 0 : *std::max_element(g_exps.begin(), g_exps.end());

  std::set<std::vector<Int>> level{{0}};
  std::vector<int> prefix;
  for (int a : sub_exps) {
    prefix.push_back(a);
    auto want = expected_profile(prefix, top);
    Int pa = ipow(p, a);
    std::vector<Int> cands;
    for (Int x = 0; x < n; ++x)
      if (g.scale(x, pa) == 0 && g.scale(x, pa / p) != 0) cands.push_back(x);

    std::set<std::vector<Int>> next;
    std::vector<char> member(static_cast<std::size_t>(n), 0);
    for (const auto& h : level) {
      for (Int x : h) member[x] = 1;
      for (Int x : cands) {
        // order of x modulo h must be exactly p^a
        if (member[g.scale(x, pa / p)]) continue;
        std::vector<Int> elems;
        elems.reserve(h.size() * pa);
        Int tx = 0;
        for (Int t = 0; t < pa; ++t) {
          for (Int y : h) elems.push_back(g.add(y, tx));
          tx = g.add(tx, x);
        }
        if (killed_profile(g, elems, top) != want) continue;
        std::sort(elems.begin(), elems.end());
        next.insert(std::move(elems));
      }
      for (Int x : h) member[x] = 0;
    }
    level = std::move(next);
    if (level.empty()) return result;
  }

  std::vector<char> member(static_cast<std::size_t>(n), 0);
  for (const auto& h : level) {
    for (Int x : h) member[x] = 1;
    std::vector<int> s(top + 1, 0);
    for (int i = 0; i <= top; ++i) {
      Int pi = ipow(p, i);
      Int cnt = 0;
      for (Int b = 0; b < n; ++b)
        if (member[g.scale(b, pi)]) ++cnt;
      cnt /= static_cast<Int>(h.size());
      int lg = 0;
      while (cnt > 1) {
        cnt /= p;
        ++lg;
      }
      s[i] = lg;
    }
    for (Int x : h) member[x] = 0;
    auto part = partition_from_profile(s);
    result.insert(part);
    if (stop_at_first && wanted && part == *wanted) return result;
  }
  return result;
}

void require_finite(const FinAbGroup& g, const char* what) {
  if (!g.is_finite()) throw std::invalid_argument(std::string(what) + " must be a finite group");
}

// Combine per-prime option lists into direct sums.
std::vector<FinAbGroup> cartesian(const std::vector<std::vector<FinAbGroup>>& per_prime) {
  std::vector<FinAbGroup> acc{FinAbGroup{}};
  for (const auto& opts : per_prime) {
    std::vector<FinAbGroup> next;
    for (const auto& a : acc)
      for (const auto& b : opts) next.push_back(direct_sum(a, b));
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end());
  acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
  return acc;
}

FinAbGroup pgroup_from(Int p, const std::vector<int>& exps) {
  std::vector<Int> orders;
  for (int e : exps) orders.push_back(ipow(p, e));
  return FinAbGroup::canonicalize(orders);
}

}  // namespace

std::vector<std::pair<Int, int>> factorize(Int n) {
  if (n < 1) throw std::invalid_argument("factorize expects a positive integer");
  std::vector<std::pair<Int, int>> out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::optional<PrimePower> as_prime_power(Int n) {
  if (n < 2) return std::nullopt;
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return PrimePower{f[0].first, f[0].second};
}

FinAbGroup FinAbGroup::canonicalize(std::span<const Int> cyclic_orders, int free_rank) {
  if (free_rank < 0) throw std::invalid_argument("free rank must be non-negative");
  PrimeProfile prof;
  for (Int d : cyclic_orders) {
    if (d == 0) throw std::invalid_argument("cyclic order 0 is not a finite cyclic group");
    if (d < 0) throw std::invalid_argument("cyclic order must be positive");
    for (auto [p, e] : factorize(d)) prof[p].push_back(e);
  }
  std::size_t len = 0;
  for (auto& [p, v] : prof) {
    std::sort(v.rbegin(), v.rend());
    len = std::max(len, v.size());
  }
  FinAbGroup g;
  g.free_rank_ = free_rank;
  g.torsion_.assign(len, 1);
  for (const auto& [p, v] : prof)
    for (std::size_t i = 0; i < v.size(); ++i)
      g.torsion_[len - 1 - i] = checked_mul(g.torsion_[len - 1 - i], ipow(p, v[i]));
  return g;
}

FinAbGroup FinAbGroup::canonicalize(std::initializer_list<Int> cyclic_orders, int free_rank) {
  return canonicalize(std::span<const Int>(cyclic_orders.begin(), cyclic_orders.size()), free_rank);
}

FinAbGroup FinAbGroup::cyclic(Int n) { return canonicalize({n}); }

FinAbGroup FinAbGroup::free(int rank) { return canonicalize({}, rank); }

FinAbGroup FinAbGroup::elementary(Int n, int count) {
  std::vector<Int> orders(static_cast<std::size_t>(std::max(count, 0)), n);
  return canonicalize(orders);
}

std::optional<Int> FinAbGroup::order() const {
  if (free_rank_ > 0) return std::nullopt;
  Int out = 1;
  for (Int d : torsion_) out = checked_mul(out, d);
  return out;
}

Int FinAbGroup::exponent() const {
  require_finite(*this, "exponent argument");
  return torsion_.empty() ? 1 : torsion_.back();
}

Int FinAbGroup::count_killed_by(Int n) const {
  require_finite(*this, "count_killed_by argument");
  Int out = 1;
  for (Int d : torsion_) out = checked_mul(out, std::gcd(d, n));
  return out;
}

std::string FinAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::vector<std::string> parts(static_cast<std::size_t>(free_rank_), "Z");
  for (Int d : torsion_) parts.push_back("Z/" + std::to_string(d));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " ⊕ " : "") + parts[i];
  return out;
}

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
  std::vector<Int> orders(a.torsion());
  orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
  return FinAbGroup::canonicalize(orders, a.free_rank() + b.free_rank());
}

FinAbGroup direct_sum(std::initializer_list<FinAbGroup> parts) {
  FinAbGroup out;
  for (const auto& g : parts) out = direct_sum(out, g);
  return out;
}

FinAbGroup power(const FinAbGroup& g, int n) {
  FinAbGroup out;
  for (int i = 0; i < n; ++i) out = direct_sum(out, g);
  return out;
}

FinAbGroup mult_kernel(const FinAbGroup& g, Int n) {
  if (n == 0) throw std::invalid_argument("multiplication by 0 is not supported");
  n = n < 0 ? -n : n;
  std::vector<Int> orders;
  for (Int d : g.torsion()) orders.push_back(std::gcd(d, n));
  return FinAbGroup::canonicalize(orders);
}

FinAbGroup mult_cokernel(const FinAbGroup& g, Int n) {
  if (n == 0) throw std::invalid_argument("multiplication by 0 is not supported");
  n = n < 0 ? -n : n;
  std::vector<Int> orders;
  for (Int d : g.torsion()) orders.push_back(std::gcd(d, n));
  for (int i = 0; i < g.free_rank(); ++i) orders.push_back(n);
  return FinAbGroup::canonicalize(orders);
}

PrimaryDecomposition PrimaryDecomposition::of(const FinAbGroup& g) {
  PrimaryDecomposition out;
  out.free_rank = g.free_rank();
  for (Int d : g.torsion())
    for (auto [p, e] : factorize(d)) out.summands.push_back({p, e});
  std::sort(out.summands.begin(), out.summands.end());
  return out;
}

FinAbGroup PrimaryDecomposition::to_group() const {
  std::vector<Int> orders;
  for (const auto& s : summands) orders.push_back(ipow(s.prime, s.exponent));
  return FinAbGroup::canonicalize(orders, free_rank);
}

std::string PrimaryDecomposition::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.emplace_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (std::size_t i = 0; i < summands.size();) {
    std::size_t j = i;
    while (j < summands.size() && summands[j] == summands[i]) ++j;
    std::string base = "Z/" + std::to_string(ipow(summands[i].prime, summands[i].exponent));
    parts.push_back(j - i == 1 ? base : "(" + base + ")^" + std::to_string(j - i));
    i = j;
  }
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " ⊕ " : "") + parts[i];
  return out;
}

std::vector<FinAbGroup> abelian_groups_of_order(Int n) {
  std::vector<std::vector<FinAbGroup>> per_prime;
  for (auto [p, e] : factorize(n)) {
    std::vector<FinAbGroup> opts;
    for (const auto& part : partitions(e)) opts.push_back(pgroup_from(p, part));
    per_prime.push_back(std::move(opts));
  }
  return cartesian(per_prime);
}

std::vector<FinAbGroup> enumerate_extensions(const FinAbGroup& sub, const FinAbGroup& quot, Int budget) {
  require_finite(sub, "extension kernel");
  require_finite(quot, "extension quotient");
  Int total = checked_mul(*sub.order(), *quot.order());
  if (total > budget)
    throw BudgetError("extension search of order " + std::to_string(total) + " exceeds budget " +
                      std::to_string(budget));
  // Results are pure functions of (sub, quot); the cache only saves repeated searches.
  static std::mutex cache_mutex;
  static std::map<std::pair<FinAbGroup, FinAbGroup>, std::vector<FinAbGroup>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (auto it = cache.find({sub, quot}); it != cache.end()) return it->second;
  }
  auto sp = profile_of(sub);
  auto qp = profile_of(quot);
  std::vector<std::vector<FinAbGroup>> per_prime;
  for (auto [p, e] : total > 1 ? factorize(total) : std::vector<std::pair<Int, int>>{}) {
    const auto& a = sp[p];
    auto c = qp[p];
    std::vector<FinAbGroup> opts;
    for (const auto& lambda : partitions(e)) {
      // The quotient must also fit inside B.
      if (c.size() > lambda.size()) continue;
      bool fits = true;
      for (std::size_t i = 0; i < c.size(); ++i) fits = fits && c[i] <= lambda[i];
      if (!fits) continue;
      auto found = pgroup_quotients(p, lambda, a, true, &c);
      if (found.count(c)) opts.push_back(pgroup_from(p, lambda));
    }
    per_prime.push_back(std::move(opts));
  }
  auto result = cartesian(per_prime);
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(std::make_pair(sub, quot), result);
  return result;
}

std::vector<FinAbGroup> possible_quotients(const FinAbGroup& g, const FinAbGroup& image, Int budget) {
  require_finite(g, "ambient group");
  require_finite(image, "subgroup");
  if (*g.order() > budget)
    throw BudgetError("subgroup search of order " + std::to_string(*g.order()) + " exceeds budget " +
                      std::to_string(budget));
  if (*g.order() % *image.order() != 0) return {};
  auto gp = profile_of(g);
  auto ip = profile_of(image);
  for (const auto& [p, v] : ip)
    if (!gp.count(p)) return {};
  std::vector<std::vector<FinAbGroup>> per_prime;
  for (const auto& [p, exps] : gp) {
    std::vector<FinAbGroup> opts;
    for (const auto& q : pgroup_quotients(p, exps, ip[p])) opts.push_back(pgroup_from(p, q));
    if (opts.empty()) return {};
    per_prime.push_back(std::move(opts));
  }
  return cartesian(per_prime);
}

std::vector<FinAbGroup> possible_kernels(const FinAbGroup& g, const FinAbGroup& quotient, Int budget) {
  // Character duality swaps subgroups of type Q with quotients of type Q.
  return possible_quotients(g, quotient, budget);
}

}  // namespace smooth
