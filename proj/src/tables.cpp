#include "smooth/tables.hpp"

#include <numeric>

namespace smooth {

namespace {

FinAbGroup Z() { return FinAbGroup::free(1); }
FinAbGroup C(Int n) { return FinAbGroup::cyclic(n); }
FinAbGroup E2(int count) { return FinAbGroup::elementary(2, count); }
FinAbGroup sum(std::initializer_list<FinAbGroup> parts) { return direct_sum(parts); }

std::map<int, TableEntry> with_citation(const std::vector<FinAbGroup>& groups, int first,
                                        const std::string& citation) {
  std::map<int, TableEntry> out;
  for (std::size_t i = 0; i < groups.size(); ++i)
    out.emplace(first + static_cast<int>(i), TableEntry{groups[i], citation});
  return out;
}

std::string range_message(const std::string& table, int degree, int lo, int hi) {
  return table + ": degree " + std::to_string(degree) + " outside " + std::to_string(lo) + ".." +
         std::to_string(hi);
}

MapImageEntry row(int degree, FinAbGroup image, std::string citation) {
  MapImageEntry e;
  e.degree = degree;
  e.image = std::move(image);
  e.citation = std::move(citation);
  return e;
}

}  // namespace

GradedTable::GradedTable(std::string name, int lo, int hi, std::map<int, TableEntry> entries)
    : name_(std::move(name)), lo_(lo), hi_(hi), entries_(std::move(entries)) {
  for (int d = lo_; d <= hi_; ++d)
    if (!entries_.count(d)) throw std::logic_error(name_ + ": missing degree " + std::to_string(d));
}

const TableEntry& GradedTable::at(int degree) const {
  if (!contains(degree)) throw RangeError(range_message(name_, degree, lo_, hi_));
  return entries_.at(degree);
}

bool MapImageEntry::matches(int k, int r) const {
  if (k != degree) return false;
  if (r_lo == 0) return true;
  return r >= r_lo && (r_hi == 0 || r <= r_hi);
}

std::string MapImageEntry::key_label() const {
  std::string out = "k=" + std::to_string(degree);
  if (r_lo == 0) return out;
  if (r_hi == r_lo) return out + ",r=" + std::to_string(r_lo);
  if (r_hi == 0) return out + ",r>=" + std::to_string(r_lo);
  return out + ",r=" + std::to_string(r_lo) + ".." + std::to_string(r_hi);
}

MapImageTable::MapImageTable(std::string name, std::string description, int lo, int hi,
                             std::vector<MapImageEntry> rows)
    : name_(std::move(name)), description_(std::move(description)), lo_(lo), hi_(hi), rows_(std::move(rows)) {}

const MapImageEntry& MapImageTable::at(int degree, int r) const {
  if (degree < lo_ || degree > hi_) throw RangeError(range_message(name_, degree, lo_, hi_));
  if (r < 1) throw std::invalid_argument(name_ + ": exponent r must be positive");
  for (const auto& e : rows_)
    if (e.matches(degree, r)) return e;
  throw std::logic_error(name_ + ": no row for " + std::to_string(degree));
}

const GradedTable& stable_stems_table() {
  static const GradedTable t("stable_stems", 0, 5, [] {
    const std::string cite = "stable stems in low degrees";
    return with_citation({Z(), C(2), C(2), C(24), FinAbGroup{}, FinAbGroup{}}, 0, cite);
  }());
  return t;
}

const GradedTable& top_o_table() {
  static const GradedTable t("top_o", 1, 20, [] {
    const std::string cite = "homotopy groups of Top/O table";
    return with_citation({FinAbGroup{}, FinAbGroup{}, C(2), FinAbGroup{}, FinAbGroup{}, FinAbGroup{},
                          C(28), C(2), E2(3), C(6), C(992), FinAbGroup{}, C(3), C(2),
                          sum({C(2), C(8128)}), C(2), E2(4), sum({C(2), C(8)}),
                          sum({C(130816), C(2)}), C(24)},
                         1, cite);
  }());
  return t;
}

const GradedTable& g_o_table() {
  static const GradedTable t("g_o", 1, 20, [] {
    const std::string cite = "homotopy groups of G/O table";
    return with_citation({FinAbGroup{}, C(2), FinAbGroup{}, Z(), FinAbGroup{}, C(2), FinAbGroup{},
                          sum({Z(), C(2)}), E2(2), C(6), FinAbGroup{}, Z(), C(3), E2(2), C(2),
                          sum({Z(), C(2)}), E2(3), sum({C(2), C(8)}), C(2), sum({Z(), C(24)})},
                         1, cite);
  }());
  return t;
}

GradedTable g_top_table(int hi) {
  std::map<int, TableEntry> entries;
  for (int k = 1; k <= hi; ++k) entries.emplace(k, TableEntry{pi_g_top(k), "G/Top mod 4 formula"});
  return GradedTable("g_top", 1, hi, std::move(entries));
}

GradedTable moore_table(Int b) {
  std::map<int, TableEntry> entries;
  for (int n = 0; n <= 5; ++n)
    entries.emplace(n, TableEntry{pi_moore(b, n), "homotopy of the Moore spectrum M(Z/b)"});
  return GradedTable("moore_b" + std::to_string(b), 0, 5, std::move(entries));
}

const MapImageTable& eta_star_table() {
  static const MapImageTable t = [] {
    const std::string cite = "eta_* image lemma";
    // image, kernel, cokernel for eta_*: pi_k -> pi_{k+1}
    struct Raw {
      FinAbGroup image;
      std::optional<FinAbGroup> kernel, cokernel;
    };
    const FinAbGroup O;
    std::vector<Raw> raw = {
        {O, O, O},                                        // 1
        {O, O, C(2)},                                     // 2
        {O, C(2), O},                                     // 3
        {O, O, O},                                        // 4
        {O, O, O},                                        // 5
        {O, O, C(28)},                                    // 6
        {O, C(28), C(2)},                                 // 7
        {C(2), O, E2(2)},                                 // 8
        {C(2), E2(2), C(3)},                              // 9
        {C(2), C(3), C(496)},                             // 10
        {O, C(992), O},                                   // 11
        {O, O, C(3)},                                     // 12
        {O, C(3), C(2)},                                  // 13
        {C(2), O, C(8128)},                               // 14
        {O, sum({C(2), C(8128)}), C(2)},                  // 15
        {C(2), O, E2(3)},                                 // 16
        {E2(2), E2(2), C(4)},                             // 17
        {C(2), std::nullopt, std::nullopt},               // 18
        {O, sum({C(130816), C(2)}), C(24)},               // 19
    };
    std::vector<MapImageEntry> rows;
    for (int k = 1; k <= 19; ++k) {
      auto e = row(k, raw[k - 1].image, cite);
      e.source = pi_top_o(k);
      e.kernel = raw[k - 1].kernel;
      e.cokernel = raw[k - 1].cokernel;
      rows.push_back(std::move(e));
    }
    return MapImageTable("eta_star", "eta_*: pi_k(Top/O) -> pi_{k+1}(Top/O)", 1, 19, std::move(rows));
  }();
  return t;
}

const MapImageTable& eta_sq_table() {
  static const MapImageTable t = [] {
    std::vector<MapImageEntry> rows;
    for (int k = 7; k <= 19; ++k) {
      bool nonzero = k == 9 || k == 16 || k == 17;
      auto e = row(k, nonzero ? C(2) : FinAbGroup{},
                   nonzero ? "(eta^2)_* corollary (ii)" : "(eta^2)_* corollary (i)");
      e.source = pi_top_o(k);
      rows.push_back(std::move(e));
    }
    return MapImageTable("eta_sq", "(eta^2)_*: pi_k(Top/O) -> pi_{k+2}(Top/O)", 7, 19, std::move(rows));
  }();
  return t;
}

const MapImageTable& i_eta_table() {
  static const MapImageTable t = [] {
    std::vector<MapImageEntry> rows;
    for (int k = 1; k <= 16; ++k) {
      FinAbGroup image;
      std::string cite = "(i o eta)_* corollary (i)";
      if (k == 5 || k == 6 || k == 7 || k == 11 || k == 13 || k == 15) {
        image = C(2);
        cite = "(i o eta)_* corollary (ii)";
      } else if (k == 14) {
        image = E2(2);
        cite = "(i o eta)_* corollary (iii)";
      }
      rows.push_back(row(k, image, cite));
    }
    return MapImageTable("i_eta", "(i o eta)_*: [S^{3+k} M(Z/2^r), Top/O] -> pi_{4+k}(Top/O)", 1, 16,
                         std::move(rows));
  }();
  return t;
}

const MapImageTable& eta_tilde_table() {
  static const MapImageTable t = [] {
    std::vector<MapImageEntry> rows;
    auto add = [&](int k, int r_lo, int r_hi, FinAbGroup image, const std::string& cite) {
      auto e = row(k, std::move(image), cite);
      e.r_lo = r_lo;
      e.r_hi = r_hi;
      rows.push_back(std::move(e));
    };
    const FinAbGroup O;
    add(1, 0, 0, O, "eta~_* image lemma (a)(i)");
    add(2, 0, 0, O, "eta~_* image lemma (a)(i)");
    add(3, 0, 0, O, "eta~_* image lemma (a)(i)");
    add(4, 1, 2, E2(2), "eta~_* image lemma (b)(i)");
    add(4, 3, 0, C(2), "eta~_* image lemma (b)(ii)");
    add(5, 0, 0, C(2), "eta~_* image lemma (a)(ii)");
    add(6, 1, 1, C(4), "eta~_* image lemma (c)(i)");
    add(6, 2, 0, C(2), "eta~_* image lemma (c)(ii)");
    add(7, 0, 0, O, "eta~_* image lemma (a)(i)");
    add(8, 0, 0, O, "eta~_* image lemma (a)(i)");
    add(9, 0, 0, O, "eta~_* image lemma (a)(i)");
    add(10, 0, 0, C(2), "eta~_* image lemma (a)(ii)");
    return MapImageTable("eta_tilde", "eta~_*: [S^{3+k} M(Z/2^r), Top/O] -> pi_{5+k}(Top/O)", 1, 10,
                         std::move(rows));
  }();
  return t;
}

FinAbGroup pi_stable(int n) { return stable_stems_table().at(n).group; }

FinAbGroup pi_moore(Int b, int n) {
  if (b < 2) throw std::invalid_argument("Moore spectrum needs b >= 2");
  if (n < 0 || n > 5) throw RangeError(range_message("moore", n, 0, 5));
  const bool even = b % 2 == 0;
  const Int g24 = std::gcd<Int>(24, b);
  switch (n) {
    case 0:
      return C(b);
    case 1:
      return even ? C(2) : FinAbGroup{};
    case 2:
      if (b % 4 == 0) return E2(2);
      return even ? C(4) : FinAbGroup{};
    case 3:
      return even ? sum({C(g24), C(2)}) : C(g24);
    case 4:
      return C(g24);
    default:
      return FinAbGroup{};
  }
}

FinAbGroup pi_top_o(int k) { return top_o_table().at(k).group; }
FinAbGroup pi_g_o(int k) { return g_o_table().at(k).group; }

FinAbGroup pi_g_top(int k) {
  if (k < 1) throw RangeError("g_top: degree must be positive");
  switch (k % 4) {
    case 0:
      return Z();
    case 2:
      return C(2);
    default:
      return FinAbGroup{};
  }
}

FinAbGroup theta(int n) {
  if (n < 5) throw RangeError("theta: only n >= 5 is identified with pi_n(Top/O)");
  return pi_top_o(n);
}

FinAbGroup eta_star_image(int k) { return eta_star_table().at(k).image; }
FinAbGroup eta_sq_image(int k) { return eta_sq_table().at(k).image; }
FinAbGroup i_eta_image(int k) { return i_eta_table().at(k).image; }
FinAbGroup eta_tilde_image(int k, int r) { return eta_tilde_table().at(k, r).image; }

std::vector<std::string> table_names() {
  return {"stable_stems", "moore", "top_o", "g_o", "g_top", "theta", "eta_star", "eta_sq", "i_eta", "eta_tilde"};
}

}  // namespace smooth
