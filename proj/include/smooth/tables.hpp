#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "smooth/abgroup.hpp"

namespace smooth {

/// Query outside the degree range a table covers.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct TableEntry {
  FinAbGroup group;
  std::string citation;
};

class GradedTable {
 public:
  GradedTable(std::string name, int lo, int hi, std::map<int, TableEntry> entries);

  const std::string& name() const { return name_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool contains(int degree) const { return degree >= lo_ && degree <= hi_; }
  const TableEntry& at(int degree) const;
  const std::map<int, TableEntry>& entries() const { return entries_; }

 private:
  std::string name_;
  int lo_, hi_;
  std::map<int, TableEntry> entries_;
};

/// One row of a map-image table. For r-dependent maps the row applies to
/// r_lo <= r <= r_hi (r_hi = 0 meaning unbounded); r_lo = 0 marks r-independent rows.
struct MapImageEntry {
  int degree = 0;
  int r_lo = 0;
  int r_hi = 0;
  FinAbGroup image;
  std::optional<FinAbGroup> source;
  std::optional<FinAbGroup> kernel;    // subgroup of the source
  std::optional<FinAbGroup> cokernel;  // target / image
  std::string citation;

  bool matches(int k, int r) const;
  std::string key_label() const;
};

class MapImageTable {
 public:
  MapImageTable(std::string name, std::string description, int lo, int hi, std::vector<MapImageEntry> rows);

  const std::string& name() const { return name_; }
  const std::string& description() const { return description_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  const std::vector<MapImageEntry>& rows() const { return rows_; }
  /// r is ignored by r-independent tables.
  const MapImageEntry& at(int degree, int r = 1) const;

 private:
  std::string name_, description_;
  int lo_, hi_;
  std::vector<MapImageEntry> rows_;
};

const GradedTable& stable_stems_table();
const GradedTable& top_o_table();
const GradedTable& g_o_table();
const MapImageTable& eta_star_table();
const MapImageTable& eta_sq_table();
const MapImageTable& i_eta_table();
const MapImageTable& eta_tilde_table();

/// G/Top and Moore-spectrum groups are given by formulas; these build finite views.
GradedTable g_top_table(int hi = 20);
GradedTable moore_table(Int b);

FinAbGroup pi_stable(int n);
FinAbGroup pi_moore(Int b, int n);
FinAbGroup pi_top_o(int k);
FinAbGroup pi_g_o(int k);
FinAbGroup pi_g_top(int k);
/// Group of homotopy n-spheres, n >= 5, identified with pi_n(Top/O).
FinAbGroup theta(int n);

FinAbGroup eta_star_image(int k);
FinAbGroup eta_sq_image(int k);
FinAbGroup i_eta_image(int k);
FinAbGroup eta_tilde_image(int k, int r);

/// Names accepted by table_by_name / dumps.
std::vector<std::string> table_names();

}  // namespace smooth
