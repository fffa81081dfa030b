#pragma once

// Deterministic text/binary serialization: CSV with a header row, '.'
// decimal point, 17 significant digits and LF line endings.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "landau/classical_dynamics.hpp"
#include "landau/wavefunctions.hpp"

namespace landau::io {

// 17 significant digits (as printf %.17g), locale independent.
std::string format_number(double v);

class CsvWriter {
 public:
  CsvWriter(std::ostream& out, const std::vector<std::string>& header);
  CsvWriter& field(double v);
  CsvWriter& field(long long v);
  CsvWriter& field(std::string_view text);
  void end_row();

 private:
  std::ostream& out_;
  bool first_ = true;
};

// Columns x, y, re, im, abs; rows in storage order (y outer, x inner).
void write_field_csv(const FieldGrid& grid, std::ostream& out);

// One line of JSON (the header, terminated by '\n') followed by five
// little-endian float64 columns x, y, re, im, abs of n_x * n_y values each.
void write_field_binary(const FieldGrid& grid, const std::string& header_json, std::ostream& out);

// Columns t, x, y, p_x, p_y, energy.
void write_trajectory_csv(const Trajectory& traj, std::ostream& out);

}  // namespace landau::io
