#include "landau/io.hpp"

#include <bit>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <ostream>
#include <stdexcept>

namespace landau::io {

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  if (res.ec != std::errc{}) throw std::runtime_error("format_number: conversion failed");
  return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(std::ostream& out, const std::vector<std::string>& header) : out_(out) {
  for (const auto& h : header) field(h);
  end_row();
}

CsvWriter& CsvWriter::field(double v) { return field(std::string_view(format_number(v))); }

CsvWriter& CsvWriter::field(long long v) { return field(std::string_view(std::to_string(v))); }

CsvWriter& CsvWriter::field(std::string_view text) {
  if (!first_) out_ << ',';
  out_ << text;
  first_ = false;
  return *this;
}

void CsvWriter::end_row() {
  out_ << '\n';
  first_ = true;
}

void write_field_csv(const FieldGrid& grid, std::ostream& out) {
  CsvWriter csv(out, {"x", "y", "re", "im", "abs"});
  for (std::size_t j = 0; j < grid.n_y; ++j)
    for (std::size_t i = 0; i < grid.n_x; ++i) {
      const Complex v = grid.at(i, j);
      csv.field(grid.x(i)).field(grid.y(j)).field(v.real()).field(v.imag()).field(std::abs(v));
      csv.end_row();
    }
}

namespace {

void put_le(std::ostream& out, double v) {
  auto bits = std::bit_cast<std::uint64_t>(v);
  char bytes[8];
  for (int k = 0; k < 8; ++k) bytes[k] = static_cast<char>((bits >> (8 * k)) & 0xFF);
  out.write(bytes, 8);
}

}  // namespace

void write_field_binary(const FieldGrid& grid, const std::string& header_json, std::ostream& out) {
  if (header_json.find('\n') != std::string::npos) throw std::invalid_argument("binary header must be one line");
  out << header_json << '\n';
  for (std::size_t j = 0; j < grid.n_y; ++j)
    for (std::size_t i = 0; i < grid.n_x; ++i) put_le(out, grid.x(i));
  for (std::size_t j = 0; j < grid.n_y; ++j)
    for (std::size_t i = 0; i < grid.n_x; ++i) put_le(out, grid.y(j));
  for (const auto& v : grid.values) put_le(out, v.real());
  for (const auto& v : grid.values) put_le(out, v.imag());
  for (const auto& v : grid.values) put_le(out, std::abs(v));
}

void write_trajectory_csv(const Trajectory& traj, std::ostream& out) {
  CsvWriter csv(out, {"t", "x", "y", "p_x", "p_y", "energy"});
  for (std::size_t k = 0; k < traj.samples.size(); ++k) {
    const auto& s = traj.samples[k];
    csv.field(s.t).field(s.x).field(s.y).field(s.p_x).field(s.p_y).field(traj.energy_series[k]);
    csv.end_row();
  }
}

}  // namespace landau::io
