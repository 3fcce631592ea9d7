#include "lakm/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace lakm {

namespace {

bool parse_double(std::string_view field, double& out) {
  // Trim ASCII whitespace.
  while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) {
    field.remove_prefix(1);
  }
  while (!field.empty() && (field.back() == ' ' || field.back() == '\t' ||
                            field.back() == '\r')) {
    field.remove_suffix(1);
  }
  if (field.empty()) return false;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc{} && ptr == field.data() + field.size();
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

bool parse_row(const std::string& line, std::vector<double>& out) {
  out.clear();
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    std::string_view field(line.data() + start,
                           (comma == std::string::npos ? line.size() : comma) - start);
    double v;
    if (!parse_double(field, v)) return false;
    out.push_back(v);
    if (comma == std::string::npos) return true;
    start = comma + 1;
  }
}

bool blank(const std::string& line) {
  for (char c : line) {
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

}  // namespace

PointSet read_points_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error(path + ": cannot open");
  std::vector<double> values;
  std::vector<double> row;
  std::size_t n = 0, d = 0, lineno = 0;
  bool header_allowed = true;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    if (!parse_row(line, row)) {
      if (header_allowed) {
        header_allowed = false;  // non-numeric first row: header
        continue;
      }
      throw io_error(path + ":" + std::to_string(lineno) + ": malformed row");
    }
    header_allowed = false;
    if (n == 0) {
      d = row.size();
    } else if (row.size() != d) {
      throw io_error(path + ":" + std::to_string(lineno) + ": expected " +
                     std::to_string(d) + " columns, got " + std::to_string(row.size()));
    }
    values.insert(values.end(), row.begin(), row.end());
    ++n;
  }
  if (n == 0) throw io_error(path + ": no data rows");
  return PointSet::create(n, d, std::move(values));
}

namespace {

void write_matrix_csv(const std::string& path, std::size_t rows, std::size_t cols,
                      const std::vector<double>& values) {
  std::ofstream out(path);
  if (!out) throw io_error(path + ": cannot open for writing");
  std::string line;
  for (std::size_t i = 0; i < rows; ++i) {
    line.clear();
    for (std::size_t j = 0; j < cols; ++j) {
      if (j > 0) line += ',';
      line += format_double(values[i * cols + j]);
    }
    line += '\n';
    out << line;
  }
  if (!out) throw io_error(path + ": write failed");
}

}  // namespace

void write_points_csv(const std::string& path, const PointSet& points) {
  write_matrix_csv(path, points.size(), points.dim(), points.values());
}

void write_centers_csv(const std::string& path, const CenterSet& centers) {
  write_matrix_csv(path, centers.size(), centers.dim(), centers.values());
}

LabelAssignment read_labels_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error(path + ": cannot open");
  LabelAssignment labels;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    std::string_view field(line);
    while (!field.empty() && (field.back() == '\r' || field.back() == ' ')) {
      field.remove_suffix(1);
    }
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    long v;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size() || v < -1) {
      throw io_error(path + ":" + std::to_string(lineno) + ": malformed label");
    }
    labels.push_back(static_cast<std::int32_t>(v));
  }
  return labels;
}

void write_labels_csv(const std::string& path, const LabelAssignment& labels) {
  std::ofstream out(path);
  if (!out) throw io_error(path + ": cannot open for writing");
  for (std::int32_t l : labels) out << l << '\n';
  if (!out) throw io_error(path + ": write failed");
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error(path + ": cannot open");
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char buf[65536];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001b3ULL;
    }
  }
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(h));
  return hex;
}

}  // namespace lakm
