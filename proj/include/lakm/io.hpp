#pragma once

#include <string>

#include "lakm/core.hpp"

namespace lakm {

/// I/O failure with file/line context.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One point per row, comma-separated decimal doubles; a non-numeric first
/// row is treated as a header. Malformed rows report their line number.
PointSet read_points_csv(const std::string& path);

/// Shortest round-trip decimal encoding; read_points_csv recovers every
/// finite double bit-exactly.
void write_points_csv(const std::string& path, const PointSet& points);
void write_centers_csv(const std::string& path, const CenterSet& centers);

/// One integer per row; -1 encodes the unlabeled sentinel.
LabelAssignment read_labels_csv(const std::string& path);
void write_labels_csv(const std::string& path, const LabelAssignment& labels);

/// FNV-1a over the raw bytes of a file, hex-encoded; used for report
/// input digests.
std::string file_digest(const std::string& path);

}  // namespace lakm
