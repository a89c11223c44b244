#pragma once

#include <filesystem>
#include <json.hpp>
#include <string>
#include <vector>

namespace nvsensor::io {

// Shortest form with 17 significant digits (%.17g): round-trips exactly,
// so regression outputs can be compared byte-for-byte.
std::string format_double(double v);

// Converts a cell for CSV output; doubles go through format_double.
std::string csv_cell(double v);
std::string csv_cell(long v);
std::string csv_cell(bool v);
std::string csv_cell(const std::string& v);

std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows);

// nlohmann's serializer prints floats in shortest-round-trip form, which
// varies in digit count; this walk emits every float via format_double so
// files are stable under the 17-significant-digit contract.
std::string dump_json(const nlohmann::json& j, int indent = 2);

void write_text(const std::filesystem::path& path, const std::string& text);

struct PlotSeries {
  std::vector<double> x;
  std::vector<double> y;
};

// Minimal standalone SVG line plot; log-scaled axes map the data before
// drawing. Intended for quick inspection, not publication.
std::string svg_line_plot(const std::string& title, const std::string& x_label,
                          const std::string& y_label, const PlotSeries& series,
                          bool log_x = false, bool log_y = false);

}  // namespace nvsensor::io
