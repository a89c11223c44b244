#include "nvsensor/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nvsensor::io {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_cell(double v) { return format_double(v); }
std::string csv_cell(long v) { return std::to_string(v); }
std::string csv_cell(bool v) { return v ? "true" : "false"; }
std::string csv_cell(const std::string& v) { return v; }

std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  auto append_row = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  append_row(header);
  for (const auto& row : rows) {
    if (row.size() != header.size()) {
      throw std::invalid_argument("CSV row width differs from header");
    }
    append_row(row);
  }
  return out;
}

namespace {

void escape_json_string(const std::string& s, std::string& out) {
  out += '"';
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  out += '"';
}

void dump_value(const nlohmann::json& j, int indent, int depth,
                std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent) * depth, ' ');
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      std::size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        out += pad;
        escape_json_string(it.key(), out);
        out += ": ";
        dump_value(it.value(), indent, depth + 1, out);
        if (i + 1 < j.size()) out += ',';
        out += '\n';
      }
      out += close_pad + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        out += pad;
        dump_value(j[i], indent, depth + 1, out);
        if (i + 1 < j.size()) out += ',';
        out += '\n';
      }
      out += close_pad + "]";
      return;
    }
    case nlohmann::json::value_t::string:
      escape_json_string(j.get<std::string>(), out);
      return;
    case nlohmann::json::value_t::number_float: {
      const double v = j.get<double>();
      // JSON has no Inf/NaN tokens.
      out += std::isfinite(v) ? format_double(v) : "null";
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string dump_json(const nlohmann::json& j, int indent) {
  std::string out;
  dump_value(j, indent, 0, out);
  out += '\n';
  return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string());
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

std::string svg_line_plot(const std::string& title, const std::string& x_label,
                          const std::string& y_label, const PlotSeries& series,
                          bool log_x, bool log_y) {
  if (series.x.size() != series.y.size() || series.x.empty()) {
    throw std::invalid_argument("plot series empty or ragged");
  }
  const double width = 640, height = 480;
  const double ml = 70, mr = 20, mt = 40, mb = 50;  // margins

  auto tx = [log_x](double v) { return log_x ? std::log10(v) : v; };
  auto ty = [log_y](double v) { return log_y ? std::log10(v) : v; };

  double x_min = tx(series.x.front()), x_max = x_min;
  double y_min = ty(series.y.front()), y_max = y_min;
  for (std::size_t i = 0; i < series.x.size(); ++i) {
    x_min = std::min(x_min, tx(series.x[i]));
    x_max = std::max(x_max, tx(series.x[i]));
    y_min = std::min(y_min, ty(series.y[i]));
    y_max = std::max(y_max, ty(series.y[i]));
  }
  if (x_max == x_min) x_max = x_min + 1.0;
  if (y_max == y_min) y_max = y_min + 1.0;

  auto px = [&](double v) {
    return ml + (tx(v) - x_min) / (x_max - x_min) * (width - ml - mr);
  };
  auto py = [&](double v) {
    return height - mb - (ty(v) - y_min) / (y_max - y_min) * (height - mt - mb);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">"
      << title << "</text>\n";
  // axes
  svg << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\""
      << width - mr << "\" y2=\"" << height - mb
      << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
      << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
  // axis labels and end-point ticks
  auto tick_label = [&](double v, bool log_axis) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", log_axis ? std::pow(10.0, v) : v);
    return std::string(buf);
  };
  svg << "<text x=\"" << (ml + width - mr) / 2 << "\" y=\"" << height - 12
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\">"
      << x_label << (log_x ? " (log)" : "") << "</text>\n"
      << "<text x=\"16\" y=\"" << (mt + height - mb) / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\" transform=\"rotate(-90 16 "
      << (mt + height - mb) / 2 << ")\">" << y_label
      << (log_y ? " (log)" : "") << "</text>\n";
  svg << "<text x=\"" << ml << "\" y=\"" << height - mb + 16
      << "\" font-family=\"sans-serif\" font-size=\"11\">"
      << tick_label(x_min, log_x) << "</text>\n"
      << "<text x=\"" << width - mr << "\" y=\"" << height - mb + 16
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
         "font-size=\"11\">"
      << tick_label(x_max, log_x) << "</text>\n"
      << "<text x=\"" << ml - 6 << "\" y=\"" << height - mb
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
         "font-size=\"11\">"
      << tick_label(y_min, log_y) << "</text>\n"
      << "<text x=\"" << ml - 6 << "\" y=\"" << mt + 4
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
         "font-size=\"11\">"
      << tick_label(y_max, log_y) << "</text>\n";
  // data
  svg << "<polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.5\" "
         "points=\"";
  for (std::size_t i = 0; i < series.x.size(); ++i) {
    if (i > 0) svg << ' ';
    svg << px(series.x[i]) << ',' << py(series.y[i]);
  }
  svg << "\"/>\n</svg>\n";
  return svg.str();
}

}  // namespace nvsensor::io
