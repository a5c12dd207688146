#include "gradplate/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace gradplate {

std::string fmt_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

int worker_count(int requested) {
  if (requested < 1) requested = 1;
  long cap = 1;
  if (const char* env = std::getenv("GRADPLATE_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) cap = std::min(v, 64L);
  }
  return static_cast<int>(std::min<long>(requested, cap));
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

CsvWriter::CsvWriter(std::vector<std::string> columns) : ncol_(columns.size()) {
  if (ncol_ == 0) throw std::invalid_argument("CsvWriter: no columns");
  for (std::size_t i = 0; i < ncol_; ++i) {
    if (i) buf_ += ',';
    buf_ += columns[i];
  }
  buf_ += '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
  std::vector<std::string> cells(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) cells[i] = fmt_double(values[i]);
  row_text(cells);
}

void CsvWriter::row_text(const std::vector<std::string>& cells) {
  if (cells.size() != ncol_)
    throw std::invalid_argument("CsvWriter: row width does not match the header");
  for (std::size_t i = 0; i < ncol_; ++i) {
    if (i) buf_ += ',';
    buf_ += cells[i];
  }
  buf_ += '\n';
}

void CsvWriter::write_file(const std::string& path) const { write_text_file(path, buf_); }

namespace {

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '&') out += "&amp;";
    else if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else out += c;
  }
  return out;
}

}  // namespace

std::string render_line_chart(const std::string& title, const std::string& xlabel,
                              const std::string& ylabel,
                              const std::vector<SvgSeries>& series) {
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool any = false;
  for (const SvgSeries& s : series)
    for (auto [x, y] : s.points) {
      if (!any) {
        xmin = xmax = x;
        ymin = ymax = y;
        any = true;
      } else {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
      }
    }
  if (!any) throw std::invalid_argument("render_line_chart: no points to draw");
  if (xmax <= xmin) xmax = xmin + 1;
  if (ymax <= ymin) ymax = ymin + 1;

  const double W = 720, H = 480, L = 72, R = 24, T = 40, B = 56;
  auto px = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (W - L - R); };
  auto py = [&](double y) { return T + (ymax - y) / (ymax - ymin) * (H - T - B); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"480\" "
         "viewBox=\"0 0 720 480\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect width=\"720\" height=\"480\" fill=\"#ffffff\"/>\n";
  svg += "<text x=\"360\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" +
         xml_escape(title) + "</text>\n";

  // frame and tick labels at the data extremes
  svg += "<rect x=\"" + fmt_double(L) + "\" y=\"" + fmt_double(T) + "\" width=\"" +
         fmt_double(W - L - R) + "\" height=\"" + fmt_double(H - T - B) +
         "\" fill=\"none\" stroke=\"#333333\"/>\n";
  svg += "<text x=\"" + fmt_double(L) + "\" y=\"" + fmt_double(H - B + 16) +
         "\" text-anchor=\"middle\">" + fmt_double(xmin) + "</text>\n";
  svg += "<text x=\"" + fmt_double(W - R) + "\" y=\"" + fmt_double(H - B + 16) +
         "\" text-anchor=\"middle\">" + fmt_double(xmax) + "</text>\n";
  svg += "<text x=\"" + fmt_double(L - 6) + "\" y=\"" + fmt_double(H - B) +
         "\" text-anchor=\"end\">" + fmt_double(ymin) + "</text>\n";
  svg += "<text x=\"" + fmt_double(L - 6) + "\" y=\"" + fmt_double(T + 10) +
         "\" text-anchor=\"end\">" + fmt_double(ymax) + "</text>\n";
  svg += "<text x=\"" + fmt_double((L + W - R) / 2) + "\" y=\"" + fmt_double(H - 12) +
         "\" text-anchor=\"middle\">" + xml_escape(xlabel) + "</text>\n";
  svg += "<text x=\"16\" y=\"" + fmt_double((T + H - B) / 2) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         fmt_double((T + H - B) / 2) + ")\">" + xml_escape(ylabel) + "</text>\n";

  int li = 0;
  for (const SvgSeries& s : series) {
    if (!s.points.empty()) {
      svg += "<polyline fill=\"none\" stroke=\"" + s.color + "\"";
      if (s.dashed) svg += " stroke-dasharray=\"5 3\"";
      svg += " points=\"";
      for (std::size_t i = 0; i < s.points.size(); ++i) {
        if (i) svg += ' ';
        svg += fmt_double(px(s.points[i].first)) + ',' + fmt_double(py(s.points[i].second));
      }
      svg += "\"/>\n";
    }
    double ly = T + 14 + 16.0 * li++;
    svg += "<line x1=\"" + fmt_double(W - R - 150) + "\" y1=\"" + fmt_double(ly - 4) +
           "\" x2=\"" + fmt_double(W - R - 126) + "\" y2=\"" + fmt_double(ly - 4) +
           "\" stroke=\"" + s.color + "\"" + (s.dashed ? " stroke-dasharray=\"5 3\"" : "") +
           "/>\n";
    svg += "<text x=\"" + fmt_double(W - R - 120) + "\" y=\"" + fmt_double(ly) + "\">" +
           xml_escape(s.label) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace gradplate
