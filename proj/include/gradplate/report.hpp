#ifndef GRADPLATE_REPORT_HPP
#define GRADPLATE_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace gradplate {

inline constexpr char kVersion[] = "1.0.0";

// Shortest decimal text that round-trips to the same double (std::to_chars).
// Every number in a report goes through this, so identical runs produce
// byte-identical files.
std::string fmt_double(double v);

// Workers available to a data-parallel fill: min(requested, GRADPLATE_THREADS)
// clamped to [1, 64].  With the variable unset everything stays serial.
int worker_count(int requested);

void write_text_file(const std::string& path, const std::string& text);

// Accumulates a comma-separated table with a fixed header.  Row width is
// checked against the header.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> columns);

  void row(const std::vector<double>& values);
  void row_text(const std::vector<std::string>& cells);

  const std::string& text() const { return buf_; }
  void write_file(const std::string& path) const;

 private:
  std::size_t ncol_;
  std::string buf_;
};

struct SvgSeries {
  std::string label;
  std::string color;  // stroke, e.g. "#1f77b4"
  bool dashed = false;
  std::vector<std::pair<double, double>> points;
};

// Fixed-size line chart with framed axes, min/max tick labels and a legend.
// Throws std::invalid_argument when no series carries a point.
std::string render_line_chart(const std::string& title, const std::string& xlabel,
                              const std::string& ylabel,
                              const std::vector<SvgSeries>& series);

}  // namespace gradplate

#endif
