#include "ncdoc/docsim/output.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <stdexcept>

namespace ncdoc::docsim {

void Table::add(std::string name, std::vector<double> values) {
  if (!columns.empty() && values.size() != columns[0].size())
    throw std::invalid_argument("Table: column " + name + " has the wrong length");
  header.push_back(std::move(name));
  columns.push_back(std::move(values));
}

std::size_t Table::rows() const { return columns.empty() ? 0 : columns[0].size(); }

void write_csv(std::ostream& out, const Table& t) {
  for (std::size_t c = 0; c < t.header.size(); ++c) out << (c ? "," : "") << t.header[c];
  out << '\n' << std::setprecision(17);
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << t.columns[c][r];
    out << '\n';
  }
}

namespace {

const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::pair<double, double> finite_range(const std::vector<double>& v) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (double x : v)
    if (std::isfinite(x)) lo = std::min(lo, x), hi = std::max(hi, x);
  if (!(lo <= hi)) return {0, 1};
  if (lo == hi) return {lo - 1, hi + 1};
  return {lo, hi};
}

}  // namespace

void write_svg(std::ostream& out, const Table& t, int width, int height) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
      << "\">\n";
  if (t.columns.size() >= 2) {
    const auto [x0, x1] = finite_range(t.columns[0]);
    std::vector<double> all;
    for (std::size_t c = 1; c < t.columns.size(); ++c) all.insert(all.end(), t.columns[c].begin(), t.columns[c].end());
    const auto [y0, y1] = finite_range(all);
    const double m = 20;
    out << std::setprecision(6);
    for (std::size_t c = 1; c < t.columns.size(); ++c) {
      out << "<polyline fill=\"none\" stroke=\"" << kColors[(c - 1) % 6] << "\" points=\"";
      for (std::size_t r = 0; r < t.rows(); ++r) {
        const double x = t.columns[0][r], y = t.columns[c][r];
        if (!std::isfinite(x) || !std::isfinite(y)) continue;
        out << m + (x - x0) / (x1 - x0) * (width - 2 * m) << ',' << height - m - (y - y0) / (y1 - y0) * (height - 2 * m)
            << ' ';
      }
      out << "\"><title>" << t.header[c] << "</title></polyline>\n";
    }
  }
  out << "</svg>\n";
}

}  // namespace ncdoc::docsim
