#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ncdoc::docsim {

/// Columns of equal length; rows are written with 17 significant digits.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;

  void add(std::string name, std::vector<double> values);
  std::size_t rows() const;
};

void write_csv(std::ostream& out, const Table& t);
/// Polyline of every column after the first against the first.
void write_svg(std::ostream& out, const Table& t, int width = 640, int height = 400);

}  // namespace ncdoc::docsim
