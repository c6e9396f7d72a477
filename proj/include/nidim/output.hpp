#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nidim::output {

// scientific notation, 12 significant digits, '.' decimal separator
std::string sci(double v);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}
  void comment(const std::string& line);
  void header(const std::vector<std::string>& cols);
  void row(const std::vector<std::string>& cells);

 private:
  std::ostream& os_;
};

}  // namespace nidim::output
