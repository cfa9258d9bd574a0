#ifndef OLOID_TOOLS_RECORDS_HPP
#define OLOID_TOOLS_RECORDS_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace oloid::cli {

struct OutputRecord
{
  std::string quantity;
  std::string route;
  double value;
  std::optional<double> err_est;
  int units_power_of_r;
};

enum class Format { text, json, csv };

Format parse_format(const std::string& name);

// json and csv use 17 significant digits, text 12.
void write_records(const std::vector<OutputRecord>& records, Format format, std::ostream& out);

} // namespace oloid::cli

#endif // OLOID_TOOLS_RECORDS_HPP
