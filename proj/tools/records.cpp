#include "records.hpp"

#include <cstdio>
#include <stdexcept>

namespace oloid::cli {

namespace {

std::string number(double v, int digits)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string json_string(const std::string& s)
{
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
    case '"': out += "\\\""; break;
    case '\\': out += "\\\\"; break;
    case '\n': out += "\\n"; break;
    default: out += c;
    }
  }
  return out + "\"";
}

// RFC 4180
std::string csv_field(const std::string& s)
{
  if (s.find_first_of(",\"\r\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s)
    out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

} // namespace

Format parse_format(const std::string& name)
{
  if (name == "text")
    return Format::text;
  if (name == "json")
    return Format::json;
  if (name == "csv")
    return Format::csv;
  throw std::invalid_argument("unknown format: " + name);
}

void write_records(const std::vector<OutputRecord>& records, Format format, std::ostream& out)
{
  switch (format) {
  case Format::text:
    for (const auto& r : records) {
      char line[160];
      std::snprintf(line, sizeof line, "%-24s %-14s %20s", r.quantity.c_str(), r.route.c_str(),
                    number(r.value, 12).c_str());
      out << line;
      if (r.err_est)
        out << "  +- " << number(*r.err_est, 3);
      out << "  [r^" << r.units_power_of_r << "]\n";
    }
    break;
  case Format::json:
    out << "[";
    for (std::size_t i = 0; i < records.size(); ++i) {
      const auto& r = records[i];
      out << (i ? ",\n " : "\n ") << "{\"quantity\": " << json_string(r.quantity)
          << ", \"route\": " << json_string(r.route) << ", \"value\": " << number(r.value, 17)
          << ", \"err_est\": " << (r.err_est ? number(*r.err_est, 17) : std::string("null"))
          << ", \"units_power_of_r\": " << r.units_power_of_r << "}";
    }
    out << "\n]\n";
    break;
  case Format::csv:
    out << "quantity,route,value,err_est,units_power_of_r\r\n";
    for (const auto& r : records)
      out << csv_field(r.quantity) << ',' << csv_field(r.route) << ',' << number(r.value, 17) << ','
          << (r.err_est ? number(*r.err_est, 17) : std::string()) << ',' << r.units_power_of_r << "\r\n";
    break;
  }
}

} // namespace oloid::cli
