#include "qrad/csv.hpp"

#include <cmath>
#include <cstdio>

#include "qrad/errors.hpp"

namespace qrad {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  // shortest representation that round-trips
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    if (back == v) return buf;
  }
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(const std::string& path, const std::string& description)
    : path_(path), out_(path) {
  if (!out_) {
    throw Error(ErrorCode::IOError, "cannot open output file: " + path);
  }
  out_ << "# " << description << "\n";
}

void CsvWriter::metadata(const std::string& key, const std::string& value) {
  if (header_written_) {
    throw Error(ErrorCode::IOError, "metadata must precede the header row");
  }
  out_ << "# " << key << "=" << value << "\n";
}

void CsvWriter::metadata(const std::string& key, double value) {
  metadata(key, format_double(value));
}

void CsvWriter::header(const std::vector<std::string>& columns) {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    out_ << (i ? "," : "") << columns[i];
  }
  out_ << "\n";
  header_written_ = true;
}

void CsvWriter::row(const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    out_ << (i ? "," : "") << format_double(values[i]);
  }
  out_ << "\n";
}

void CsvWriter::close() { out_.close(); }

}  // namespace qrad
