#ifndef QRAD_CSV_HPP
#define QRAD_CSV_HPP

#include <fstream>
#include <string>
#include <vector>

namespace qrad {

/// Shortest round-trip decimal representation ("%.17g" trimmed), so that
/// identical runs produce byte-identical files.
std::string format_double(double v);

/// CSV emitter with a '#'-prefixed key=value metadata block before the
/// header row.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::string& description);

  void metadata(const std::string& key, const std::string& value);
  void metadata(const std::string& key, double value);
  void header(const std::vector<std::string>& columns);
  void row(const std::vector<double>& values);
  void close();

  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::ofstream out_;
  bool header_written_ = false;
};

}  // namespace qrad

#endif  // QRAD_CSV_HPP
