#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace luttflow::cli {

// 17 significant digits: doubles survive a text round trip
std::string format_double(double v);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  CsvTable& row();
  CsvTable& add(double v);
  CsvTable& add(long long v);
  CsvTable& add(const std::string& v);
  CsvTable& add(std::complex<double> z);  // two cells: re, im

  std::size_t rows() const { return rows_.size(); }
  std::string render() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

// re_<name>, im_<name>
void complex_columns(std::vector<std::string>& header, const std::string& name);

// write to <path>.tmp, then rename over <path>
void write_atomic(const std::filesystem::path& path, const std::string& content);

std::string sha256_hex(const std::string& data);

struct OutputRecord {
  std::string file;
  std::string sha256;
  std::uintmax_t bytes = 0;
};

// Collects what a command wrote; the manifest goes last so a crash leaves none.
class OutputSet {
 public:
  explicit OutputSet(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  void write(const std::string& name, const std::string& content);
  const std::vector<OutputRecord>& records() const { return records_; }

 private:
  std::filesystem::path dir_;
  std::vector<OutputRecord> records_;
};

}  // namespace luttflow::cli
