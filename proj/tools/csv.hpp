// Copyright 2026 The bell-lab Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BELLLAB_TOOLS_CSV_HPP
#define BELLLAB_TOOLS_CSV_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace belllab::cli
{

// %.17g, with "nan" / "inf" / "-inf" spelled out.
std::string format_number(double v);

// Shortest text that reads back to v; used for echoed parameters.
std::string format_param(double v);

// Buffered CSV: header row, one '#' metadata line, then data rows. Nothing
// reaches the destination until write() is called.
class CsvDocument
{
public:
  CsvDocument(std::vector<std::string> columns, std::string metadata);

  void row(std::initializer_list<std::string> cells);
  void row(std::initializer_list<double> cells);

  const std::string &text() const { return text_; }

  // Empty path means standard output. Throws std::runtime_error on I/O failure.
  void write(const std::string &path) const;

private:
  std::size_t width_;
  std::string text_;
};

// "key=value" pairs joined by spaces, values taken verbatim.
std::string metadata_line(const std::string &version, const std::string &command,
                          const std::vector<std::pair<std::string, std::string>> &params);

}  // namespace belllab::cli

#endif  // BELLLAB_TOOLS_CSV_HPP
