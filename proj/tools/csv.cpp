// Copyright 2026 The bell-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace belllab::cli
{

std::string format_number(double v)
{
  if (std::isnan(v))
  {
    return "nan";
  }
  if (std::isinf(v))
  {
    return v > 0 ? "inf" : "-inf";
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_param(double v)
{
  if (!std::isfinite(v))
  {
    return format_number(v);
  }
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

CsvDocument::CsvDocument(std::vector<std::string> columns, std::string metadata)
  : width_(columns.size())
{
  for (std::size_t i = 0; i < columns.size(); ++i)
  {
    text_ += (i ? "," : "") + columns[i];
  }
  text_ += "\n# " + metadata + "\n";
}

void CsvDocument::row(std::initializer_list<std::string> cells)
{
  if (cells.size() != width_)
  {
    throw std::logic_error("CsvDocument: row width does not match header");
  }
  bool first = true;
  for (const auto &c : cells)
  {
    text_ += (first ? "" : ",") + c;
    first = false;
  }
  text_ += '\n';
}

void CsvDocument::row(std::initializer_list<double> cells)
{
  if (cells.size() != width_)
  {
    throw std::logic_error("CsvDocument: row width does not match header");
  }
  bool first = true;
  for (double c : cells)
  {
    text_ += (first ? "" : ",") + format_number(c);
    first = false;
  }
  text_ += '\n';
}

void CsvDocument::write(const std::string &path) const
{
  if (path.empty())
  {
    std::cout.write(text_.data(), static_cast<std::streamsize>(text_.size()));
    std::cout.flush();
    if (!std::cout)
    {
      throw std::runtime_error("cannot write to standard output");
    }
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(text_.data(), static_cast<std::streamsize>(text_.size()));
  if (!out)
  {
    throw std::runtime_error("cannot write " + path);
  }
}

std::string metadata_line(const std::string &version, const std::string &command,
                          const std::vector<std::pair<std::string, std::string>> &params)
{
  std::string line = "bell-lab=" + version + " command=" + command;
  for (const auto &[k, v] : params)
  {
    line += " " + k + "=" + v;
  }
  return line;
}

}  // namespace belllab::cli
