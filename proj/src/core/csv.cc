// Copyright 2026 The PlanarMimic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mimic/core/csv.h"

#include <cstdio>

#include "mimic/core/errors.h"

namespace mimic {

CsvWriter::CsvWriter(const std::string& path,
                     const std::vector<std::string>& header)
    : out_(path, std::ios::trunc), columns_(header.size()) {
  if (!out_) throw IoError("cannot open csv for writing: " + path);
  for (size_t i = 0; i < header.size(); ++i) {
    out_ << header[i];
    if (i + 1 < header.size()) out_ << ',';
  }
  out_ << '\n';
}

std::string CsvWriter::FormatDouble(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

void CsvWriter::Row(const std::vector<double>& values) {
  if (values.size() != columns_) throw IoError("csv row width mismatch");
  for (size_t i = 0; i < values.size(); ++i) {
    out_ << FormatDouble(values[i]);
    if (i + 1 < values.size()) out_ << ',';
  }
  out_ << '\n';
}

void CsvWriter::RawRow(const std::string& line) { out_ << line << '\n'; }

}  // namespace mimic
