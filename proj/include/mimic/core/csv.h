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

#ifndef MIMIC_CORE_CSV_H_
#define MIMIC_CORE_CSV_H_

#include <fstream>
#include <string>
#include <vector>

namespace mimic {

// Minimal CSV emitter. Doubles are printed with %.17g so logs are both
// human-readable and bit-exact reproducible.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);

  void Row(const std::vector<double>& values);
  void RawRow(const std::string& line);
  void Flush() { out_.flush(); }

  static std::string FormatDouble(double v);

 private:
  std::ofstream out_;
  size_t columns_;
};

}  // namespace mimic

#endif  // MIMIC_CORE_CSV_H_
