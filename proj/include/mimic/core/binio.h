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

#ifndef MIMIC_CORE_BINIO_H_
#define MIMIC_CORE_BINIO_H_

// Versioned binary container for named arrays: checkpoints, trajectory
// snapshots, normalizer and optimizer state. Entries are written sorted by
// name and each file carries a trailing FNV-1a checksum, so round-trips are
// bit-exact and corruption is detectable. Little-endian layout.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mimic {

class Archive {
 public:
  void PutF64(const std::string& name, std::vector<double> values);
  void PutI64(const std::string& name, std::vector<int64_t> values);
  void PutText(const std::string& name, std::string value);

  bool HasF64(const std::string& name) const { return f64_.count(name) > 0; }
  bool HasI64(const std::string& name) const { return i64_.count(name) > 0; }
  bool HasText(const std::string& name) const { return text_.count(name) > 0; }

  // Throw CheckpointError when missing.
  const std::vector<double>& GetF64(const std::string& name) const;
  const std::vector<int64_t>& GetI64(const std::string& name) const;
  const std::string& GetText(const std::string& name) const;

  int64_t GetScalarI64(const std::string& name) const;
  double GetScalarF64(const std::string& name) const;
  void PutScalarI64(const std::string& name, int64_t v);
  void PutScalarF64(const std::string& name, double v);

  std::vector<std::string> Names() const;

  // Serialized format version of this build.
  static constexpr uint32_t kFormatVersion = 1;

  void Save(const std::string& path) const;
  // Throws CheckpointError on bad magic, version mismatch, or checksum
  // failure.
  static Archive Load(const std::string& path);

 private:
  std::map<std::string, std::vector<double>> f64_;
  std::map<std::string, std::vector<int64_t>> i64_;
  std::map<std::string, std::string> text_;
};

}  // namespace mimic

#endif  // MIMIC_CORE_BINIO_H_
