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

#ifndef MIMIC_CORE_FNV_H_
#define MIMIC_CORE_FNV_H_

#include <cstddef>
#include <cstdint>
#include <string>

namespace mimic {

inline uint64_t Fnv1a(const void* data, size_t len, uint64_t h = 0xcbf29ce484222325ULL) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline uint64_t Fnv1a(const std::string& s) { return Fnv1a(s.data(), s.size()); }

std::string HexHash(uint64_t h);

// FNV-1a of a whole file; throws IoError if unreadable.
uint64_t HashFile(const std::string& path);

}  // namespace mimic

#endif  // MIMIC_CORE_FNV_H_
