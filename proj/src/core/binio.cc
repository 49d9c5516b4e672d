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

#include "mimic/core/binio.h"

#include <cstring>
#include <fstream>

#include "mimic/core/errors.h"
#include "mimic/core/fnv.h"

namespace mimic {
namespace {

constexpr char kMagic[8] = {'P', 'M', 'A', 'R', 'C', 'H', 'V', '1'};

enum EntryType : uint8_t { kF64 = 0, kI64 = 1, kText = 2 };

void Append(std::string* buf, const void* data, size_t len) {
  buf->append(static_cast<const char*>(data), len);
}

template <typename T>
void AppendPod(std::string* buf, T v) {
  Append(buf, &v, sizeof(T));
}

template <typename T>
T ReadPod(const std::string& buf, size_t* off) {
  if (*off + sizeof(T) > buf.size()) throw CheckpointError("archive truncated");
  T v;
  std::memcpy(&v, buf.data() + *off, sizeof(T));
  *off += sizeof(T);
  return v;
}

std::string ReadBytes(const std::string& buf, size_t* off, size_t len) {
  if (*off + len > buf.size()) throw CheckpointError("archive truncated");
  std::string out = buf.substr(*off, len);
  *off += len;
  return out;
}

}  // namespace

void Archive::PutF64(const std::string& name, std::vector<double> values) {
  f64_[name] = std::move(values);
}

void Archive::PutI64(const std::string& name, std::vector<int64_t> values) {
  i64_[name] = std::move(values);
}

void Archive::PutText(const std::string& name, std::string value) {
  text_[name] = std::move(value);
}

const std::vector<double>& Archive::GetF64(const std::string& name) const {
  auto it = f64_.find(name);
  if (it == f64_.end()) throw CheckpointError("missing f64 entry: " + name);
  return it->second;
}

const std::vector<int64_t>& Archive::GetI64(const std::string& name) const {
  auto it = i64_.find(name);
  if (it == i64_.end()) throw CheckpointError("missing i64 entry: " + name);
  return it->second;
}

const std::string& Archive::GetText(const std::string& name) const {
  auto it = text_.find(name);
  if (it == text_.end()) throw CheckpointError("missing text entry: " + name);
  return it->second;
}

int64_t Archive::GetScalarI64(const std::string& name) const {
  const auto& v = GetI64(name);
  if (v.size() != 1) throw CheckpointError("not a scalar: " + name);
  return v[0];
}

double Archive::GetScalarF64(const std::string& name) const {
  const auto& v = GetF64(name);
  if (v.size() != 1) throw CheckpointError("not a scalar: " + name);
  return v[0];
}

void Archive::PutScalarI64(const std::string& name, int64_t v) {
  PutI64(name, {v});
}

void Archive::PutScalarF64(const std::string& name, double v) {
  PutF64(name, {v});
}

std::vector<std::string> Archive::Names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : f64_) out.push_back(k);
  for (const auto& [k, v] : i64_) out.push_back(k);
  for (const auto& [k, v] : text_) out.push_back(k);
  return out;
}

void Archive::Save(const std::string& path) const {
  std::string buf;
  Append(&buf, kMagic, sizeof(kMagic));
  AppendPod<uint32_t>(&buf, kFormatVersion);
  const uint64_t count = f64_.size() + i64_.size() + text_.size();
  AppendPod<uint64_t>(&buf, count);
  // std::map iterates sorted by name, so byte layout is canonical.
  for (const auto& [name, values] : f64_) {
    AppendPod<uint8_t>(&buf, kF64);
    AppendPod<uint32_t>(&buf, static_cast<uint32_t>(name.size()));
    Append(&buf, name.data(), name.size());
    AppendPod<uint64_t>(&buf, values.size());
    Append(&buf, values.data(), values.size() * sizeof(double));
  }
  for (const auto& [name, values] : i64_) {
    AppendPod<uint8_t>(&buf, kI64);
    AppendPod<uint32_t>(&buf, static_cast<uint32_t>(name.size()));
    Append(&buf, name.data(), name.size());
    AppendPod<uint64_t>(&buf, values.size());
    Append(&buf, values.data(), values.size() * sizeof(int64_t));
  }
  for (const auto& [name, value] : text_) {
    AppendPod<uint8_t>(&buf, kText);
    AppendPod<uint32_t>(&buf, static_cast<uint32_t>(name.size()));
    Append(&buf, name.data(), name.size());
    AppendPod<uint64_t>(&buf, value.size());
    Append(&buf, value.data(), value.size());
  }
  const uint64_t checksum = Fnv1a(buf.data(), buf.size());
  AppendPod<uint64_t>(&buf, checksum);

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) throw IoError("short write to " + path);
}

Archive Archive::Load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointError("cannot open " + path);
  std::string buf((std::istreambuf_iterator<char>(in)),
                  std::istreambuf_iterator<char>());
  if (buf.size() < sizeof(kMagic) + sizeof(uint32_t) + 2 * sizeof(uint64_t)) {
    throw CheckpointError("archive too small: " + path);
  }
  const size_t body = buf.size() - sizeof(uint64_t);
  uint64_t stored;
  std::memcpy(&stored, buf.data() + body, sizeof(uint64_t));
  if (Fnv1a(buf.data(), body) != stored) {
    throw CheckpointError("archive checksum mismatch: " + path);
  }

  size_t off = 0;
  if (std::memcmp(buf.data(), kMagic, sizeof(kMagic)) != 0) {
    throw CheckpointError("bad archive magic: " + path);
  }
  off += sizeof(kMagic);
  const uint32_t version = ReadPod<uint32_t>(buf, &off);
  if (version != kFormatVersion) {
    throw CheckpointError("archive version mismatch: have " +
                          std::to_string(version) + ", want " +
                          std::to_string(kFormatVersion));
  }
  const uint64_t count = ReadPod<uint64_t>(buf, &off);
  Archive a;
  for (uint64_t e = 0; e < count; ++e) {
    const uint8_t type = ReadPod<uint8_t>(buf, &off);
    const uint32_t name_len = ReadPod<uint32_t>(buf, &off);
    const std::string name = ReadBytes(buf, &off, name_len);
    const uint64_t n = ReadPod<uint64_t>(buf, &off);
    switch (type) {
      case kF64: {
        std::vector<double> v(n);
        const std::string bytes = ReadBytes(buf, &off, n * sizeof(double));
        std::memcpy(v.data(), bytes.data(), bytes.size());
        a.f64_[name] = std::move(v);
        break;
      }
      case kI64: {
        std::vector<int64_t> v(n);
        const std::string bytes = ReadBytes(buf, &off, n * sizeof(int64_t));
        std::memcpy(v.data(), bytes.data(), bytes.size());
        a.i64_[name] = std::move(v);
        break;
      }
      case kText: {
        a.text_[name] = ReadBytes(buf, &off, n);
        break;
      }
      default:
        throw CheckpointError("unknown archive entry type");
    }
  }
  return a;
}

}  // namespace mimic
