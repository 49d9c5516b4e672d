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

#ifndef MIMIC_CORE_JSONIO_H_
#define MIMIC_CORE_JSONIO_H_

#include <string>
#include <vector>

#include <json.hpp>

namespace mimic {

using Json = nlohmann::json;

Json LoadJsonFile(const std::string& path);
void SaveJsonFile(const std::string& path, const Json& j);

// Config parsing is strict: every object must be fully consumed and unknown
// keys are rejected with the full path in the message.
void RequireKeys(const Json& j, const std::vector<std::string>& allowed,
                 const std::string& context);

double GetNum(const Json& j, const std::string& key, double fallback);
int GetInt(const Json& j, const std::string& key, int fallback);
bool GetBool(const Json& j, const std::string& key, bool fallback);
std::string GetStr(const Json& j, const std::string& key,
                   const std::string& fallback);

}  // namespace mimic

#endif  // MIMIC_CORE_JSONIO_H_
