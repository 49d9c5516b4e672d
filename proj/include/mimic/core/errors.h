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

#ifndef MIMIC_CORE_ERRORS_H_
#define MIMIC_CORE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace mimic {

// The simulator state went non-finite; carries the control-step index at
// which the divergence was detected.
class DivergedSimulation : public std::runtime_error {
 public:
  DivergedSimulation(long step, const std::string& what)
      : std::runtime_error("simulation diverged at step " +
                           std::to_string(step) + ": " + what),
        step_(step) {}
  long step() const { return step_; }

 private:
  long step_;
};

class ParamRange : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidRetarget : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoVisibleTokens : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RegenError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mimic

#endif  // MIMIC_CORE_ERRORS_H_
