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

#ifndef MIMIC_NN_SET_ENCODER_H_
#define MIMIC_NN_SET_ENCODER_H_

#include <string>
#include <vector>

#include "mimic/nn/mlp.h"

namespace mimic {

// Set encoder over multi-modal tokens with hard masking. Each modality has
// one token encoder shared by all tokens of that modality; visible token
// encodings are mean-pooled, run through a trunk, and mapped to mean/log-std
// heads. Invisible tokens are skipped outright (their values are never
// read), so the output is bitwise independent of masked content.
class MaskedSetEncoder {
 public:
  struct ModalitySpec {
    std::string name;
    int input_dim = 0;
  };

  struct Config {
    std::vector<ModalitySpec> modalities;
    std::vector<int> encoder_widths = {256, 256};
    int token_dim = 64;
    std::vector<int> trunk_widths = {256};
    int trunk_dim = 128;
    std::vector<int> head_widths = {};
    int output_dim = 64;
    double head_out_scale = 0.01;
  };

  struct TokenRef {
    int modality = 0;
    const double* values = nullptr;  // length = modality input_dim
    bool visible = false;
  };

  struct Cache {
    std::vector<int> visible;                 // indices into the token list
    std::vector<int> visible_modality;
    std::vector<Mlp::Cache> encoder_caches;   // one per visible token
    std::vector<double> pooled;
    Mlp::Cache trunk_cache;
    Mlp::Cache mean_cache;
    Mlp::Cache logstd_cache;
    std::vector<double> logstd_pre;           // before clamping
  };

  struct Output {
    std::vector<double> mean;
    std::vector<double> logstd;
  };

  // Accumulation buffers shaped like the encoder's parameter blocks.
  struct Grads {
    std::vector<std::vector<double>> encoders;
    std::vector<double> trunk, mean_head, logstd_head;
    void Zero();
  };

  MaskedSetEncoder() = default;
  static MaskedSetEncoder Create(const Config& cfg, Rng& rng);

  // Throws NoVisibleTokens when nothing is visible, ShapeError on bad token
  // widths or unknown modality ids.
  Output Forward(const std::vector<TokenRef>& tokens,
                 Cache* cache = nullptr) const;

  // dtoken_inputs, when non-null, must be pre-sized to the token count;
  // entries for visible tokens are overwritten with input gradients.
  void Backward(const Cache& cache, const std::vector<double>& dmean,
                const std::vector<double>& dlogstd, Grads* grads,
                std::vector<std::vector<double>>* dtoken_inputs = nullptr) const;

  Grads MakeGrads() const;

  int output_dim() const { return cfg_.output_dim; }
  const Config& config() const { return cfg_; }

  int num_param_blocks() const { return static_cast<int>(encoders_.size()) + 3; }
  std::vector<double>* param_block(int i);
  const std::vector<double>* param_block(int i) const;
  std::string param_block_name(int i) const;
  std::vector<double>* grad_block(Grads& g, int i) const;

  static constexpr double kLogStdMin = -5.0;
  static constexpr double kLogStdMax = 2.0;

 private:
  Config cfg_;
  std::vector<Mlp> encoders_;  // one per modality
  Mlp trunk_;
  Mlp mean_head_;
  Mlp logstd_head_;
};

}  // namespace mimic

#endif  // MIMIC_NN_SET_ENCODER_H_
