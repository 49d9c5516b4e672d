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

#include "mimic/nn/set_encoder.h"

#include <algorithm>

#include "mimic/core/errors.h"
#include "mimic/core/kernels.h"

namespace mimic {

void MaskedSetEncoder::Grads::Zero() {
  for (auto& e : encoders) std::fill(e.begin(), e.end(), 0.0);
  std::fill(trunk.begin(), trunk.end(), 0.0);
  std::fill(mean_head.begin(), mean_head.end(), 0.0);
  std::fill(logstd_head.begin(), logstd_head.end(), 0.0);
}

MaskedSetEncoder MaskedSetEncoder::Create(const Config& cfg, Rng& rng) {
  if (cfg.modalities.empty()) throw ShapeError("set encoder needs modalities");
  MaskedSetEncoder enc;
  enc.cfg_ = cfg;
  for (const ModalitySpec& m : cfg.modalities) {
    std::vector<int> widths = {m.input_dim};
    widths.insert(widths.end(), cfg.encoder_widths.begin(),
                  cfg.encoder_widths.end());
    widths.push_back(cfg.token_dim);
    enc.encoders_.push_back(Mlp::Create(widths, rng));
  }
  std::vector<int> trunk_widths = {cfg.token_dim};
  trunk_widths.insert(trunk_widths.end(), cfg.trunk_widths.begin(),
                      cfg.trunk_widths.end());
  trunk_widths.push_back(cfg.trunk_dim);
  enc.trunk_ = Mlp::Create(trunk_widths, rng);

  std::vector<int> head_widths = {cfg.trunk_dim};
  head_widths.insert(head_widths.end(), cfg.head_widths.begin(),
                     cfg.head_widths.end());
  head_widths.push_back(cfg.output_dim);
  enc.mean_head_ = Mlp::Create(head_widths, rng, cfg.head_out_scale);
  enc.logstd_head_ = Mlp::Create(head_widths, rng, cfg.head_out_scale);
  return enc;
}

MaskedSetEncoder::Output MaskedSetEncoder::Forward(
    const std::vector<TokenRef>& tokens, Cache* cache) const {
  Cache local;
  Cache& c = cache ? *cache : local;
  c.visible.clear();
  c.visible_modality.clear();
  c.encoder_caches.clear();

  std::vector<double> pooled(cfg_.token_dim, 0.0);
  int visible_count = 0;
  for (size_t t = 0; t < tokens.size(); ++t) {
    const TokenRef& tok = tokens[t];
    if (!tok.visible) continue;
    if (tok.modality < 0 || tok.modality >= static_cast<int>(encoders_.size())) {
      throw ShapeError("unknown modality id");
    }
    const Mlp& enc = encoders_[tok.modality];
    std::vector<double> in(tok.values, tok.values + enc.input_dim());
    c.encoder_caches.emplace_back();
    const std::vector<double> token_enc = enc.Forward(in, &c.encoder_caches.back());
    kern::Axpy(1.0, token_enc.data(), pooled.data(), cfg_.token_dim);
    c.visible.push_back(static_cast<int>(t));
    c.visible_modality.push_back(tok.modality);
    ++visible_count;
  }
  if (visible_count == 0) {
    throw NoVisibleTokens("set encoder called with every token masked");
  }
  kern::Scale(pooled.data(), 1.0 / visible_count, cfg_.token_dim);
  c.pooled = pooled;

  const std::vector<double> trunk_out = trunk_.Forward(pooled, &c.trunk_cache);
  Output out;
  out.mean = mean_head_.Forward(trunk_out, &c.mean_cache);
  out.logstd = logstd_head_.Forward(trunk_out, &c.logstd_cache);
  c.logstd_pre = out.logstd;
  for (double& v : out.logstd) v = std::clamp(v, kLogStdMin, kLogStdMax);
  return out;
}

void MaskedSetEncoder::Backward(
    const Cache& cache, const std::vector<double>& dmean,
    const std::vector<double>& dlogstd, Grads* grads,
    std::vector<std::vector<double>>* dtoken_inputs) const {
  std::vector<double> dtrunk_out(cfg_.trunk_dim, 0.0);
  std::vector<double> tmp(cfg_.trunk_dim, 0.0);
  mean_head_.Backward(cache.mean_cache, dmean, grads->mean_head.data(),
                      tmp.data());
  kern::Axpy(1.0, tmp.data(), dtrunk_out.data(), cfg_.trunk_dim);

  // Clamped log-std entries pass no gradient.
  std::vector<double> dl = dlogstd;
  for (size_t i = 0; i < dl.size(); ++i) {
    if (cache.logstd_pre[i] < kLogStdMin || cache.logstd_pre[i] > kLogStdMax) {
      dl[i] = 0.0;
    }
  }
  logstd_head_.Backward(cache.logstd_cache, dl, grads->logstd_head.data(),
                        tmp.data());
  kern::Axpy(1.0, tmp.data(), dtrunk_out.data(), cfg_.trunk_dim);

  std::vector<double> dpooled(cfg_.token_dim, 0.0);
  trunk_.Backward(cache.trunk_cache, dtrunk_out, grads->trunk.data(),
                  dpooled.data());

  const int visible_count = static_cast<int>(cache.visible.size());
  kern::Scale(dpooled.data(), 1.0 / visible_count, cfg_.token_dim);
  for (int v = 0; v < visible_count; ++v) {
    const int modality = cache.visible_modality[v];
    const Mlp& enc = encoders_[modality];
    std::vector<double> din(enc.input_dim(), 0.0);
    enc.Backward(cache.encoder_caches[v], dpooled,
                 grads->encoders[modality].data(),
                 dtoken_inputs ? din.data() : nullptr);
    if (dtoken_inputs) {
      (*dtoken_inputs)[cache.visible[v]] = std::move(din);
    }
  }
}

MaskedSetEncoder::Grads MaskedSetEncoder::MakeGrads() const {
  Grads g;
  for (const Mlp& e : encoders_) g.encoders.emplace_back(e.ParamCount(), 0.0);
  g.trunk.assign(trunk_.ParamCount(), 0.0);
  g.mean_head.assign(mean_head_.ParamCount(), 0.0);
  g.logstd_head.assign(logstd_head_.ParamCount(), 0.0);
  return g;
}

std::vector<double>* MaskedSetEncoder::param_block(int i) {
  const int ne = static_cast<int>(encoders_.size());
  if (i < ne) return &encoders_[i].params();
  if (i == ne) return &trunk_.params();
  if (i == ne + 1) return &mean_head_.params();
  return &logstd_head_.params();
}

const std::vector<double>* MaskedSetEncoder::param_block(int i) const {
  return const_cast<MaskedSetEncoder*>(this)->param_block(i);
}

std::string MaskedSetEncoder::param_block_name(int i) const {
  const int ne = static_cast<int>(encoders_.size());
  if (i < ne) return "enc_" + cfg_.modalities[i].name;
  if (i == ne) return "trunk";
  if (i == ne + 1) return "mean_head";
  return "logstd_head";
}

std::vector<double>* MaskedSetEncoder::grad_block(Grads& g, int i) const {
  const int ne = static_cast<int>(encoders_.size());
  if (i < ne) return &g.encoders[i];
  if (i == ne) return &g.trunk;
  if (i == ne + 1) return &g.mean_head;
  return &g.logstd_head;
}

}  // namespace mimic
