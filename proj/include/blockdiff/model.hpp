#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blockdiff/matrix.hpp"
#include "blockdiff/rng.hpp"
#include "blockdiff/vocab.hpp"

namespace blockdiff {

struct ModelConfig {
    int vocab_size = 66;
    int d_model = 48;
    int n_layers = 3;
    int n_heads = 4;
    int max_seq_len = 448;
    uint64_t seed = 1;

    int d_head() const { return d_model / n_heads; }
    int d_ff() const { return 4 * d_model; }
    void validate() const;

    bool operator==(const ModelConfig&) const = default;
};

struct TensorInfo {
    std::string name;
    int rows = 0;
    int cols = 0;
    size_t offset = 0;
};

// All weights in one flat buffer with a fixed, documented tensor order:
//   tok_emb, pos_emb,
//   per layer l: ln1_g, ln1_b, wq, bq, wk, bk, wv, bv, wo, bo,
//                ln2_g, ln2_b, w1, b1, w2, b2,
//   lnf_g, lnf_b, wout, bout
// The flat layout is what the optimizer, the gradient check, and the
// checkpoint file all operate on.
struct Parameters {
    ModelConfig config;
    std::vector<double> data;
    std::vector<TensorInfo> tensors;

    const TensorInfo& tensor(const std::string& name) const;
    double* tensor_data(const TensorInfo& t) { return data.data() + t.offset; }
    const double* tensor_data(const TensorInfo& t) const { return data.data() + t.offset; }

    bool all_finite() const;
};

// Deterministic in (config, seed); output projection zero-initialized so a
// fresh model produces uniform logits.
Parameters init_params(const ModelConfig& config);

// Gradient buffer with the same flat layout.
std::vector<double> zero_grads(const Parameters& params);

void save_checkpoint(const Parameters& params, const std::string& path);
Parameters load_checkpoint(const std::string& path);

enum class AttentionMode { Causal, BlockBidirectional };

// Per-layer key/value rows for committed positions. Single-owner; concurrency
// only via fork().
struct KVCache {
    int d_model = 0;
    int capacity = 0;
    int committed_len = 0;
    std::vector<Matrix> k; // per layer, capacity x d_model
    std::vector<Matrix> v;

    static KVCache empty(const ModelConfig& config);
    KVCache fork() const { return *this; }
};

// Key/value rows produced by one forward pass over a block, committable once
// the block content is final.
struct CandidateKV {
    int context_len = 0; // cache length the pass was computed against
    int block_len = 0;
    std::vector<Matrix> k; // per layer, block_len x d_model
    std::vector<Matrix> v;
};

struct BlockOutput {
    Matrix logits; // block_len x vocab
    CandidateKV kv;
};

// One forward pass over `block_tokens` given the committed cache. Does not
// mutate the cache. Positions are absolute: block row i sits at
// cache.committed_len + i.
BlockOutput forward_block(const Parameters& params, const KVCache& cache,
                          const std::vector<TokenId>& block_tokens, AttentionMode mode);

// Appends the first `len` rows of the candidate (len = -1 commits all).
// Throws StaleCandidate if the candidate was computed against a different
// context length.
void commit_block(KVCache& cache, const CandidateKV& candidate, int len = -1);

// --- full-sequence forward with an explicit attention plan (training and
// --- reference-oracle path; inference uses forward_block)

// Attention allowance per query row: union of up to two half-open row
// intervals. Every query must be able to attend to itself.
struct AttnSpan {
    int b0 = 0, e0 = 0;
    int b1 = 0, e1 = 0; // second interval, empty when b1 == e1
};

struct AttnPlan {
    std::vector<AttnSpan> rows;
};

struct LayerTrace {
    Matrix h_in;
    std::vector<double> ln1_mean, ln1_inv;
    Matrix ln1_out, q, k, v;
    std::vector<Matrix> probs; // per head, S x S (zero outside the plan)
    Matrix ctx;
    Matrix h_mid;
    std::vector<double> ln2_mean, ln2_inv;
    Matrix ln2_out, mlp_pre, mlp_act;
};

struct ForwardTrace {
    Matrix h_final; // after last residual
    std::vector<double> lnf_mean, lnf_inv;
    Matrix lnf_out;
    std::vector<LayerTrace> layers;
    std::vector<TokenId> tokens;
    std::vector<int> posids;
};

// Logits for every row. `trace` may be null when no backward pass follows.
Matrix forward_full(const Parameters& params, const std::vector<TokenId>& tokens,
                    const std::vector<int>& posids, const AttnPlan& plan, ForwardTrace* trace);

// Backpropagates d(logits) through the traced forward, accumulating into
// `grads` (flat layout of zero_grads).
void backward_full(const Parameters& params, const ForwardTrace& trace, const AttnPlan& plan,
                   const Matrix& dlogits, std::vector<double>& grads);

// Greedy / tempered sampling over an allowed token set. temperature = 0 is
// argmax; ties break toward the lowest token id.
TokenId argmax_token(const double* logits, int vocab_size, const TokenSet& allowed);
TokenId sample_token(const double* logits, int vocab_size, double temperature, Rng& rng,
                     const TokenSet& allowed);

} // namespace blockdiff
