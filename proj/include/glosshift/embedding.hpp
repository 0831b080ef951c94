#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "glosshift/text.hpp"

namespace glosshift {

// Dense word embeddings, row per token. Serialized as word2vec text:
// first line "count dim", then "token v1 ... vd" per line.
struct EmbeddingTable {
  std::vector<std::string> vocab;
  std::size_t dim = 0;
  std::vector<float> data;  // row-major, vocab.size() x dim

  std::size_t rows() const { return vocab.size(); }

  std::span<const float> row(std::size_t i) const { return {data.data() + i * dim, dim}; }
  std::span<float> row(std::size_t i) { return {data.data() + i * dim, dim}; }

  std::optional<std::size_t> find(std::string_view token) const;
  void rebuild_index();

  void save_word2vec(const std::filesystem::path& path) const;
  void save_word2vec(std::ostream& out) const;
  static EmbeddingTable load_word2vec(const std::filesystem::path& path);
  static EmbeddingTable load_word2vec(std::istream& in, const std::string& what);

 private:
  std::unordered_map<std::string, std::size_t> index_;
};

struct SgnsParams {
  std::size_t dim = 64;
  std::size_t window = 5;      // max context offset; actual offset is sampled per position
  std::size_t negatives = 5;
  std::size_t epochs = 5;
  std::size_t min_count = 5;   // rarer words are dropped from the vocabulary
  double learning_rate = 0.025;
  std::uint64_t seed = 1;
  unsigned threads = 1;  // > 1 is lock-free hogwild and not deterministic
};

struct SgnsStats {
  std::vector<double> epoch_loss;  // mean negative log-likelihood per epoch
  std::size_t vocab_size = 0;
  std::uint64_t train_tokens = 0;
};

// Skip-gram with negative sampling over a unigram^0.75 noise
// distribution, linear learning-rate decay, dot products clamped to
// ±10 before the sigmoid. Single-threaded runs are bit-reproducible
// for a fixed seed.
EmbeddingTable train_sgns(const Corpus& c, const SgnsParams& params, SgnsStats* stats = nullptr);

}  // namespace glosshift
