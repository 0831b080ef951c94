#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "glosshift/text.hpp"

namespace glosshift {

// Byte-pair-encoding vocabulary: the initial character alphabet plus
// the result of each learned merge. Merges never cross word
// boundaries; the end-of-word marker is appended to the word-final
// character, so "low" starts as ["l", "o", "w</w>"].
struct SubwordVocab {
  std::vector<std::pair<std::string, std::string>> merges;  // in training order
  std::unordered_set<std::string> vocab;                    // alphabet + merge results
  std::size_t target_size = 0;
  std::string marker = "</w>";

  std::size_t size() const { return vocab.size(); }

  // File format: "glosshift-bpe v1 <target_size> <marker>", then one
  // merge pair per line, tab separated, in training order.
  void save(const std::filesystem::path& path) const;
  void save(std::ostream& out) const;
  static SubwordVocab load(const std::filesystem::path& path);
  static SubwordVocab load(std::istream& in, const std::string& what);
};

// Greedy most-frequent-pair training until the vocabulary reaches
// target_size or no pair occurs at least twice. Frequency ties break
// lexicographically on the pair. Throws TargetTooSmall when the target
// cannot hold the initial alphabet.
SubwordVocab train_bpe(const Corpus& c, std::size_t target_size);

// Applies the learned merges to words; caches per word type, so one
// instance is not safe to share across threads (use one per worker).
// Unknown characters pass through as singleton symbols.
class BpeEncoder {
 public:
  explicit BpeEncoder(const SubwordVocab& vocab);

  std::vector<std::string> encode_word(const std::string& word) const;
  std::vector<std::string> encode(const Sentence& s) const;

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<std::string, std::string>& p) const {
      const std::size_t h1 = std::hash<std::string>{}(p.first);
      const std::size_t h2 = std::hash<std::string>{}(p.second);
      return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
    }
  };

  const SubwordVocab& vocab_;
  std::unordered_map<std::pair<std::string, std::string>, std::size_t, PairHash> rank_;
  mutable std::unordered_map<std::string, std::vector<std::string>> cache_;
};

struct OverlapReport {
  std::size_t e1_size = 0;
  std::size_t e2_size = 0;
  std::size_t intersection_size = 0;
  std::size_t union_size = 0;
  double overlap = 0.0;  // |E1 ∩ E2| / |E1 ∪ E2|
};

// Jaccard index of the sub-word type sets observed when encoding the
// two corpora with a shared vocabulary.
OverlapReport subword_overlap(const Corpus& c1, const Corpus& c2, const SubwordVocab& v);

}  // namespace glosshift
