#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glosshift/conllu.hpp"
#include "glosshift/ordering.hpp"
#include "glosshift/rng.hpp"
#include "glosshift/text.hpp"
#include "glosshift/translit.hpp"

namespace glosshift {

enum class TransformKind { Inversion, Permutation, Transliteration, Syntax };

const char* kind_name(TransformKind k);                  // "inv", "perm", ...
TransformKind parse_kind(const std::string& name);

// A transformation or a composition of transformations. A dotted spec
// string composes right-to-left: "translit.inv" applies inv first,
// translit second.
struct TransformSpec {
  // in application order: chain.front() runs first
  std::vector<TransformKind> chain;
  std::uint64_t seed = 0;

  std::shared_ptr<const TranslitMap> translit;             // for Transliteration
  std::shared_ptr<const OrderingModel> ordering;           // for Syntax
  std::shared_ptr<const std::vector<DependencyTree>> parses;  // per-sentence trees
  ReorderOptions reorder_opts;

  static TransformSpec parse(const std::string& spec, std::uint64_t seed = 0);

  bool has(TransformKind k) const;
  bool needs_rng() const;  // Permutation or Syntax present
  // Inversion/Transliteration only: token positions of a contiguous
  // span stay reconstructible (footnote-safe for QA).
  bool span_safe() const;
  std::string name() const;  // dotted, right-to-left, e.g. "translit.inv"
};

Sentence invert(const Sentence& s);
Sentence permute(const Sentence& s, RngStream& rng);
Sentence transliterate(const Sentence& s, const TranslitMap& m);

// Order produced by one reordering step: out[j] = input index of the
// token placed at position j.
std::vector<std::size_t> inversion_order(std::size_t n);
std::vector<std::size_t> permutation_order(std::size_t n, RngStream& rng);

struct TransformedSentence {
  Sentence sentence;
  // composed over the whole chain: out.sentence.tokens[j] came from
  // input position order[j] (transliteration does not move positions)
  std::vector<std::size_t> order;
  bool syntax_skipped = false;        // no tree / tree-token mismatch
  bool syntax_nonprojective = false;  // input tree was linearized projectively anyway
};

// Applies the full chain to the sentence at `index` of its corpus.
// Every stochastic step draws from its own stream hash(seed, index,
// kind), independent of its chain position, so applying [a, b] equals
// applying b to the corpus and then a with the same seed.
TransformedSentence transform_sentence_traced(const Sentence& s, const TransformSpec& t,
                                              std::uint64_t index);
Sentence transform_sentence(const Sentence& s, const TransformSpec& t, std::uint64_t index);

struct TransformStats {
  std::uint64_t sentences = 0;
  std::uint64_t syntax_skipped = 0;
  std::uint64_t syntax_nonprojective = 0;
};

// Per-sentence application; |output| == |input|. `threads` > 1 splits
// the corpus across workers; per-sentence streams keep the result
// identical to the serial one. Errors carry the sentence index.
// `index_base` offsets the per-sentence indices, so a corpus processed
// in chunks transforms exactly like one processed whole.
Corpus apply_transform(const Corpus& c, const TransformSpec& t, unsigned threads = 1,
                       TransformStats* stats = nullptr, std::uint64_t index_base = 0);

enum class MixtureMode { Parallel, NonParallelSame, NonParallelDiff };

MixtureMode parse_mixture_mode(const std::string& name);
const char* mixture_mode_name(MixtureMode m);

// Bilingual pre-training pair (original side, derived side):
//   parallel         -> (c1, T(c1))
//   nonparallel_same -> disjoint halves of c1: (A, T(B))
//   nonparallel_diff -> (c1, T(c2)); c2 required
// Both sides end up the same size (the longer one is truncated).
std::pair<Corpus, Corpus> build_bilingual_mixture(const Corpus& c1, const Corpus* c2,
                                                  const TransformSpec& t, MixtureMode mode,
                                                  unsigned threads = 1,
                                                  TransformStats* stats = nullptr);

}  // namespace glosshift
