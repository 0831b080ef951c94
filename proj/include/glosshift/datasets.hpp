#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "glosshift/rng.hpp"
#include "glosshift/text.hpp"
#include "glosshift/transform.hpp"

namespace glosshift {

// (s_1, ..., s_m, label): every sentence transforms independently, the
// label never changes.
struct ClassificationInstance {
  std::vector<Sentence> sentences;
  std::string label;
  bool operator==(const ClassificationInstance&) const = default;
};

// Token sequence with one label per token (NER / POS).
struct LabeledSentence {
  Sentence tokens;
  std::vector<std::string> labels;

  void check() const;  // LengthMismatch unless |tokens| == |labels|
  bool operator==(const LabeledSentence&) const = default;
};

// Extractive QA instance. The answer is a contiguous token span of the
// context: tokens[start, end) joined by single spaces == answer_text.
struct QAInstance {
  Sentence context;
  Sentence question;
  std::string answer_text;
  std::size_t answer_start = 0;  // token index, inclusive
  std::size_t answer_end = 0;    // token index, exclusive

  void check() const;  // SpanLost unless the span invariant holds
  bool operator==(const QAInstance&) const = default;
};

ClassificationInstance transform_classification(const ClassificationInstance& inst,
                                                const TransformSpec& t,
                                                std::uint64_t instance_index);

// Labels ride with their tokens: the label at output position j is the
// input label of the token that moved there (transliteration keeps all
// positions fixed). Uses the same per-sentence streams as the plain
// sentence path, so tokens come out identical.
LabeledSentence transform_token_labels(const LabeledSentence& s, const TransformSpec& t,
                                       std::uint64_t index, bool* syntax_skipped = nullptr);

// Only span-safe transforms (inversion, transliteration) are accepted;
// permutation and syntax would scatter the answer span and are refused
// with SpanUnsafeTransform. The span is recomputed so the invariant
// holds on the output.
QAInstance transform_qa(const QAInstance& q, const TransformSpec& t, std::uint64_t index);

// Whitespace-tokenizes a context given a character offset of the
// answer; fails (SpanLost) when the answer does not align with token
// boundaries.
QAInstance qa_from_char_offset(const std::string& context, const std::string& question,
                               const std::string& answer_text, std::size_t answer_char_start);

// ---- dataset file I/O (JSON Lines; NER/POS also CoNLL columns) ----

std::vector<ClassificationInstance> read_nli_jsonl(const std::filesystem::path& path);
void write_nli_jsonl(const std::vector<ClassificationInstance>& ds,
                     const std::filesystem::path& path);

std::vector<LabeledSentence> read_token_jsonl(const std::filesystem::path& path);
void write_token_jsonl(const std::vector<LabeledSentence>& ds,
                       const std::filesystem::path& path);
std::vector<LabeledSentence> read_token_conll(const std::filesystem::path& path);
void write_token_conll(const std::vector<LabeledSentence>& ds,
                       const std::filesystem::path& path);

// Accepts records with token spans, or with "answer_char_start" which
// is converted on ingest; conversion failures in `skipped` are counted,
// not fixed.
std::vector<QAInstance> read_qa_jsonl(const std::filesystem::path& path,
                                      std::size_t* skipped = nullptr);
void write_qa_jsonl(const std::vector<QAInstance>& ds, const std::filesystem::path& path);

struct DatasetStats {
  std::uint64_t instances = 0;
  std::uint64_t syntax_skipped = 0;
};

std::vector<ClassificationInstance> transform_classification_dataset(
    const std::vector<ClassificationInstance>& ds, const TransformSpec& t,
    DatasetStats* stats = nullptr);
std::vector<LabeledSentence> transform_token_dataset(const std::vector<LabeledSentence>& ds,
                                                     const TransformSpec& t,
                                                     DatasetStats* stats = nullptr);
std::vector<QAInstance> transform_qa_dataset(const std::vector<QAInstance>& ds,
                                             const TransformSpec& t,
                                             DatasetStats* stats = nullptr);

}  // namespace glosshift
