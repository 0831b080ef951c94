#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glosshift/embedding.hpp"
#include "glosshift/translit.hpp"

namespace glosshift {

// One-to-one token map between the original and the derived
// vocabulary. Serialized as TSV "orig<TAB>deriv" lines.
struct VocabBijection {
  std::vector<std::pair<std::string, std::string>> pairs;

  void check() const;  // injectivity on both sides

  void save(const std::filesystem::path& path) const;
  static VocabBijection load(const std::filesystem::path& path);

  // Token-level bijection generated by a character map; special tokens
  // (which map to themselves) are excluded.
  static VocabBijection from_translit(const std::vector<std::string>& tokens,
                                      const TranslitMap& map);
};

enum class AlignMetric { Cosine, Euclidean };

AlignMetric parse_align_metric(const std::string& name);

// Fraction of original-side tokens whose nearest neighbour among the
// derived-side embedding rows is their bijective counterpart. Throws
// MissingToken when bijection tokens are absent from the table.
double alignment(const EmbeddingTable& table, const VocabBijection& bijection,
                 AlignMetric metric = AlignMetric::Cosine);

struct SpearmanResult {
  double rho = 0.0;
  double p_value = 1.0;
};

// Rank correlation with average ranks for ties; the p-value is exact
// (all n! permutations) for n <= 8 and a Student-t approximation
// otherwise. Throws LengthMismatch / DegenerateInput.
SpearmanResult spearman(const std::vector<double>& x, const std::vector<double>& y);

struct ScoreRecord {
  std::string task;
  std::string language;
  std::string transform;
  std::string setting;
  std::optional<double> bz;  // bilingual zero-shot
  std::optional<double> bs;  // bilingual supervised on derived
  std::optional<double> mz;  // monolingual zero-shot baseline
};

// CSV with header task,language,transform,setting,bz,bs,mz; empty
// cells are missing scores.
std::vector<ScoreRecord> read_scores_csv(const std::filesystem::path& path);
std::vector<ScoreRecord> read_scores_csv(std::istream& in, const std::string& what);

struct ReportRow {
  ScoreRecord record;
  std::optional<double> dsup;   // BZ - BS
  std::optional<double> dmono;  // MZ - BS
  bool strong = false;          // dsup >= threshold
};

struct ReportAggregate {
  std::string task;
  std::string transform;
  std::string setting;
  std::size_t languages = 0;
  std::optional<double> mean_dsup;
  std::optional<double> mean_dmono;
  std::optional<double> mean_bz;
  bool strong = false;
};

struct TransferReport {
  std::vector<ReportRow> rows;
  std::vector<ReportAggregate> aggregates;  // unweighted mean over languages
  double strong_threshold = -2.0;

  std::string to_csv() const;
  std::string to_markdown() const;  // tasks x transforms, like the headline table
};

// Per-row deltas plus per-(task, transform, setting) language averages.
// Rows that cannot support either delta raise MissingOperand.
TransferReport build_report(const std::vector<ScoreRecord>& records,
                            double strong_threshold = -2.0);

struct TaskCorrelation {
  std::string task;
  std::size_t points = 0;
  double rho = 0.0;
  double p_value = 1.0;
};

struct ScatterPoint {
  std::string task;
  std::string setting;
  double alignment = 0.0;
  double dsup = 0.0;
};

struct CorrelationSummary {
  std::vector<TaskCorrelation> per_task;
  std::vector<ScatterPoint> scatter;

  // TSV blocks per task: "setting<TAB>alignment<TAB>dsup"
  void write_scatter(std::ostream& out) const;
};

// Joins report aggregates with per-setting alignment fractions and
// rank-correlates alignment against dsup for every task with at least
// three shared settings (InsufficientOverlap otherwise).
CorrelationSummary correlate_report(const TransferReport& report,
                                    const std::map<std::string, double>& alignments);

// TSV "setting<TAB>alignment" per line.
std::map<std::string, double> read_alignments_tsv(const std::filesystem::path& path);

}  // namespace glosshift
