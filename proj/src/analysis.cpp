#include "glosshift/analysis.hpp"

#include <algorithm>
#include <boost/math/distributions/students_t.hpp>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numeric>
#include <sstream>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "glosshift/errors.hpp"

namespace glosshift {

void VocabBijection::check() const {
  std::unordered_set<std::string> lhs, rhs;
  for (const auto& [a, b] : pairs) {
    if (!lhs.insert(a).second)
      throw Error("bijection maps original token '" + a + "' twice");
    if (!rhs.insert(b).second)
      throw Error("bijection maps two tokens onto derived token '" + b + "'");
  }
}

void VocabBijection::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write bijection '" + path.string() + "'");
  for (const auto& [a, b] : pairs) out << a << '\t' << b << '\n';
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

VocabBijection VocabBijection::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open bijection '" + path.string() + "'");
  VocabBijection b;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw IoError("expected 'orig<TAB>deriv' on line " + std::to_string(line_no) + " of '" +
                    path.string() + "'");
    b.pairs.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  b.check();
  return b;
}

VocabBijection VocabBijection::from_translit(const std::vector<std::string>& tokens,
                                             const TranslitMap& map) {
  VocabBijection b;
  std::unordered_set<std::string> seen;
  for (const auto& tok : tokens) {
    if (map.is_special(tok)) continue;
    if (!seen.insert(tok).second) continue;
    b.pairs.emplace_back(tok, map.map_token(tok));
  }
  b.check();
  return b;
}

AlignMetric parse_align_metric(const std::string& name) {
  if (name == "cosine") return AlignMetric::Cosine;
  if (name == "euclidean") return AlignMetric::Euclidean;
  throw IoError("unknown metric '" + name + "' (expected cosine|euclidean)");
}

double alignment(const EmbeddingTable& table, const VocabBijection& bijection,
                 AlignMetric metric) {
  if (bijection.pairs.empty()) throw Error("empty bijection");

  std::vector<std::size_t> orig_rows(bijection.pairs.size());
  std::vector<std::size_t> deriv_rows(bijection.pairs.size());
  std::vector<std::string> missing;
  for (std::size_t i = 0; i < bijection.pairs.size(); ++i) {
    const auto& [o, d] = bijection.pairs[i];
    const auto oi = table.find(o);
    const auto di = table.find(d);
    if (!oi) missing.push_back(o);
    if (!di) missing.push_back(d);
    if (oi) orig_rows[i] = *oi;
    if (di) deriv_rows[i] = *di;
  }
  if (!missing.empty()) throw MissingToken(std::move(missing));

  const std::size_t dim = table.dim;
  // candidate set is the derived vocabulary only: retrieval is across
  // languages, not within
  std::vector<double> deriv_norm(deriv_rows.size(), 0.0);
  if (metric == AlignMetric::Cosine) {
    for (std::size_t j = 0; j < deriv_rows.size(); ++j) {
      const auto r = table.row(deriv_rows[j]);
      double n = 0.0;
      for (float x : r) n += static_cast<double>(x) * x;
      deriv_norm[j] = std::sqrt(n);
    }
  }

  std::size_t hits = 0;
  for (std::size_t i = 0; i < orig_rows.size(); ++i) {
    const auto q = table.row(orig_rows[i]);
    double best = -std::numeric_limits<double>::infinity();
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < deriv_rows.size(); ++j) {
      const auto r = table.row(deriv_rows[j]);
      double score;
      if (metric == AlignMetric::Cosine) {
        double dot = 0.0;
        for (std::size_t d = 0; d < dim; ++d)
          dot += static_cast<double>(q[d]) * static_cast<double>(r[d]);
        score = deriv_norm[j] > 0.0 ? dot / deriv_norm[j] : -1e300;
      } else {
        double dist = 0.0;
        for (std::size_t d = 0; d < dim; ++d) {
          const double diff = static_cast<double>(q[d]) - static_cast<double>(r[d]);
          dist += diff * diff;
        }
        score = -dist;
      }
      if (score > best) {  // ties resolve to the first candidate
        best = score;
        best_j = j;
      }
    }
    if (best_j == i) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(orig_rows.size());
}

namespace {

// average ranks, 1-based; ties share the mean of their positions
std::vector<double> average_ranks(const std::vector<double>& v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });

  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && v[idx[j + 1]] == v[idx[i]]) ++j;
    const double shared = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = shared;
    i = j + 1;
  }
  return ranks;
}

double pearson(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t n = a.size();
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / static_cast<double>(n);
  const double mb = std::accumulate(b.begin(), b.end(), 0.0) / static_cast<double>(n);
  double cov = 0.0, va = 0.0, vb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    cov += (a[i] - ma) * (b[i] - mb);
    va += (a[i] - ma) * (a[i] - ma);
    vb += (b[i] - mb) * (b[i] - mb);
  }
  if (va == 0.0 || vb == 0.0) throw DegenerateInput("constant input has no rank correlation");
  return cov / std::sqrt(va * vb);
}

double exact_permutation_p(const std::vector<double>& rx, std::vector<double> ry,
                           double observed) {
  std::sort(ry.begin(), ry.end());
  std::size_t at_least = 0, total = 0;
  const double eps = 1e-12;
  do {
    ++total;
    if (std::fabs(pearson(rx, ry)) >= std::fabs(observed) - eps) ++at_least;
  } while (std::next_permutation(ry.begin(), ry.end()));
  return static_cast<double>(at_least) / static_cast<double>(total);
}

}  // namespace

SpearmanResult spearman(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size())
    throw LengthMismatch("rank correlation needs equal-length inputs, got " +
                         std::to_string(x.size()) + " and " + std::to_string(y.size()));
  if (x.size() < 3)
    throw LengthMismatch("rank correlation needs at least 3 points, got " +
                         std::to_string(x.size()));

  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  SpearmanResult res;
  res.rho = pearson(rx, ry);

  const std::size_t n = x.size();
  if (n <= 8) {
    res.p_value = exact_permutation_p(rx, ry, res.rho);
  } else {
    const double r2 = res.rho * res.rho;
    if (r2 >= 1.0) {
      res.p_value = 0.0;
    } else {
      const double t = res.rho * std::sqrt(static_cast<double>(n - 2) / (1.0 - r2));
      boost::math::students_t_distribution<double> dist(static_cast<double>(n - 2));
      res.p_value = 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(t)));
    }
  }
  return res;
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t comma = line.find(',', pos);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(pos));
      return fields;
    }
    fields.push_back(line.substr(pos, comma - pos));
    pos = comma + 1;
  }
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::optional<double> parse_score(const std::string& field, std::size_t line_no,
                                  const std::string& what) {
  const std::string t = trim(field);
  if (t.empty()) return std::nullopt;
  try {
    std::size_t used = 0;
    const double v = std::stod(t, &used);
    if (used != t.size() || !std::isfinite(v)) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception&) {
    throw IoError("bad score '" + t + "' on line " + std::to_string(line_no) + " of '" + what +
                  "'");
  }
}

}  // namespace

std::vector<ScoreRecord> read_scores_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open score file '" + path.string() + "'");
  return read_scores_csv(in, path.string());
}

std::vector<ScoreRecord> read_scores_csv(std::istream& in, const std::string& what) {
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty score file '" + what + "'");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (trim(line) != "task,language,transform,setting,bz,bs,mz")
    throw IoError("score file '" + what +
                  "' must start with header task,language,transform,setting,bz,bs,mz");

  std::vector<ScoreRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != 7)
      throw IoError("expected 7 comma-separated fields on line " + std::to_string(line_no) +
                    " of '" + what + "'");
    ScoreRecord r;
    r.task = trim(fields[0]);
    r.language = trim(fields[1]);
    r.transform = trim(fields[2]);
    r.setting = trim(fields[3]);
    r.bz = parse_score(fields[4], line_no, what);
    r.bs = parse_score(fields[5], line_no, what);
    r.mz = parse_score(fields[6], line_no, what);
    records.push_back(std::move(r));
  }
  return records;
}

TransferReport build_report(const std::vector<ScoreRecord>& records, double strong_threshold) {
  TransferReport report;
  report.strong_threshold = strong_threshold;
  report.rows.reserve(records.size());

  for (std::size_t i = 0; i < records.size(); ++i) {
    const ScoreRecord& r = records[i];
    ReportRow row;
    row.record = r;
    if (!r.bs.has_value())
      throw MissingOperand("record " + std::to_string(i) + " (" + r.task + "/" + r.language +
                           "/" + r.transform + ") has no BS score");
    if (!r.bz.has_value() && !r.mz.has_value())
      throw MissingOperand("record " + std::to_string(i) + " (" + r.task + "/" + r.language +
                           "/" + r.transform + ") has neither BZ nor MZ");
    if (r.bz) row.dsup = *r.bz - *r.bs;
    if (r.mz) row.dmono = *r.mz - *r.bs;
    row.strong = row.dsup.has_value() && *row.dsup >= strong_threshold;
    report.rows.push_back(std::move(row));
  }

  // unweighted mean over languages, grouped by (task, transform, setting)
  struct Acc {
    std::size_t n = 0;
    double dsup = 0.0;
    std::size_t n_dsup = 0;
    double dmono = 0.0;
    std::size_t n_dmono = 0;
    double bz = 0.0;
    std::size_t n_bz = 0;
  };
  std::map<std::tuple<std::string, std::string, std::string>, Acc> groups;
  for (const auto& row : report.rows) {
    auto& acc = groups[{row.record.task, row.record.transform, row.record.setting}];
    ++acc.n;
    if (row.dsup) {
      acc.dsup += *row.dsup;
      ++acc.n_dsup;
    }
    if (row.dmono) {
      acc.dmono += *row.dmono;
      ++acc.n_dmono;
    }
    if (row.record.bz) {
      acc.bz += *row.record.bz;
      ++acc.n_bz;
    }
  }
  for (const auto& [key, acc] : groups) {
    ReportAggregate agg;
    agg.task = std::get<0>(key);
    agg.transform = std::get<1>(key);
    agg.setting = std::get<2>(key);
    agg.languages = acc.n;
    if (acc.n_dsup) agg.mean_dsup = acc.dsup / static_cast<double>(acc.n_dsup);
    if (acc.n_dmono) agg.mean_dmono = acc.dmono / static_cast<double>(acc.n_dmono);
    if (acc.n_bz) agg.mean_bz = acc.bz / static_cast<double>(acc.n_bz);
    agg.strong = agg.mean_dsup.has_value() && *agg.mean_dsup >= strong_threshold;
    report.aggregates.push_back(std::move(agg));
  }
  return report;
}

namespace {

std::string fmt(std::optional<double> v, int prec = 2) {
  if (!v) return "";
  std::ostringstream os;
  os << std::fixed << std::setprecision(prec) << *v;
  return os.str();
}

}  // namespace

std::string TransferReport::to_csv() const {
  std::ostringstream os;
  os << "task,language,transform,setting,bz,bs,mz,dsup,dmono,strong\n";
  for (const auto& row : rows) {
    const auto& r = row.record;
    os << r.task << ',' << r.language << ',' << r.transform << ',' << r.setting << ','
       << fmt(r.bz) << ',' << fmt(r.bs) << ',' << fmt(r.mz) << ',' << fmt(row.dsup) << ','
       << fmt(row.dmono) << ',' << (row.strong ? "*" : "") << '\n';
  }
  os << "\n# aggregates (mean over languages)\n";
  os << "task,transform,setting,languages,mean_dsup,mean_dmono,mean_bz,strong\n";
  for (const auto& a : aggregates) {
    os << a.task << ',' << a.transform << ',' << a.setting << ',' << a.languages << ','
       << fmt(a.mean_dsup) << ',' << fmt(a.mean_dmono) << ',' << fmt(a.mean_bz) << ','
       << (a.strong ? "*" : "") << '\n';
  }
  return os.str();
}

std::string TransferReport::to_markdown() const {
  // tasks as rows; transform/setting groups as three-column blocks
  std::vector<std::string> tasks;
  std::vector<std::pair<std::string, std::string>> cols;  // (transform, setting)
  for (const auto& a : aggregates) {
    if (std::find(tasks.begin(), tasks.end(), a.task) == tasks.end()) tasks.push_back(a.task);
    const std::pair<std::string, std::string> col{a.transform, a.setting};
    if (std::find(cols.begin(), cols.end(), col) == cols.end()) cols.push_back(col);
  }

  std::ostringstream os;
  os << "| Task |";
  for (const auto& [tr, st] : cols) {
    std::string label = tr;
    if (!st.empty()) label += " (" + st + ")";
    os << ' ' << label << " Δsup | Δmono | BZ |";
  }
  os << '\n';
  os << "| --- |";
  for (std::size_t i = 0; i < cols.size(); ++i) os << " --- | --- | --- |";
  os << '\n';
  for (const auto& task : tasks) {
    os << "| " << task << " |";
    for (const auto& [tr, st] : cols) {
      const ReportAggregate* found = nullptr;
      for (const auto& a : aggregates) {
        if (a.task == task && a.transform == tr && a.setting == st) {
          found = &a;
          break;
        }
      }
      if (!found) {
        os << " — | — | — |";
      } else {
        os << ' ' << fmt(found->mean_dsup) << (found->strong ? "\\*" : "") << " | "
           << fmt(found->mean_dmono) << " | " << fmt(found->mean_bz) << " |";
      }
    }
    os << '\n';
  }
  return os.str();
}

CorrelationSummary correlate_report(const TransferReport& report,
                                    const std::map<std::string, double>& alignments) {
  CorrelationSummary summary;
  std::vector<std::string> tasks;
  for (const auto& a : report.aggregates)
    if (std::find(tasks.begin(), tasks.end(), a.task) == tasks.end()) tasks.push_back(a.task);

  for (const auto& task : tasks) {
    std::vector<double> align_vals, dsup_vals;
    for (const auto& a : report.aggregates) {
      if (a.task != task || !a.mean_dsup.has_value()) continue;
      const std::string key = a.setting.empty() ? a.transform : a.setting;
      const auto it = alignments.find(key);
      if (it == alignments.end()) continue;
      align_vals.push_back(it->second);
      dsup_vals.push_back(*a.mean_dsup);
      summary.scatter.push_back({task, key, it->second, *a.mean_dsup});
    }
    if (align_vals.size() < 3)
      throw InsufficientOverlap("task '" + task + "' shares only " +
                                std::to_string(align_vals.size()) +
                                " settings with the alignment table (need 3)");
    const auto sp = spearman(align_vals, dsup_vals);
    summary.per_task.push_back({task, align_vals.size(), sp.rho, sp.p_value});
  }
  return summary;
}

void CorrelationSummary::write_scatter(std::ostream& out) const {
  std::string cur;
  for (const auto& p : scatter) {
    if (p.task != cur) {
      cur = p.task;
      out << "# task: " << cur << '\n';
    }
    out << p.setting << '\t' << p.alignment << '\t' << p.dsup << '\n';
  }
}

std::map<std::string, double> read_alignments_tsv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open alignment table '" + path.string() + "'");
  std::map<std::string, double> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw IoError("expected 'setting<TAB>alignment' on line " + std::to_string(line_no) +
                    " of '" + path.string() + "'");
    try {
      out[line.substr(0, tab)] = std::stod(line.substr(tab + 1));
    } catch (const std::exception&) {
      throw IoError("bad alignment value on line " + std::to_string(line_no) + " of '" +
                    path.string() + "'");
    }
  }
  return out;
}

}  // namespace glosshift
