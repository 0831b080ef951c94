#include "glosshift/datasets.hpp"

#include <cctype>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "glosshift/errors.hpp"

namespace glosshift {

using nlohmann::json;

void LabeledSentence::check() const {
  if (tokens.size() != labels.size())
    throw LengthMismatch("sentence has " + std::to_string(tokens.size()) + " tokens but " +
                         std::to_string(labels.size()) + " labels");
}

void QAInstance::check() const {
  if (answer_start > answer_end || answer_end > context.size())
    throw SpanLost("answer span [" + std::to_string(answer_start) + ", " +
                   std::to_string(answer_end) + ") is outside the context of " +
                   std::to_string(context.size()) + " tokens");
  std::string joined;
  for (std::size_t i = answer_start; i < answer_end; ++i) {
    if (i > answer_start) joined.push_back(' ');
    joined += context.tokens[i];
  }
  if (joined != answer_text)
    throw SpanLost("answer span tokens '" + joined + "' do not reconstruct the answer text '" +
                   answer_text + "'");
}

ClassificationInstance transform_classification(const ClassificationInstance& inst,
                                                const TransformSpec& t,
                                                std::uint64_t instance_index) {
  ClassificationInstance out;
  out.label = inst.label;  // labels are untouched by construction
  out.sentences.reserve(inst.sentences.size());
  const std::uint64_t m = inst.sentences.size();
  for (std::uint64_t f = 0; f < m; ++f) {
    // sentences of the whole dataset are numbered flat, so parses and
    // per-sentence streams line up field by field
    const std::uint64_t flat = instance_index * m + f;
    out.sentences.push_back(transform_sentence_traced(inst.sentences[f], t, flat).sentence);
  }
  return out;
}

LabeledSentence transform_token_labels(const LabeledSentence& s, const TransformSpec& t,
                                       std::uint64_t index, bool* syntax_skipped) {
  s.check();
  const auto res = transform_sentence_traced(s.tokens, t, index);
  if (syntax_skipped) *syntax_skipped = res.syntax_skipped;

  LabeledSentence out;
  out.tokens = res.sentence;
  out.labels.resize(s.labels.size());
  for (std::size_t j = 0; j < res.order.size(); ++j) out.labels[j] = s.labels[res.order[j]];
  return out;
}

QAInstance transform_qa(const QAInstance& q, const TransformSpec& t, std::uint64_t index) {
  if (!t.span_safe())
    throw SpanUnsafeTransform("transformation '" + t.name() +
                              "' can scatter the answer span; only inv and translit are "
                              "span-safe");
  q.check();

  QAInstance out = q;
  for (TransformKind k : t.chain) {
    switch (k) {
      case TransformKind::Inversion: {
        const std::size_t n = out.context.size();
        out.context = invert(out.context);
        out.question = invert(out.question);
        const std::size_t start = n - out.answer_end;
        const std::size_t end = n - out.answer_start;
        out.answer_start = start;
        out.answer_end = end;
        break;
      }
      case TransformKind::Transliteration: {
        if (!t.translit)
          throw IoError("transformation '" + t.name() + "' needs a transliteration map");
        out.context = t.translit->apply(out.context);
        out.question = t.translit->apply(out.question);
        break;
      }
      default:
        throw SpanUnsafeTransform("transformation '" + t.name() + "' is not span-safe");
    }
  }
  std::string rebuilt;
  for (std::size_t i = out.answer_start; i < out.answer_end; ++i) {
    if (i > out.answer_start) rebuilt.push_back(' ');
    rebuilt += out.context.tokens[i];
  }
  out.answer_text = std::move(rebuilt);
  out.check();
  (void)index;
  return out;
}

QAInstance qa_from_char_offset(const std::string& context, const std::string& question,
                               const std::string& answer_text, std::size_t answer_char_start) {
  QAInstance q;
  q.question = parse_sentence(question);
  q.answer_text = answer_text;

  std::vector<std::size_t> begins;
  std::size_t i = 0;
  while (i < context.size()) {
    while (i < context.size() && std::isspace(static_cast<unsigned char>(context[i]))) ++i;
    std::size_t j = i;
    while (j < context.size() && !std::isspace(static_cast<unsigned char>(context[j]))) ++j;
    if (j > i) {
      begins.push_back(i);
      q.context.tokens.push_back(context.substr(i, j - i));
    }
    i = j;
  }

  std::size_t start_tok = begins.size();
  for (std::size_t k = 0; k < begins.size(); ++k) {
    if (begins[k] == answer_char_start) {
      start_tok = k;
      break;
    }
  }
  if (start_tok == begins.size())
    throw SpanLost("answer character offset " + std::to_string(answer_char_start) +
                   " does not start a token");

  std::string joined;
  for (std::size_t k = start_tok; k < q.context.size(); ++k) {
    if (k > start_tok) joined.push_back(' ');
    joined += q.context.tokens[k];
    if (joined == answer_text) {
      q.answer_start = start_tok;
      q.answer_end = k + 1;
      q.check();
      return q;
    }
    if (joined.size() > answer_text.size()) break;
  }
  throw SpanLost("answer text '" + answer_text + "' does not align with token boundaries");
}

namespace {

json parse_json_line(const std::string& line, std::size_t line_no, const std::string& what) {
  try {
    return json::parse(line);
  } catch (const json::exception& e) {
    throw IoError("bad JSON on line " + std::to_string(line_no) + " of '" + what +
                  "': " + e.what());
  }
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open dataset file '" + path.string() + "'");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write dataset file '" + path.string() + "'");
  return out;
}

template <typename F>
void for_each_jsonl(const std::filesystem::path& path, F&& fn) {
  auto in = open_in(path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    fn(parse_json_line(line, line_no, path.string()), line_no);
  }
}

}  // namespace

std::vector<ClassificationInstance> read_nli_jsonl(const std::filesystem::path& path) {
  std::vector<ClassificationInstance> ds;
  for_each_jsonl(path, [&](const json& j, std::size_t line_no) {
    try {
      ClassificationInstance inst;
      inst.sentences.push_back(parse_sentence(j.at("premise").get<std::string>()));
      inst.sentences.push_back(parse_sentence(j.at("hypothesis").get<std::string>()));
      inst.label = j.at("label").get<std::string>();
      ds.push_back(std::move(inst));
    } catch (const json::exception& e) {
      throw IoError("bad NLI record on line " + std::to_string(line_no) + " of '" +
                    path.string() + "': " + e.what());
    }
  });
  return ds;
}

void write_nli_jsonl(const std::vector<ClassificationInstance>& ds,
                     const std::filesystem::path& path) {
  auto out = open_out(path);
  for (const auto& inst : ds) {
    if (inst.sentences.size() != 2)
      throw IoError("NLI records need exactly premise and hypothesis sentences");
    json j;
    j["premise"] = to_line(inst.sentences[0]);
    j["hypothesis"] = to_line(inst.sentences[1]);
    j["label"] = inst.label;
    out << j.dump() << '\n';
  }
}

std::vector<LabeledSentence> read_token_jsonl(const std::filesystem::path& path) {
  std::vector<LabeledSentence> ds;
  for_each_jsonl(path, [&](const json& j, std::size_t line_no) {
    try {
      LabeledSentence s;
      s.tokens.tokens = j.at("tokens").get<std::vector<std::string>>();
      s.labels = j.at("labels").get<std::vector<std::string>>();
      s.check();
      ds.push_back(std::move(s));
    } catch (const json::exception& e) {
      throw IoError("bad token record on line " + std::to_string(line_no) + " of '" +
                    path.string() + "': " + e.what());
    }
  });
  return ds;
}

void write_token_jsonl(const std::vector<LabeledSentence>& ds,
                       const std::filesystem::path& path) {
  auto out = open_out(path);
  for (const auto& s : ds) {
    json j;
    j["tokens"] = s.tokens.tokens;
    j["labels"] = s.labels;
    out << j.dump() << '\n';
  }
}

std::vector<LabeledSentence> read_token_conll(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::vector<LabeledSentence> ds;
  LabeledSentence cur;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      if (!cur.tokens.empty()) ds.push_back(std::move(cur));
      cur = LabeledSentence{};
      continue;
    }
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw IoError("expected 'token<TAB>label' on line " + std::to_string(line_no) + " of '" +
                    path.string() + "'");
    cur.tokens.tokens.push_back(line.substr(0, tab));
    cur.labels.push_back(line.substr(tab + 1));
  }
  if (!cur.tokens.empty()) ds.push_back(std::move(cur));
  return ds;
}

void write_token_conll(const std::vector<LabeledSentence>& ds,
                       const std::filesystem::path& path) {
  auto out = open_out(path);
  for (const auto& s : ds) {
    for (std::size_t i = 0; i < s.tokens.size(); ++i)
      out << s.tokens.tokens[i] << '\t' << s.labels[i] << '\n';
    out << '\n';
  }
}

std::vector<QAInstance> read_qa_jsonl(const std::filesystem::path& path, std::size_t* skipped) {
  std::vector<QAInstance> ds;
  std::size_t failures = 0;
  for_each_jsonl(path, [&](const json& j, std::size_t line_no) {
    try {
      if (j.contains("answer_token_start")) {
        QAInstance q;
        q.context = parse_sentence(j.at("context").get<std::string>());
        q.question = parse_sentence(j.at("question").get<std::string>());
        q.answer_text = j.at("answer_text").get<std::string>();
        q.answer_start = j.at("answer_token_start").get<std::size_t>();
        q.answer_end = j.at("answer_token_end").get<std::size_t>();
        q.check();
        ds.push_back(std::move(q));
      } else {
        ds.push_back(qa_from_char_offset(j.at("context").get<std::string>(),
                                         j.at("question").get<std::string>(),
                                         j.at("answer_text").get<std::string>(),
                                         j.at("answer_char_start").get<std::size_t>()));
      }
    } catch (const json::exception& e) {
      throw IoError("bad QA record on line " + std::to_string(line_no) + " of '" +
                    path.string() + "': " + e.what());
    } catch (const SpanLost&) {
      if (skipped == nullptr) throw;
      ++failures;  // reported to the caller, never silently repaired
    }
  });
  if (skipped) *skipped = failures;
  return ds;
}

void write_qa_jsonl(const std::vector<QAInstance>& ds, const std::filesystem::path& path) {
  auto out = open_out(path);
  for (const auto& q : ds) {
    json j;
    j["context"] = to_line(q.context);
    j["question"] = to_line(q.question);
    j["answer_text"] = q.answer_text;
    j["answer_token_start"] = q.answer_start;
    j["answer_token_end"] = q.answer_end;
    out << j.dump() << '\n';
  }
}

std::vector<ClassificationInstance> transform_classification_dataset(
    const std::vector<ClassificationInstance>& ds, const TransformSpec& t,
    DatasetStats* stats) {
  std::vector<ClassificationInstance> out;
  out.reserve(ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) {
    try {
      out.push_back(transform_classification(ds[i], t, i));
    } catch (Error& e) {
      e.add_context("instance " + std::to_string(i));
      throw;
    }
  }
  if (stats) stats->instances += ds.size();
  return out;
}

std::vector<LabeledSentence> transform_token_dataset(const std::vector<LabeledSentence>& ds,
                                                     const TransformSpec& t,
                                                     DatasetStats* stats) {
  std::vector<LabeledSentence> out;
  out.reserve(ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) {
    try {
      bool skipped = false;
      out.push_back(transform_token_labels(ds[i], t, i, &skipped));
      if (stats && skipped) ++stats->syntax_skipped;
    } catch (Error& e) {
      e.add_context("instance " + std::to_string(i));
      throw;
    }
  }
  if (stats) stats->instances += ds.size();
  return out;
}

std::vector<QAInstance> transform_qa_dataset(const std::vector<QAInstance>& ds,
                                             const TransformSpec& t, DatasetStats* stats) {
  std::vector<QAInstance> out;
  out.reserve(ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) {
    try {
      out.push_back(transform_qa(ds[i], t, i));
    } catch (Error& e) {
      e.add_context("instance " + std::to_string(i));
      throw;
    }
  }
  if (stats) stats->instances += ds.size();
  return out;
}

}  // namespace glosshift
