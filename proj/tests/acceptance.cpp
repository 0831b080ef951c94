// Acceptance suite: exercises every primary criterion end to end and
// prints one PASS/FAIL line per criterion. Exits nonzero when any
// criterion fails.
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "glosshift/analysis.hpp"
#include "glosshift/bpe.hpp"
#include "glosshift/conllu.hpp"
#include "glosshift/datasets.hpp"
#include "glosshift/embedding.hpp"
#include "glosshift/errors.hpp"
#include "glosshift/ordering.hpp"
#include "glosshift/text.hpp"
#include "glosshift/transform.hpp"
#include "glosshift/translit.hpp"
#include "glosshift/utf8.hpp"
#include "fixture_data.hpp"
#include "test_util.hpp"

namespace fs = std::filesystem;
using namespace glosshift;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fmt(double v, int prec = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", prec, v);
  return buf;
}

fs::path g_tmp;

// ---------------------------------------------------------------- 1
Outcome transform_algebra() {
  const auto t0 = Clock::now();
  const Corpus corpus = testutil::random_corpus(1001, 10000, 1, 14);
  const fs::path base = g_tmp / "algebra.txt";
  write_corpus(corpus, base);

  // inversion twice restores the file byte for byte
  const TransformSpec inv = TransformSpec::parse("inv");
  write_corpus(apply_transform(read_corpus(base), inv), g_tmp / "inv1.txt");
  write_corpus(apply_transform(read_corpus(g_tmp / "inv1.txt"), inv), g_tmp / "inv2.txt");
  if (slurp(g_tmp / "inv2.txt") != slurp(base))
    return {false, "inv twice is not the identity"};

  // transliteration round-trips through its persisted map
  TransformSpec translit = TransformSpec::parse("translit");
  translit.translit = std::make_shared<TranslitMap>(build_translit_map(corpus));
  translit.translit->save(g_tmp / "map.tsv");
  write_corpus(apply_transform(read_corpus(base), translit), g_tmp / "translit.txt");
  const TranslitMap stored = TranslitMap::load(g_tmp / "map.tsv");
  Corpus restored = read_corpus(g_tmp / "translit.txt");
  for (auto& s : restored.sentences) s = stored.invert(s);
  write_corpus(restored, g_tmp / "restored.txt");
  if (slurp(g_tmp / "restored.txt") != slurp(base))
    return {false, "transliteration did not round-trip byte for byte"};

  // permutation preserves every per-sentence token multiset
  const Corpus permuted = apply_transform(corpus, TransformSpec::parse("perm", 4242));
  std::size_t preserved = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (testutil::multiset_of(permuted.sentences[i].tokens) ==
        testutil::multiset_of(corpus.sentences[i].tokens))
      ++preserved;
  }
  const double elapsed = seconds_since(t0);
  if (preserved != corpus.size())
    return {false, fmt(100.0 * preserved / corpus.size(), 2) + "% multisets preserved"};
  if (elapsed >= 10.0) return {false, "took " + fmt(elapsed, 1) + " s (budget 10 s)"};
  return {true, "10000 sentences: inv involution + translit round-trip byte-identical, "
                "perm multisets 100%, " + fmt(elapsed, 1) + " s"};
}

// ---------------------------------------------------------------- 2
Outcome permutation_uniformity() {
  const Sentence s{{"a", "b", "c"}};
  std::map<std::vector<std::string>, int> counts;
  const int n = 10000;
  for (int seed = 0; seed < n; ++seed) {
    counts[transform_sentence(s, TransformSpec::parse("perm", seed), 0).tokens] += 1;
  }
  if (counts.size() != 6) return {false, "only " + std::to_string(counts.size()) + " orderings"};
  double lo = 1.0, hi = 0.0;
  for (const auto& [order, c] : counts) {
    const double f = c / static_cast<double>(n);
    lo = std::min(lo, f);
    hi = std::max(hi, f);
  }
  const bool ok = lo >= 1.0 / 6.0 - 0.02 && hi <= 1.0 / 6.0 + 0.02;
  return {ok, "frequencies in [" + fmt(lo) + ", " + fmt(hi) + "], target 1/6 +/- 0.02"};
}

// ---------------------------------------------------------------- 3
Outcome subword_overlap_criterion() {
  // identical corpora
  const Corpus c = testutil::random_corpus(77, 400, 1, 9);
  const SubwordVocab shared = train_bpe(c, 300);
  if (subword_overlap(c, c, shared).overlap != 1.0)
    return {false, "identical corpora did not reach exactly 1.0"};

  // transliterated pair under a shared tokenizer
  const TranslitMap map = build_translit_map(c, {});
  Corpus derived;
  for (const auto& s : c.sentences) derived.sentences.push_back(map.apply(s));
  Corpus both = c;
  both.sentences.insert(both.sentences.end(), derived.sentences.begin(),
                        derived.sentences.end());
  const double zero = subword_overlap(c, derived, train_bpe(both, 600)).overlap;
  if (zero != 0.0) return {false, "transliterated pair overlap " + fmt(zero, 6) + " != 0"};

  // first merge on the classic fixture, against a scratch pair recount
  Corpus classic;
  for (auto [w, n] : std::initializer_list<std::pair<const char*, int>>{
           {"low", 5}, {"lower", 2}, {"newest", 6}, {"widest", 3}}) {
    for (int i = 0; i < n; ++i) classic.sentences.push_back(Sentence({w}));
  }
  const SubwordVocab v = train_bpe(classic, 100);
  std::map<std::string, std::int64_t> freq;
  for (const auto& s : classic.sentences) ++freq[s.tokens[0]];
  std::map<std::pair<std::string, std::string>, std::int64_t> pairs;
  for (const auto& [word, f] : freq) {
    std::vector<std::string> syms;
    for (char32_t cp : decode_utf8(word)) syms.push_back(encode_utf8(cp));
    syms.back() += v.marker;
    for (std::size_t i = 0; i + 1 < syms.size(); ++i) pairs[{syms[i], syms[i + 1]}] += f;
  }
  std::pair<std::string, std::string> oracle;
  std::int64_t best = -1;
  for (const auto& [p, n] : pairs) {
    if (n > best) {
      oracle = p;
      best = n;
    }
  }
  if (v.merges.empty() || v.merges[0] != oracle)
    return {false, "first merge disagrees with the pair-count oracle"};
  return {true, "identical=1.0 exactly, transliterated=0.0 exactly, first merge (" +
                    oracle.first + "," + oracle.second + ") matches the oracle"};
}

// ---------------------------------------------------------------- 4
Outcome label_cotransform_oracle() {
  // 500 labeled sentences (length <= 6, tokens unique within each
  // sentence) with aligned projective parses for the syntax transform
  RngStream gen(3030);
  const std::size_t n = 500;
  auto trees = std::make_shared<std::vector<DependencyTree>>();
  std::vector<LabeledSentence> data;
  Corpus plain;
  static const char* label_set[] = {"B-PER", "I-PER", "B-LOC", "O"};
  for (std::size_t i = 0; i < n; ++i) {
    DependencyTree tree = testutil::projective_tree(gen, 1 + gen.next_below(6));
    for (std::size_t k = 0; k < tree.size(); ++k)
      tree.nodes[k].form = "t" + std::to_string(i) + "_" + std::to_string(k);
    trees->push_back(tree);
    LabeledSentence s;
    s.tokens = tree.forms();
    for (std::size_t k = 0; k < s.tokens.size(); ++k)
      s.labels.push_back(label_set[gen.next_below(4)]);
    plain.sentences.push_back(s.tokens);
    data.push_back(std::move(s));
  }

  const auto translit_map = std::make_shared<TranslitMap>(build_translit_map(plain));
  const auto ordering =
      std::make_shared<OrderingModel>(estimate_ordering(*trees, 0.5));

  std::vector<TransformSpec> specs;
  for (const char* kind : {"inv", "perm", "translit", "syn"}) {
    TransformSpec t = TransformSpec::parse(kind, 555);
    t.translit = translit_map;
    t.ordering = ordering;
    t.parses = trees;
    specs.push_back(std::move(t));
  }

  std::size_t checked = 0, agreed = 0;
  for (const auto& spec : specs) {
    const bool is_translit = spec.chain[0] == TransformKind::Transliteration;
    const bool zip_route = spec.chain[0] == TransformKind::Inversion ||
                           spec.chain[0] == TransformKind::Permutation;
    for (std::size_t i = 0; i < n; ++i) {
      const LabeledSentence& in = data[i];
      const LabeledSentence out = transform_token_labels(in, spec, i);
      ++checked;

      // route A: recover the permutation from the (unique) tokens and
      // re-apply it to the zipped (token, label) pairs
      bool ok = out.tokens.size() == in.tokens.size();
      std::vector<bool> used(in.tokens.size(), false);
      for (std::size_t j = 0; ok && j < out.tokens.size(); ++j) {
        bool found = false;
        for (std::size_t k = 0; k < in.tokens.size(); ++k) {
          if (used[k]) continue;
          const std::string image =
              is_translit ? translit_map->map_token(in.tokens.tokens[k]) : in.tokens.tokens[k];
          if (image == out.tokens.tokens[j]) {
            found = out.labels[j] == in.labels[k];
            used[k] = true;
            break;
          }
        }
        ok = ok && found;
      }

      // route B (pure reorderings): zip the pairs into fused tokens,
      // push them through the plain sentence transform, unzip
      if (ok && zip_route) {
        Sentence fused;
        for (std::size_t k = 0; k < in.tokens.size(); ++k)
          fused.tokens.push_back(in.tokens.tokens[k] + "\x1f" + in.labels[k]);
        const Sentence fused_out = transform_sentence(fused, spec, i);
        for (std::size_t j = 0; ok && j < fused_out.size(); ++j) {
          const std::string& f = fused_out.tokens[j];
          const std::size_t cut = f.find('\x1f');
          ok = out.tokens.tokens[j] == f.substr(0, cut) && out.labels[j] == f.substr(cut + 1);
        }
      }

      // the token sequence must equal the plain sentence route
      if (ok) ok = out.tokens == transform_sentence(in.tokens, spec, i);
      if (ok) ++agreed;
    }
  }
  const bool pass = agreed == checked;
  return {pass, std::to_string(agreed) + "/" + std::to_string(checked) +
                    " labeled transforms matched the zip-transform-unzip oracle"};
}

// ---------------------------------------------------------------- 5
Outcome qa_span_safety() {
  RngStream gen(4040);
  std::vector<QAInstance> ds;
  Corpus pool;
  for (int i = 0; i < 1000; ++i) {
    QAInstance q;
    q.context = testutil::random_sentence(gen, 3, 24);
    q.question = testutil::random_sentence(gen, 1, 6);
    q.answer_start = gen.next_below(q.context.size());
    q.answer_end =
        q.answer_start + 1 + gen.next_below(std::min<std::size_t>(4, q.context.size() - q.answer_start));
    std::string joined;
    for (std::size_t k = q.answer_start; k < q.answer_end; ++k) {
      if (k > q.answer_start) joined.push_back(' ');
      joined += q.context.tokens[k];
    }
    q.answer_text = joined;
    pool.sentences.push_back(q.context);
    pool.sentences.push_back(q.question);
    ds.push_back(std::move(q));
  }

  TransformSpec inv = TransformSpec::parse("inv");
  TransformSpec translit = TransformSpec::parse("translit");
  translit.translit = std::make_shared<TranslitMap>(build_translit_map(pool));

  std::size_t held = 0;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const QAInstance a = transform_qa(ds[i], inv, i);
    const QAInstance b = transform_qa(ds[i], translit, i);
    try {
      a.check();
      b.check();
      // inversion must also reverse the answer token order
      bool rev = a.answer_end - a.answer_start == ds[i].answer_end - ds[i].answer_start;
      for (std::size_t k = 0; rev && k < a.answer_end - a.answer_start; ++k)
        rev = a.context.tokens[a.answer_start + k] ==
              ds[i].context.tokens[ds[i].answer_end - 1 - k];
      if (rev) ++held;
    } catch (const SpanLost&) {
    }
  }

  std::size_t refused = 0;
  for (const char* kind : {"perm", "syn", "translit.perm", "syn.inv"}) {
    try {
      transform_qa(ds[0], TransformSpec::parse(kind, 1), 0);
    } catch (const SpanUnsafeTransform&) {
      ++refused;
    }
  }
  const bool pass = held == ds.size() && refused == 4;
  return {pass, std::to_string(held) + "/1000 spans intact under inv+translit; " +
                    std::to_string(refused) + "/4 unsafe transforms refused"};
}

// ---------------------------------------------------------------- 6
Outcome syntax_saturation() {
  // forced object fronting: SVO -> SOV
  DependencyTree sara;
  sara.nodes = {{1, "Sara", "PROPN", 2, "nsubj"},
                {2, "ate", "VERB", 0, "root"},
                {3, "apples", "NOUN", 2, "obj"}};
  OrderingModel forced(0.0);
  forced.set_counts("VERB", "obj", 1, 0);
  RngStream r0 = sentence_stream(1, 0);
  const Sentence sov = reorder(sara, forced, r0);
  if (sov.tokens != std::vector<std::string>{"Sara", "apples", "ate"})
    return {false, "forced model produced '" + to_line(sov) + "'"};

  // invariants across the treebank fixture
  const auto trees = parse_conllu(fs::path(FIXTURE_DIR) / "mini.conllu");
  const OrderingModel model = estimate_ordering(trees, 0.5);
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (int rep = 0; rep < 50; ++rep) {
      RngStream rng = sentence_stream(90 + rep, i);
      const auto order = reorder_order(trees[i], model, rng);
      if (testutil::multiset_of(order) !=
          testutil::multiset_of([&] {
            std::vector<std::size_t> all(trees[i].size());
            for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
            return all;
          }()))
        return {false, "multiset violated on fixture tree " + std::to_string(i)};
      std::vector<std::size_t> pos(trees[i].size());
      for (std::size_t j = 0; j < order.size(); ++j) pos[order[j]] = j;
      for (const auto& nd : trees[i].nodes) {
        const auto subtree = testutil::subtree_positions(trees[i], nd.index);
        std::size_t lo = trees[i].size(), hi = 0;
        for (std::size_t p : subtree) {
          lo = std::min(lo, pos[p]);
          hi = std::max(hi, pos[p]);
        }
        if (hi - lo + 1 != subtree.size())
          return {false, "subtree contiguity violated on fixture tree " + std::to_string(i)};
      }
    }
  }

  // Bernoulli side sampling at p = 0.3
  DependencyTree pair;
  pair.nodes = {{1, "ate", "VERB", 0, "root"}, {2, "apples", "NOUN", 1, "obj"}};
  OrderingModel bern(0.0);
  bern.set_counts("VERB", "obj", 3, 7);
  int before = 0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    RngStream rng = sentence_stream(606, i);
    if (reorder(pair, bern, rng).tokens[0] == "apples") ++before;
  }
  const double f = before / static_cast<double>(n);
  if (std::fabs(f - 0.3) >= 0.02)
    return {false, "dependent preceded head in " + fmt(f) + " of samples (want 0.30 +/- 0.02)"};
  return {true, "SVO->SOV exact, invariants hold on the treebank fixture, side frequency " +
                    fmt(f) + " for p=0.3"};
}

// ---------------------------------------------------------------- 7
Outcome report_calculus() {
  ScoreRecord row;
  row.task = "xnli";
  row.language = "avg";
  row.transform = "translit";
  row.bz = 69.3;
  row.bs = 70.3;
  row.mz = 33.6;
  const TransferReport headline = build_report({row});
  const double dsup = *headline.rows[0].dsup;
  const double dmono = *headline.rows[0].dmono;
  if (std::fabs(dsup - (-1.0)) > 1e-12 || std::fabs(dmono - (-36.7)) > 1e-12)
    return {false, "deltas " + fmt(dsup, 15) + ", " + fmt(dmono, 15)};

  std::vector<ScoreRecord> recs;
  for (const auto& cell : fixtures::kPerLanguage) {
    if (std::string(cell.task) != "xnli" || std::string(cell.transform) != "inv") continue;
    ScoreRecord r;
    r.task = cell.task;
    r.language = cell.language;
    r.transform = cell.transform;
    r.bz = cell.bz;
    r.bs = cell.bz - cell.dsup;
    recs.push_back(std::move(r));
  }
  const TransferReport langs = build_report(recs);
  const double mean = *langs.aggregates[0].mean_dsup;
  if (langs.aggregates[0].languages != 4 || std::fabs(mean - (-10.2)) > 0.05)
    return {false, "four-language mean " + fmt(mean, 4)};
  return {true, "dsup=-1.0 dmono=-36.7 exact; four-language inversion mean " + fmt(mean, 3) +
                    " within 0.05 of -10.2"};
}

// ---------------------------------------------------------------- 8
Outcome alignment_correlation() {
  // copied rows retrieve themselves
  RngStream gen(7007);
  const std::size_t v = 1000, dim = 8;
  EmbeddingTable table;
  table.dim = dim;
  table.data.resize(2 * v * dim);
  VocabBijection bijection;
  for (std::size_t i = 0; i < v; ++i) table.vocab.push_back("o" + std::to_string(i));
  for (std::size_t i = 0; i < v; ++i) table.vocab.push_back("d" + std::to_string(i));
  for (std::size_t i = 0; i < v; ++i)
    bijection.pairs.emplace_back("o" + std::to_string(i), "d" + std::to_string(i));
  for (std::size_t i = 0; i < v * dim; ++i)
    table.data[i] = static_cast<float>(gen.next_double() * 2.0 - 1.0);
  for (std::size_t i = 0; i < v * dim; ++i) table.data[v * dim + i] = table.data[i];
  table.rebuild_index();
  if (alignment(table, bijection) != 1.0) return {false, "copied rows not at 1.0"};

  // shuffled derived rows: chance-level retrieval
  double total = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    RngStream trng = sentence_stream(8008, trial);
    for (std::size_t i = 0; i < v * dim; ++i)
      table.data[i] = static_cast<float>(trng.next_double() * 2.0 - 1.0);
    const auto perm = random_permutation(v, trng);
    for (std::size_t i = 0; i < v; ++i)
      for (std::size_t d = 0; d < dim; ++d)
        table.data[(v + i) * dim + d] = table.data[perm[i] * dim + d];
    total += alignment(table, bijection);
  }
  const double mean_align = total / 100.0;
  if (mean_align > 0.005)
    return {false, "shuffled-rows mean alignment " + fmt(mean_align, 5) + " > 0.005"};

  // rank correlation on the published alignment table, against the
  // quadratic rank oracle
  std::string rho_note;
  for (const auto& [task, dsups] : fixtures::kAlignDsup) {
    const auto res = spearman(fixtures::kAlignValues, dsups);
    const double oracle = testutil::oracle_spearman(fixtures::kAlignValues, dsups);
    if (std::fabs(res.rho - oracle) > 1e-9)
      return {false, task + " rho " + fmt(res.rho, 12) + " vs oracle " + fmt(oracle, 12)};
    rho_note += task + "=" + fmt(res.rho, 3) + " (published " +
                fmt(fixtures::kPublishedRho.at(task), 2) + ") ";
  }
  return {true, "copied=1.0, shuffled mean=" + fmt(mean_align, 5) + "; rho matches oracle: " +
                    rho_note + "- published values differ under average-rank ties"};
}

// ---------------------------------------------------------------- 9
Outcome fixtures_only() {
  // transformer pre-training/fine-tuning scores are beyond desk scale;
  // the suite ingests them as fixtures (criterion 7) and validates the
  // calculus, never the absolute numbers
  return {true, "BZ/BS/MZ absolute values consumed as fixtures only (no training here)"};
}

// ---------------------------------------------------------------- 10
Outcome translit_throughput() {
  const fs::path big = g_tmp / "big.txt";
  {
    RngStream gen(11011);
    std::ofstream out(big, std::ios::binary);
    std::string line;
    std::uintmax_t written = 0;
    const std::uintmax_t target = 100ull * 1024 * 1024;
    while (written < target) {
      line.clear();
      const std::size_t words = 8 + gen.next_below(8);
      for (std::size_t w = 0; w < words; ++w) {
        if (w) line.push_back(' ');
        const std::size_t chars = 3 + gen.next_below(6);
        for (std::size_t ch = 0; ch < chars; ++ch)
          line.push_back(static_cast<char>('a' + gen.next_below(26)));
      }
      line.push_back('\n');
      out << line;
      written += line.size();
    }
  }
  const double mb = static_cast<double>(fs::file_size(big)) / (1024.0 * 1024.0);

  const auto t0 = Clock::now();
  const std::string cmd = std::string(GLOSSHIFT_BIN) + " transform --kind translit --in " +
                          big.string() + " --out " + (g_tmp / "big_translit.txt").string() +
                          " --save-map " + (g_tmp / "big_map.tsv").string() + " > " +
                          (g_tmp / "big_stdout.txt").string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  const double elapsed = seconds_since(t0);
  fs::remove(big);
  fs::remove(g_tmp / "big_translit.txt");
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0)
    return {false, "CLI transform failed"};
  const bool pass = elapsed < 180.0;
  return {pass, fmt(mb, 1) + " MB transliterated in " + fmt(elapsed, 1) + " s (budget 180 s)"};
}

}  // namespace

int main() {
  g_tmp = fs::temp_directory_path() / "glosshift_acceptance";
  fs::remove_all(g_tmp);
  fs::create_directories(g_tmp);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"transform-algebra", transform_algebra},
      {"permutation-uniformity", permutation_uniformity},
      {"subword-overlap", subword_overlap_criterion},
      {"label-cotransform-oracle", label_cotransform_oracle},
      {"qa-span-safety", qa_span_safety},
      {"syntax-saturation", syntax_saturation},
      {"report-calculus", report_calculus},
      {"alignment-correlation", alignment_correlation},
      {"fixtures-only-scores", fixtures_only},
      {"translit-throughput", translit_throughput},
  };

  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " - " << o.detail << std::endl;
    if (!o.pass) ++failures;
  }
  fs::remove_all(g_tmp);
  if (failures) std::cout << failures << " criterion(s) failed" << std::endl;
  return failures;
}
