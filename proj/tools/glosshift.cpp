// glosshift: derive synthetic counterpart languages from text corpora,
// co-transform task datasets, and compute transfer-analysis metrics.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "glosshift/analysis.hpp"
#include "glosshift/bpe.hpp"
#include "glosshift/conllu.hpp"
#include "glosshift/datasets.hpp"
#include "glosshift/embedding.hpp"
#include "glosshift/errors.hpp"
#include "glosshift/manifest.hpp"
#include "glosshift/ordering.hpp"
#include "glosshift/text.hpp"
#include "glosshift/transform.hpp"
#include "glosshift/translit.hpp"

namespace gs = glosshift;

namespace {

std::string g_command_line;

unsigned default_threads() {
  if (const char* env = std::getenv("GLOSSHIFT_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

// flags shared by every subcommand that applies a TransformSpec
struct TransformFlags {
  std::string kind;
  std::optional<std::uint64_t> seed;
  std::string map_file;        // load a frozen transliteration map
  std::string save_map_file;   // persist the map built from the input
  std::vector<std::string> specials = gs::kDefaultSpecialTokens;
  std::string ordering_file;
  std::string conllu_file;
  std::vector<std::string> heads;
  bool include_punct = false;

  void attach(CLI::App* cmd, bool with_conllu = true) {
    cmd->add_option("--kind", kind,
                    "transformation: inv|perm|translit|syn or a dotted composition "
                    "(\"a.b\" applies b first)")
        ->required();
    cmd->add_option("--seed", seed, "RNG seed (required for perm/syn)");
    cmd->add_option("--map", map_file, "transliteration map to load");
    cmd->add_option("--save-map", save_map_file, "write the discovered transliteration map");
    cmd->add_option("--special", specials, "special tokens exempt from transliteration")
        ->delimiter(',');
    cmd->add_option("--ordering", ordering_file, "ordering model file (for syn)");
    if (with_conllu)
      cmd->add_option("--conllu", conllu_file, "CoNLL-U parses aligned with the input (for syn)");
    cmd->add_option("--heads", heads, "head UPOS tags whose dependents are re-ordered")
        ->delimiter(',');
    cmd->add_flag("--include-punct", include_punct, "also re-order punct dependents");
  }

  // `discover` feeds the corpus that will be transliterated when no map
  // file was given.
  gs::TransformSpec build(gs::RunManifest& manifest,
                          const std::function<void(gs::TranslitMapBuilder&)>& discover) const {
    gs::TransformSpec spec = gs::TransformSpec::parse(kind, seed.value_or(0));
    if (spec.needs_rng() && !seed)
      throw gs::IoError("--seed is required for randomized transformations (" + kind + ")");

    if (spec.has(gs::TransformKind::Transliteration)) {
      gs::TranslitMap map;
      if (!map_file.empty()) {
        map = gs::TranslitMap::load(map_file);
        manifest.add_input(map_file);
      } else {
        gs::TranslitMapBuilder builder(specials);
        discover(builder);
        map = builder.build();
      }
      if (!save_map_file.empty()) {
        map.save(save_map_file);
        manifest.outputs.push_back(save_map_file);
      }
      spec.translit = std::make_shared<gs::TranslitMap>(std::move(map));
    }
    if (spec.has(gs::TransformKind::Syntax)) {
      if (ordering_file.empty())
        throw gs::IoError("--ordering is required for the syn transformation");
      if (conllu_file.empty())
        throw gs::IoError("--conllu is required for the syn transformation");
      spec.ordering = std::make_shared<gs::OrderingModel>(gs::OrderingModel::load(ordering_file));
      manifest.add_input(ordering_file);
      spec.parses = std::make_shared<std::vector<gs::DependencyTree>>(
          gs::parse_conllu(std::filesystem::path(conllu_file)));
      manifest.add_input(conllu_file);
      if (!heads.empty())
        spec.reorder_opts.heads_filter = std::set<std::string>(heads.begin(), heads.end());
      spec.reorder_opts.include_punct = include_punct;
    }
    manifest.seed = seed;
    return spec;
  }
};

void cmd_transform(const TransformFlags& flags, const std::string& in_file,
                   const std::string& out_file, bool invert_map, unsigned threads) {
  gs::RunManifest manifest;
  manifest.command_line = g_command_line;
  manifest.add_input(in_file);

  if (invert_map) {
    if (flags.kind != "translit" || flags.map_file.empty())
      throw gs::IoError("--invert needs --kind translit and a --map file");
    const gs::TranslitMap map = gs::TranslitMap::load(flags.map_file);
    manifest.add_input(flags.map_file);
    gs::Corpus corpus = gs::read_corpus(in_file);
    for (auto& s : corpus.sentences) s = map.invert(s);
    gs::write_corpus(corpus, out_file);
    manifest.outputs.push_back(out_file);
    manifest.write_next_to(out_file);
    std::cout << "sentences=" << corpus.size() << "\nout=" << out_file << "\n";
    return;
  }

  gs::TransformSpec spec = flags.build(manifest, [&](gs::TranslitMapBuilder& builder) {
    std::ifstream in(in_file, std::ios::binary);
    if (!in) throw gs::IoError("cannot open corpus file '" + in_file + "'");
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      builder.add(gs::parse_sentence(line));
    }
  });

  std::ifstream in(in_file, std::ios::binary);
  if (!in) throw gs::IoError("cannot open corpus file '" + in_file + "'");
  std::ofstream out(out_file, std::ios::binary);
  if (!out) throw gs::IoError("cannot write corpus file '" + out_file + "'");

  // stream in chunks so memory stays bounded; per-sentence streams are
  // keyed by the global line index, so the chunking (and the thread
  // count) cannot change the output
  constexpr std::size_t kChunk = 32768;
  gs::TransformStats stats;
  std::string line;
  std::uint64_t base = 0;
  bool more = true;
  while (more) {
    gs::Corpus chunk;
    chunk.sentences.reserve(kChunk);
    while (chunk.sentences.size() < kChunk && (more = bool(std::getline(in, line)))) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      chunk.sentences.push_back(gs::parse_sentence(line));
    }
    if (chunk.sentences.empty()) break;
    const gs::Corpus done = gs::apply_transform(chunk, spec, threads, &stats, base);
    for (const auto& s : done.sentences) out << gs::to_line(s) << '\n';
    base += chunk.size();
  }
  out.flush();
  if (!out) throw gs::IoError("write failed for '" + out_file + "'");

  manifest.outputs.push_back(out_file);
  manifest.write_next_to(out_file);
  std::cout << "sentences=" << stats.sentences << '\n';
  if (spec.has(gs::TransformKind::Syntax))
    std::cout << "syntax_skipped=" << stats.syntax_skipped << '\n';
  std::cout << "out=" << out_file << '\n';
}

void cmd_mix(const TransformFlags& flags, const std::string& c1_file,
             const std::string& c2_file, const std::string& mode_name,
             const std::string& out1_file, const std::string& out2_file, unsigned threads) {
  const gs::MixtureMode mode = gs::parse_mixture_mode(mode_name);
  gs::RunManifest manifest;
  manifest.command_line = g_command_line;
  manifest.add_input(c1_file);

  const gs::Corpus c1 = gs::read_corpus(c1_file);
  std::optional<gs::Corpus> c2;
  if (!c2_file.empty()) {
    c2 = gs::read_corpus(c2_file);
    manifest.add_input(c2_file);
  } else if (mode == gs::MixtureMode::NonParallelDiff) {
    throw gs::MissingSecondCorpus("mode nonparallel_diff needs --c2");
  }

  gs::TransformSpec spec = flags.build(manifest, [&](gs::TranslitMapBuilder& builder) {
    // discover over the side that gets transformed
    switch (mode) {
      case gs::MixtureMode::Parallel: builder.add(c1); break;
      case gs::MixtureMode::NonParallelSame: builder.add(c1); break;
      case gs::MixtureMode::NonParallelDiff: builder.add(*c2); break;
    }
  });

  gs::TransformStats stats;
  auto [orig, deriv] =
      gs::build_bilingual_mixture(c1, c2 ? &*c2 : nullptr, spec, mode, threads, &stats);
  gs::write_corpus(orig, out1_file);
  gs::write_corpus(deriv, out2_file);
  manifest.outputs.push_back(out1_file);
  manifest.outputs.push_back(out2_file);
  manifest.write_next_to(out1_file);

  std::cout << "mode=" << mode_name << "\noriginal_sentences=" << orig.size()
            << "\nderived_sentences=" << deriv.size() << "\nout1=" << out1_file
            << "\nout2=" << out2_file << '\n';
}

void cmd_bpe(const std::vector<std::string>& in_files, std::size_t size,
             const std::string& out_file) {
  gs::RunManifest manifest;
  manifest.command_line = g_command_line;

  gs::Corpus combined;
  combined.source_id = "bpe-train";
  for (const auto& f : in_files) {
    manifest.add_input(f);
    gs::Corpus c = gs::read_corpus(f);
    combined.sentences.insert(combined.sentences.end(),
                              std::make_move_iterator(c.sentences.begin()),
                              std::make_move_iterator(c.sentences.end()));
  }
  const gs::SubwordVocab vocab = gs::train_bpe(combined, size);
  vocab.save(out_file);
  manifest.outputs.push_back(out_file);
  manifest.write_next_to(out_file);

  std::cout << "vocab=" << vocab.size() << "\nmerges=" << vocab.merges.size()
            << "\nout=" << out_file << '\n';
}

void cmd_overlap(const std::string& c1_file, const std::string& c2_file,
                 const std::string& vocab_file) {
  const gs::SubwordVocab vocab = gs::SubwordVocab::load(vocab_file);
  const gs::Corpus c1 = gs::read_corpus(c1_file);
  const gs::Corpus c2 = gs::read_corpus(c2_file);
  const gs::OverlapReport r = gs::subword_overlap(c1, c2, vocab);

  std::cout << "e1=" << r.e1_size << "\ne2=" << r.e2_size
            << "\nintersection=" << r.intersection_size << "\nunion=" << r.union_size << '\n';
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", r.overlap);
  std::cout << "overlap=" << buf << '\n';
}

void cmd_syntax_estimate(const std::string& treebank_file, const std::string& out_file,
                         double smoothing) {
  gs::RunManifest manifest;
  manifest.command_line = g_command_line;
  manifest.add_input(treebank_file);

  const auto trees = gs::parse_conllu(std::filesystem::path(treebank_file));
  const gs::OrderingModel model = gs::estimate_ordering(trees, smoothing);
  model.save(out_file);
  manifest.outputs.push_back(out_file);
  manifest.write_next_to(out_file);

  std::cout << "trees=" << trees.size() << "\npairs=" << model.counts().size()
            << "\nout=" << out_file << '\n';
}

void cmd_dataset(const TransformFlags& flags, const std::string& task,
                 const std::string& in_file, const std::string& out_file,
                 const std::string& format) {
  gs::RunManifest manifest;
  manifest.command_line = g_command_line;
  manifest.add_input(in_file);
  gs::DatasetStats stats;

  if (task == "nli") {
    const auto ds = gs::read_nli_jsonl(in_file);
    gs::TransformSpec spec = flags.build(manifest, [&](gs::TranslitMapBuilder& b) {
      for (const auto& inst : ds)
        for (const auto& s : inst.sentences) b.add(s);
    });
    const auto out = gs::transform_classification_dataset(ds, spec, &stats);
    gs::write_nli_jsonl(out, out_file);
  } else if (task == "ner" || task == "pos") {
    const auto ds = format == "conll" ? gs::read_token_conll(in_file)
                                      : gs::read_token_jsonl(in_file);
    gs::TransformSpec spec = flags.build(manifest, [&](gs::TranslitMapBuilder& b) {
      for (const auto& s : ds) b.add(s.tokens);
    });
    const auto out = gs::transform_token_dataset(ds, spec, &stats);
    if (format == "conll")
      gs::write_token_conll(out, out_file);
    else
      gs::write_token_jsonl(out, out_file);
  } else if (task == "qa") {
    std::size_t conversion_skipped = 0;
    const auto ds = gs::read_qa_jsonl(in_file, &conversion_skipped);
    if (conversion_skipped)
      std::cerr << "warning: " << conversion_skipped
                << " instance(s) had answers off token boundaries and were skipped\n";
    gs::TransformSpec spec = flags.build(manifest, [&](gs::TranslitMapBuilder& b) {
      for (const auto& q : ds) {
        b.add(q.context);
        b.add(q.question);
      }
    });
    const auto out = gs::transform_qa_dataset(ds, spec, &stats);
    gs::write_qa_jsonl(out, out_file);
  } else {
    throw gs::IoError("unknown task '" + task + "' (expected nli|ner|pos|qa)");
  }

  manifest.outputs.push_back(out_file);
  manifest.write_next_to(out_file);
  std::cout << "instances=" << stats.instances << '\n';
  if (stats.syntax_skipped) std::cout << "syntax_skipped=" << stats.syntax_skipped << '\n';
  std::cout << "out=" << out_file << '\n';
}

void cmd_sgns(const std::string& in_file, const std::string& out_file,
              const gs::SgnsParams& params) {
  gs::RunManifest manifest;
  manifest.command_line = g_command_line;
  manifest.add_input(in_file);
  manifest.seed = params.seed;

  const gs::Corpus corpus = gs::read_corpus(in_file);
  gs::SgnsStats stats;
  const gs::EmbeddingTable table = gs::train_sgns(corpus, params, &stats);
  table.save_word2vec(out_file);
  manifest.outputs.push_back(out_file);
  manifest.write_next_to(out_file);

  std::cout << "vocab=" << stats.vocab_size << "\ntrain_tokens=" << stats.train_tokens << '\n';
  for (std::size_t e = 0; e < stats.epoch_loss.size(); ++e)
    std::cout << "loss_epoch" << e + 1 << '=' << stats.epoch_loss[e] << '\n';
  std::cout << "out=" << out_file << '\n';
}

void cmd_align(const std::string& emb_file, const std::string& bijection_file,
               const std::string& translit_map_file, const std::string& metric_name) {
  const gs::EmbeddingTable table = gs::EmbeddingTable::load_word2vec(emb_file);

  gs::VocabBijection bijection;
  if (!bijection_file.empty()) {
    bijection = gs::VocabBijection::load(bijection_file);
  } else if (!translit_map_file.empty()) {
    // pair every mappable table token with its image when both sides
    // are present in the table
    const gs::TranslitMap map = gs::TranslitMap::load(translit_map_file);
    for (const auto& tok : table.vocab) {
      if (map.is_special(tok)) continue;
      try {
        const std::string image = map.map_token(tok);
        if (image != tok && table.find(image)) bijection.pairs.emplace_back(tok, image);
      } catch (const gs::UnmappedCharacter&) {
        continue;  // derived-side or out-of-map token
      }
    }
    bijection.check();
  } else {
    throw gs::IoError("align needs --map (token bijection) or --translit-map");
  }

  const double score = gs::alignment(table, bijection, gs::parse_align_metric(metric_name));
  std::cout << "pairs=" << bijection.pairs.size() << '\n';
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", score);
  std::cout << "alignment=" << buf << '\n';
}

void cmd_report(const std::string& scores_file, const std::string& align_file,
                const std::string& out_file, const std::string& csv_file,
                const std::string& scatter_file, double threshold) {
  gs::RunManifest manifest;
  manifest.command_line = g_command_line;
  manifest.add_input(scores_file);

  const auto records = gs::read_scores_csv(scores_file);
  const gs::TransferReport report = gs::build_report(records, threshold);

  if (!out_file.empty()) {
    std::ofstream out(out_file, std::ios::binary);
    if (!out) throw gs::IoError("cannot write report '" + out_file + "'");
    out << report.to_markdown();
    manifest.outputs.push_back(out_file);
  }
  if (!csv_file.empty()) {
    std::ofstream out(csv_file, std::ios::binary);
    if (!out) throw gs::IoError("cannot write report '" + csv_file + "'");
    out << report.to_csv();
    manifest.outputs.push_back(csv_file);
  }

  if (!align_file.empty()) {
    manifest.add_input(align_file);
    const auto alignments = gs::read_alignments_tsv(align_file);
    const gs::CorrelationSummary summary = gs::correlate_report(report, alignments);
    for (const auto& tc : summary.per_task) {
      std::cout << "rho_" << tc.task << '=' << tc.rho << '\n'
                << "p_" << tc.task << '=' << tc.p_value << '\n';
    }
    if (!scatter_file.empty()) {
      std::ofstream out(scatter_file, std::ios::binary);
      if (!out) throw gs::IoError("cannot write scatter data '" + scatter_file + "'");
      summary.write_scatter(out);
      manifest.outputs.push_back(scatter_file);
    }
  }

  std::cout << "rows=" << report.rows.size() << "\naggregates=" << report.aggregates.size()
            << '\n';
  if (!manifest.outputs.empty()) {
    manifest.write_next_to(manifest.outputs.front());
    std::cout << "out=" << manifest.outputs.front() << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  {
    std::ostringstream cmd;
    for (int i = 0; i < argc; ++i) {
      if (i) cmd << ' ';
      cmd << argv[i];
    }
    g_command_line = cmd.str();
  }

  CLI::App app{"glosshift: synthetic derived-language toolkit"};
  app.set_version_flag("--version", std::string("glosshift ") + gs::kVersion);
  app.set_config("--config", "", "read defaults from a TOML-style config file");
  app.require_subcommand(1);

  unsigned threads = default_threads();
  app.add_option("--threads", threads, "worker threads (default $GLOSSHIFT_THREADS or 1)");
  app.fallthrough();  // let subcommands inherit --threads etc.

  // transform
  auto* transform = app.add_subcommand("transform", "apply a transformation to a corpus");
  TransformFlags tf_flags;
  tf_flags.attach(transform);
  std::string tf_in, tf_out;
  bool tf_invert = false;
  transform->add_option("--in", tf_in, "input corpus, one sentence per line")->required();
  transform->add_option("--out", tf_out, "output corpus")->required();
  transform->add_flag("--invert", tf_invert, "invert a transliteration (needs --map)");
  transform->callback([&] { cmd_transform(tf_flags, tf_in, tf_out, tf_invert, threads); });

  // mix
  auto* mix = app.add_subcommand("mix", "build a bilingual pre-training corpus pair");
  TransformFlags mix_flags;
  mix_flags.attach(mix);
  std::string mix_c1, mix_c2, mix_mode = "parallel", mix_out1, mix_out2;
  mix->add_option("--c1", mix_c1, "original corpus")->required();
  mix->add_option("--c2", mix_c2, "second corpus (for nonparallel_diff)");
  mix->add_option("--mode", mix_mode, "parallel|nonparallel_same|nonparallel_diff");
  mix->add_option("--out1", mix_out1, "original-side output")->required();
  mix->add_option("--out2", mix_out2, "derived-side output")->required();
  mix->callback(
      [&] { cmd_mix(mix_flags, mix_c1, mix_c2, mix_mode, mix_out1, mix_out2, threads); });

  // bpe
  auto* bpe = app.add_subcommand("bpe", "train a shared BPE tokenizer");
  std::vector<std::string> bpe_in;
  std::size_t bpe_size = 40000;
  std::string bpe_out;
  bpe->add_option("--in", bpe_in, "training corpora (shared tokenizer: pass both sides)")
      ->required();
  bpe->add_option("--size", bpe_size, "target vocabulary size");
  bpe->add_option("--out", bpe_out, "output vocabulary file")->required();
  bpe->callback([&] { cmd_bpe(bpe_in, bpe_size, bpe_out); });

  // overlap
  auto* overlap = app.add_subcommand("overlap", "sub-word overlap of two corpora");
  std::string ov_c1, ov_c2, ov_vocab;
  overlap->add_option("--c1", ov_c1)->required();
  overlap->add_option("--c2", ov_c2)->required();
  overlap->add_option("--vocab", ov_vocab, "shared BPE vocabulary")->required();
  overlap->callback([&] { cmd_overlap(ov_c1, ov_c2, ov_vocab); });

  // syntax-estimate
  auto* estimate = app.add_subcommand("syntax-estimate",
                                      "estimate a dependent-ordering model from a treebank");
  std::string est_treebank, est_out;
  double est_smoothing = 0.5;
  estimate->add_option("--treebank", est_treebank, "CoNLL-U treebank")->required();
  estimate->add_option("--out", est_out, "output model file")->required();
  estimate->add_option("--smoothing", est_smoothing, "add-k smoothing constant");
  estimate->callback([&] { cmd_syntax_estimate(est_treebank, est_out, est_smoothing); });

  // dataset
  auto* dataset = app.add_subcommand("dataset", "co-transform a downstream task dataset");
  TransformFlags ds_flags;
  ds_flags.attach(dataset);
  std::string ds_task, ds_in, ds_out, ds_format = "jsonl";
  dataset->add_option("--task", ds_task, "nli|ner|pos|qa")->required();
  dataset->add_option("--in", ds_in, "input dataset")->required();
  dataset->add_option("--out", ds_out, "output dataset")->required();
  dataset->add_option("--format", ds_format, "jsonl|conll (ner/pos only)");
  dataset->callback([&] { cmd_dataset(ds_flags, ds_task, ds_in, ds_out, ds_format); });

  // sgns
  auto* sgns = app.add_subcommand("sgns", "train static word embeddings (skip-gram)");
  std::string sg_in, sg_out;
  gs::SgnsParams sg_params;
  bool sg_seed_set = false;
  sgns->add_option("--in", sg_in, "training corpus")->required();
  sgns->add_option("--out", sg_out, "output embeddings (word2vec text)")->required();
  sgns->add_option("--dim", sg_params.dim, "embedding dimension");
  sgns->add_option("--window", sg_params.window, "max context window");
  sgns->add_option("--negatives", sg_params.negatives, "negative samples per pair");
  sgns->add_option("--epochs", sg_params.epochs, "training epochs");
  sgns->add_option("--min-count", sg_params.min_count, "minimum word frequency");
  sgns->add_option("--lr", sg_params.learning_rate, "initial learning rate");
  sgns->add_option("--seed", sg_params.seed, "RNG seed")
      ->each([&](const std::string&) { sg_seed_set = true; });
  sgns->callback([&] {
    if (!sg_seed_set) throw gs::IoError("--seed is required for sgns");
    sg_params.threads = threads;
    cmd_sgns(sg_in, sg_out, sg_params);
  });

  // align
  auto* align = app.add_subcommand("align", "embedding alignment across a token bijection");
  std::string al_emb, al_map, al_translit, al_metric = "cosine";
  align->add_option("--emb", al_emb, "embedding table (word2vec text)")->required();
  align->add_option("--map", al_map, "token bijection TSV (orig<TAB>deriv)");
  align->add_option("--translit-map", al_translit,
                    "derive the token bijection from a transliteration map");
  align->add_option("--metric", al_metric, "cosine|euclidean");
  align->callback([&] { cmd_align(al_emb, al_map, al_translit, al_metric); });

  // report
  auto* report = app.add_subcommand("report", "BZ/BS/MZ transfer-report calculus");
  std::string rp_scores, rp_align, rp_out, rp_csv, rp_scatter;
  double rp_threshold = -2.0;
  report->add_option("--scores", rp_scores, "score CSV (task,language,transform,setting,bz,bs,mz)")
      ->required();
  report->add_option("--align", rp_align, "per-setting alignment TSV for correlation");
  report->add_option("--out", rp_out, "Markdown report output");
  report->add_option("--csv", rp_csv, "CSV report output");
  report->add_option("--scatter", rp_scatter, "scatter TSV output (setting, alignment, dsup)");
  report->add_option("--threshold", rp_threshold, "strong-transfer Δsup threshold");
  report->callback(
      [&] { cmd_report(rp_scores, rp_align, rp_out, rp_csv, rp_scatter, rp_threshold); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const gs::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const gs::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
