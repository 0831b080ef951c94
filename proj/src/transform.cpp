#include "glosshift/transform.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

#include "glosshift/errors.hpp"

namespace glosshift {

const char* kind_name(TransformKind k) {
  switch (k) {
    case TransformKind::Inversion: return "inv";
    case TransformKind::Permutation: return "perm";
    case TransformKind::Transliteration: return "translit";
    case TransformKind::Syntax: return "syn";
  }
  return "?";
}

TransformKind parse_kind(const std::string& name) {
  if (name == "inv") return TransformKind::Inversion;
  if (name == "perm") return TransformKind::Permutation;
  if (name == "translit") return TransformKind::Transliteration;
  if (name == "syn") return TransformKind::Syntax;
  throw IoError("unknown transformation '" + name + "' (expected inv|perm|translit|syn)");
}

TransformSpec TransformSpec::parse(const std::string& spec, std::uint64_t seed) {
  TransformSpec t;
  t.seed = seed;
  std::vector<TransformKind> dotted;  // right-to-left composition order
  std::size_t pos = 0;
  for (;;) {
    const std::size_t dot = spec.find('.', pos);
    const std::string part = spec.substr(pos, dot == std::string::npos ? dot : dot - pos);
    if (part.empty()) throw IoError("empty component in transformation spec '" + spec + "'");
    dotted.push_back(parse_kind(part));
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  // "a.b" means b before a
  t.chain.assign(dotted.rbegin(), dotted.rend());
  return t;
}

bool TransformSpec::has(TransformKind k) const {
  return std::find(chain.begin(), chain.end(), k) != chain.end();
}

bool TransformSpec::needs_rng() const {
  return has(TransformKind::Permutation) || has(TransformKind::Syntax);
}

bool TransformSpec::span_safe() const {
  return !has(TransformKind::Permutation) && !has(TransformKind::Syntax);
}

std::string TransformSpec::name() const {
  std::string out;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    if (!out.empty()) out.push_back('.');
    out += kind_name(*it);
  }
  return out;
}

std::vector<std::size_t> inversion_order(std::size_t n) {
  std::vector<std::size_t> order(n);
  for (std::size_t j = 0; j < n; ++j) order[j] = n - 1 - j;
  return order;
}

std::vector<std::size_t> permutation_order(std::size_t n, RngStream& rng) {
  return random_permutation(n, rng);
}

Sentence invert(const Sentence& s) {
  Sentence out = s;
  std::reverse(out.tokens.begin(), out.tokens.end());
  return out;
}

Sentence permute(const Sentence& s, RngStream& rng) {
  const auto order = permutation_order(s.size(), rng);
  Sentence out;
  out.tokens.reserve(s.size());
  for (std::size_t i : order) out.tokens.push_back(s.tokens[i]);
  return out;
}

Sentence transliterate(const Sentence& s, const TranslitMap& m) { return m.apply(s); }

namespace {

// order composition: step placed input position step_order[j] at j, on
// top of the existing total mapping
void compose(std::vector<std::size_t>& total, const std::vector<std::size_t>& step) {
  std::vector<std::size_t> next(step.size());
  for (std::size_t j = 0; j < step.size(); ++j) next[j] = total[step[j]];
  total = std::move(next);
}

}  // namespace

namespace {

// stream salt per stochastic kind; fixed across chain positions
std::uint64_t kind_salt(TransformKind k) {
  switch (k) {
    case TransformKind::Permutation: return 1;
    case TransformKind::Syntax: return 2;
    default: return 0;
  }
}

}  // namespace

TransformedSentence transform_sentence_traced(const Sentence& s, const TransformSpec& t,
                                              std::uint64_t index) {
  TransformedSentence res;
  res.sentence = s;
  res.order.resize(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) res.order[j] = j;

  for (TransformKind k : t.chain) {
    switch (k) {
      case TransformKind::Inversion: {
        const auto step = inversion_order(res.sentence.size());
        compose(res.order, step);
        res.sentence = invert(res.sentence);
        break;
      }
      case TransformKind::Permutation: {
        RngStream rng = sentence_stream(t.seed, index, kind_salt(k));
        const auto step = permutation_order(res.sentence.size(), rng);
        Sentence out;
        out.tokens.reserve(step.size());
        for (std::size_t i : step) out.tokens.push_back(res.sentence.tokens[i]);
        compose(res.order, step);
        res.sentence = std::move(out);
        break;
      }
      case TransformKind::Transliteration: {
        if (!t.translit)
          throw IoError("transformation '" + t.name() + "' needs a transliteration map");
        res.sentence = t.translit->apply(res.sentence);
        break;
      }
      case TransformKind::Syntax: {
        if (!t.ordering)
          throw IoError("transformation '" + t.name() + "' needs an ordering model");
        const DependencyTree* tree = nullptr;
        if (t.parses && index < t.parses->size()) tree = &(*t.parses)[index];
        // the tree must cover exactly the current token sequence
        if (tree == nullptr || tree->forms().tokens != res.sentence.tokens) {
          res.syntax_skipped = true;
          break;
        }
        RngStream rng = sentence_stream(t.seed, index, kind_salt(k));
        const auto step = reorder_order(*tree, *t.ordering, rng, t.reorder_opts);
        Sentence out;
        out.tokens.reserve(step.size());
        for (std::size_t i : step) out.tokens.push_back(res.sentence.tokens[i]);
        compose(res.order, step);
        res.sentence = std::move(out);
        break;
      }
    }
  }
  return res;
}

Sentence transform_sentence(const Sentence& s, const TransformSpec& t, std::uint64_t index) {
  return transform_sentence_traced(s, t, index).sentence;
}

Corpus apply_transform(const Corpus& c, const TransformSpec& t, unsigned threads,
                       TransformStats* stats, std::uint64_t index_base) {
  Corpus out;
  out.source_id = c.source_id;
  out.sentences.resize(c.size());
  std::vector<std::uint64_t> skipped_per_thread(std::max(threads, 1u), 0);

  auto work = [&](unsigned tid, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        auto res = transform_sentence_traced(c.sentences[i], t, index_base + i);
        out.sentences[i] = std::move(res.sentence);
        if (res.syntax_skipped) ++skipped_per_thread[tid];
      } catch (Error& e) {
        e.add_context("sentence " + std::to_string(index_base + i));
        throw;
      }
    }
  };

  if (threads <= 1 || c.size() < 2) {
    work(0, 0, c.size());
  } else {
    const unsigned n_workers = std::min<std::size_t>(threads, c.size());
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex err_mu;
    const std::size_t chunk = (c.size() + n_workers - 1) / n_workers;
    for (unsigned w = 0; w < n_workers; ++w) {
      pool.emplace_back([&, w] {
        const std::size_t b = w * chunk;
        const std::size_t e = std::min(c.size(), b + chunk);
        try {
          work(w, b, e);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (!first_error) first_error = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  if (stats) {
    stats->sentences += c.size();
    for (auto v : skipped_per_thread) stats->syntax_skipped += v;
  }
  return out;
}

MixtureMode parse_mixture_mode(const std::string& name) {
  if (name == "parallel") return MixtureMode::Parallel;
  if (name == "nonparallel_same") return MixtureMode::NonParallelSame;
  if (name == "nonparallel_diff") return MixtureMode::NonParallelDiff;
  throw IoError("unknown mixture mode '" + name +
                "' (expected parallel|nonparallel_same|nonparallel_diff)");
}

const char* mixture_mode_name(MixtureMode m) {
  switch (m) {
    case MixtureMode::Parallel: return "parallel";
    case MixtureMode::NonParallelSame: return "nonparallel_same";
    case MixtureMode::NonParallelDiff: return "nonparallel_diff";
  }
  return "?";
}

std::pair<Corpus, Corpus> build_bilingual_mixture(const Corpus& c1, const Corpus* c2,
                                                  const TransformSpec& t, MixtureMode mode,
                                                  unsigned threads, TransformStats* stats) {
  switch (mode) {
    case MixtureMode::Parallel: {
      return {c1, apply_transform(c1, t, threads, stats)};
    }
    case MixtureMode::NonParallelSame: {
      // first half / second half, truncated to equal size
      const std::size_t half = c1.size() / 2;
      Corpus a, b;
      a.source_id = c1.source_id + "#first-half";
      b.source_id = c1.source_id + "#second-half";
      a.sentences.assign(c1.sentences.begin(), c1.sentences.begin() + half);
      b.sentences.assign(c1.sentences.begin() + half, c1.sentences.begin() + 2 * half);
      return {std::move(a), apply_transform(b, t, threads, stats)};
    }
    case MixtureMode::NonParallelDiff: {
      if (c2 == nullptr)
        throw MissingSecondCorpus("mode nonparallel_diff needs a second corpus");
      const std::size_t n = std::min(c1.size(), c2->size());
      Corpus a, b;
      a.source_id = c1.source_id;
      b.source_id = c2->source_id;
      a.sentences.assign(c1.sentences.begin(), c1.sentences.begin() + n);
      b.sentences.assign(c2->sentences.begin(), c2->sentences.begin() + n);
      return {std::move(a), apply_transform(b, t, threads, stats)};
    }
  }
  throw Error("unreachable mixture mode");
}

}  // namespace glosshift
