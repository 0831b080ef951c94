#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "glosshift/embedding.hpp"
#include "glosshift/errors.hpp"
#include "glosshift/rng.hpp"

namespace glosshift {

namespace {

double sigmoid_clamped(double x) {
  // clamp keeps exp() in range; no NaN/Inf can leave the update rule
  x = std::clamp(x, -10.0, 10.0);
  return 1.0 / (1.0 + std::exp(-x));
}

struct NoiseTable {
  // cumulative unigram^0.75 distribution; sampled by binary search
  std::vector<double> cumulative;

  explicit NoiseTable(const std::vector<std::uint64_t>& counts) {
    cumulative.reserve(counts.size());
    double acc = 0.0;
    for (auto c : counts) {
      acc += std::pow(static_cast<double>(c), 0.75);
      cumulative.push_back(acc);
    }
  }

  std::size_t sample(RngStream& rng) const {
    const double u = rng.next_double() * cumulative.back();
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    return std::min<std::size_t>(it - cumulative.begin(), cumulative.size() - 1);
  }
};

}  // namespace

EmbeddingTable train_sgns(const Corpus& c, const SgnsParams& params, SgnsStats* stats) {
  if (params.dim < 2) throw Error("embedding dimension must be at least 2");
  if (params.window < 1) throw Error("window must be at least 1");

  // vocabulary: frequency-sorted, first-appearance order breaks ties
  std::unordered_map<std::string, std::size_t> first_seen;
  std::vector<std::string> words;
  std::vector<std::uint64_t> counts;
  std::uint64_t total_tokens = 0;
  for (const auto& s : c.sentences) {
    for (const auto& tok : s.tokens) {
      ++total_tokens;
      auto [it, inserted] = first_seen.emplace(tok, words.size());
      if (inserted) {
        words.push_back(tok);
        counts.push_back(0);
      }
      ++counts[it->second];
    }
  }
  if (total_tokens == 0) throw EmptyCorpus("cannot train embeddings on an empty corpus");

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < words.size(); ++i)
    if (counts[i] >= params.min_count) kept.push_back(i);
  if (kept.empty())
    throw EmptyCorpus("no word meets min_count=" + std::to_string(params.min_count));
  std::stable_sort(kept.begin(), kept.end(),
                   [&](std::size_t a, std::size_t b) { return counts[a] > counts[b]; });

  EmbeddingTable table;
  table.dim = params.dim;
  std::vector<std::uint64_t> kept_counts;
  std::unordered_map<std::string, std::size_t> vocab_index;
  for (std::size_t i : kept) {
    vocab_index.emplace(words[i], table.vocab.size());
    table.vocab.push_back(words[i]);
    kept_counts.push_back(counts[i]);
  }
  const std::size_t v = table.vocab.size();
  const std::size_t dim = params.dim;

  // sentences as vocabulary ids, out-of-vocabulary tokens dropped
  std::vector<std::vector<std::uint32_t>> encoded;
  encoded.reserve(c.size());
  std::uint64_t train_tokens = 0;
  for (const auto& s : c.sentences) {
    std::vector<std::uint32_t> ids;
    ids.reserve(s.size());
    for (const auto& tok : s.tokens) {
      auto it = vocab_index.find(tok);
      if (it != vocab_index.end()) ids.push_back(static_cast<std::uint32_t>(it->second));
    }
    train_tokens += ids.size();
    encoded.push_back(std::move(ids));
  }

  // input rows seeded uniform, output rows zero (word2vec convention)
  table.data.resize(v * dim);
  std::vector<float> out_vec(v * dim, 0.0f);
  {
    RngStream init(detail::mix64(params.seed + 0x1234567ULL));
    for (auto& x : table.data)
      x = static_cast<float>((init.next_double() - 0.5) / static_cast<double>(dim));
  }

  const NoiseTable noise(kept_counts);
  const std::uint64_t planned = std::max<std::uint64_t>(1, train_tokens * params.epochs);
  std::atomic<std::uint64_t> processed{0};

  std::vector<double> epoch_loss(params.epochs, 0.0);
  std::vector<std::uint64_t> epoch_terms(params.epochs, 0);

  auto train_range = [&](std::size_t epoch, std::size_t begin, std::size_t end, double& loss_acc,
                         std::uint64_t& term_acc) {
    std::vector<float> grad(dim);
    for (std::size_t si = begin; si < end; ++si) {
      const auto& ids = encoded[si];
      if (ids.empty()) continue;
      RngStream rng = sentence_stream(params.seed, epoch * encoded.size() + si);
      const std::uint64_t done =
          processed.fetch_add(ids.size(), std::memory_order_relaxed);
      const double frac = static_cast<double>(done) / static_cast<double>(planned);
      const double lr =
          std::max(params.learning_rate * (1.0 - frac), params.learning_rate * 1e-4);

      for (std::size_t pos = 0; pos < ids.size(); ++pos) {
        const std::uint32_t center = ids[pos];
        const std::size_t reach = 1 + rng.next_below(params.window);
        const std::size_t lo = pos >= reach ? pos - reach : 0;
        const std::size_t hi = std::min(ids.size() - 1, pos + reach);
        for (std::size_t ctx = lo; ctx <= hi; ++ctx) {
          if (ctx == pos) continue;
          const std::uint32_t target = ids[ctx];
          float* in_row = table.data.data() + static_cast<std::size_t>(center) * dim;
          std::fill(grad.begin(), grad.end(), 0.0f);

          for (std::size_t k = 0; k <= params.negatives; ++k) {
            std::size_t sample;
            double label;
            if (k == 0) {
              sample = target;
              label = 1.0;
            } else {
              sample = noise.sample(rng);
              if (sample == target) continue;  // word2vec skips self-negatives
              label = 0.0;
            }
            float* out_row = out_vec.data() + sample * dim;
            double dot = 0.0;
            for (std::size_t d = 0; d < dim; ++d) dot += in_row[d] * out_row[d];
            const double p = sigmoid_clamped(dot);
            const double g = (label - p) * lr;
            loss_acc += label > 0.5 ? -std::log(std::max(p, 1e-12))
                                    : -std::log(std::max(1.0 - p, 1e-12));
            ++term_acc;
            for (std::size_t d = 0; d < dim; ++d) {
              grad[d] += static_cast<float>(g) * out_row[d];
              out_row[d] += static_cast<float>(g) * in_row[d];
            }
          }
          for (std::size_t d = 0; d < dim; ++d) in_row[d] += grad[d];
        }
      }
    }
  };

  const unsigned threads = std::max(1u, params.threads);
  for (std::size_t epoch = 0; epoch < params.epochs; ++epoch) {
    if (threads == 1 || encoded.size() < 2) {
      train_range(epoch, 0, encoded.size(), epoch_loss[epoch], epoch_terms[epoch]);
    } else {
      const unsigned n_workers = std::min<std::size_t>(threads, encoded.size());
      const std::size_t chunk = (encoded.size() + n_workers - 1) / n_workers;
      std::vector<double> losses(n_workers, 0.0);
      std::vector<std::uint64_t> terms(n_workers, 0);
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < n_workers; ++w) {
        pool.emplace_back([&, w] {
          const std::size_t b = w * chunk;
          const std::size_t e = std::min(encoded.size(), b + chunk);
          train_range(epoch, b, e, losses[w], terms[w]);
        });
      }
      for (auto& th : pool) th.join();
      for (unsigned w = 0; w < n_workers; ++w) {
        epoch_loss[epoch] += losses[w];
        epoch_terms[epoch] += terms[w];
      }
    }
  }

  if (stats) {
    stats->vocab_size = v;
    stats->train_tokens = train_tokens;
    stats->epoch_loss.clear();
    for (std::size_t e = 0; e < params.epochs; ++e)
      stats->epoch_loss.push_back(epoch_terms[e] ? epoch_loss[e] / epoch_terms[e] : 0.0);
  }
  table.rebuild_index();
  return table;
}

}  // namespace glosshift
