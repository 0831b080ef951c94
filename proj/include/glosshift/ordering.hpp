#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "glosshift/conllu.hpp"
#include "glosshift/rng.hpp"
#include "glosshift/text.hpp"

namespace glosshift {

// Dependent-ordering statistics of a target language: for every
// (head UPOS, dependent deprel) pair, how often the dependent precedes
// its head. Queries on unseen pairs fall back to the global prior.
class OrderingModel {
 public:
  struct Counts {
    std::uint64_t before = 0;
    std::uint64_t after = 0;
    bool operator==(const Counts&) const = default;
  };
  using Key = std::pair<std::string, std::string>;  // (head upos, dep deprel)

  OrderingModel() = default;
  explicit OrderingModel(double smoothing_k) : smoothing_k_(smoothing_k) {}

  double smoothing() const { return smoothing_k_; }
  const std::map<Key, Counts>& counts() const { return counts_; }

  void observe(const std::string& head_upos, const std::string& deprel, bool before);
  void set_counts(const std::string& head_upos, const std::string& deprel, std::uint64_t before,
                  std::uint64_t after);

  // P(dependent precedes head); add-k smoothed, global prior fallback.
  double precedence(const std::string& head_upos, const std::string& deprel) const;

  // Versioned text table: "head_upos<TAB>deprel<TAB>before<TAB>after".
  void save(const std::filesystem::path& path) const;
  void save(std::ostream& out) const;
  static OrderingModel load(const std::filesystem::path& path);
  static OrderingModel load(std::istream& in, const std::string& what);

 private:
  std::map<Key, Counts> counts_;
  std::uint64_t total_before_ = 0;
  std::uint64_t total_ = 0;
  double smoothing_k_ = 0.5;
};

OrderingModel estimate_ordering(const std::vector<DependencyTree>& treebank, double smoothing_k);

struct ReorderOptions {
  // which head categories get their dependents re-ordered
  std::set<std::string> heads_filter = {"NOUN", "VERB", "PROPN", "AUX"};
  // punct dependents keep their original side unless enabled
  bool include_punct = false;
};

// Output order of the tree's tokens: position j of the result holds the
// 0-based original index of the token placed there. Projective
// linearization; every subtree stays contiguous, dependents on the same
// side of their head keep their original relative order.
std::vector<std::size_t> reorder_order(const DependencyTree& tree, const OrderingModel& model,
                                       RngStream& rng, const ReorderOptions& opts = {});

Sentence reorder(const DependencyTree& tree, const OrderingModel& model, RngStream& rng,
                 const ReorderOptions& opts = {});

}  // namespace glosshift
