// Test-only helpers: independent oracles and fixture generators. The
// oracles deliberately avoid the library's algorithms (O(n^2) ranking,
// direct pair counting, naive tree walks) so they can serve as
// cross-checks.
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "glosshift/conllu.hpp"
#include "glosshift/rng.hpp"
#include "glosshift/text.hpp"

namespace testutil {

// counting-based average ranks, quadratic on purpose
inline std::vector<double> oracle_ranks(const std::vector<double>& v) {
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::size_t less = 0, equal = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] < v[i]) ++less;
      if (v[j] == v[i]) ++equal;
    }
    r[i] = 1.0 + static_cast<double>(less) + (static_cast<double>(equal) - 1.0) / 2.0;
  }
  return r;
}

inline double oracle_pearson(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t n = a.size();
  double ma = 0, mb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= static_cast<double>(n);
  mb /= static_cast<double>(n);
  double cov = 0, va = 0, vb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    cov += (a[i] - ma) * (b[i] - mb);
    va += (a[i] - ma) * (a[i] - ma);
    vb += (b[i] - mb) * (b[i] - mb);
  }
  return cov / std::sqrt(va * vb);
}

inline double oracle_spearman(const std::vector<double>& x, const std::vector<double>& y) {
  return oracle_pearson(oracle_ranks(x), oracle_ranks(y));
}

template <typename T>
std::map<T, int> multiset_of(const std::vector<T>& v) {
  std::map<T, int> m;
  for (const auto& x : v) ++m[x];
  return m;
}

inline glosshift::Sentence random_sentence(glosshift::RngStream& rng, std::size_t min_len = 1,
                                           std::size_t max_len = 12) {
  glosshift::Sentence s;
  const std::size_t len = min_len + rng.next_below(max_len - min_len + 1);
  for (std::size_t i = 0; i < len; ++i) {
    std::string tok;
    const std::size_t chars = 1 + rng.next_below(7);
    for (std::size_t c = 0; c < chars; ++c)
      tok.push_back(static_cast<char>('a' + rng.next_below(26)));
    s.tokens.push_back(std::move(tok));
  }
  return s;
}

inline glosshift::Corpus random_corpus(std::uint64_t seed, std::size_t n_sentences,
                                       std::size_t min_len = 1, std::size_t max_len = 12) {
  glosshift::RngStream rng(seed);
  glosshift::Corpus c;
  c.source_id = "generated";
  for (std::size_t i = 0; i < n_sentences; ++i)
    c.sentences.push_back(random_sentence(rng, min_len, max_len));
  return c;
}

// random dependency tree over n
// nodes: every node attaches to an already-connected node, which keeps
// the structure acyclic regardless of index order
inline glosshift::DependencyTree random_tree(glosshift::RngStream& rng, std::size_t n) {
  static const std::vector<std::string> upos = {"NOUN", "VERB", "ADJ", "ADV", "PROPN", "DET"};
  static const std::vector<std::string> deprels = {"nsubj", "obj",    "amod", "advmod",
                                                   "det",   "nmod",   "punct"};
  glosshift::DependencyTree tree;
  tree.nodes.resize(n);

  std::vector<int> attach_order(n);
  for (std::size_t i = 0; i < n; ++i) attach_order[i] = static_cast<int>(i) + 1;
  for (std::size_t i = n; i > 1; --i)
    std::swap(attach_order[i - 1], attach_order[rng.next_below(i)]);

  std::vector<int> connected;
  for (std::size_t k = 0; k < n; ++k) {
    const int node = attach_order[k];
    auto& nd = tree.nodes[static_cast<std::size_t>(node) - 1];
    nd.index = node;
    nd.form = "w" + std::to_string(node);
    nd.upos = upos[rng.next_below(upos.size())];
    if (connected.empty()) {
      nd.head = 0;
      nd.deprel = "root";
    } else {
      nd.head = connected[rng.next_below(connected.size())];
      nd.deprel = deprels[rng.next_below(deprels.size())];
    }
    connected.push_back(node);
  }
  return tree;
}

namespace detail {
inline int projective_span(glosshift::RngStream& rng, glosshift::DependencyTree& tree, int lo,
                           int hi) {
  const int head = lo + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(hi - lo + 1)));
  for (int side = 0; side < 2; ++side) {
    int i = side == 0 ? lo : head + 1;
    const int end = side == 0 ? head - 1 : hi;
    while (i <= end) {
      const int j = i + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(end - i + 1)));
      const int child = projective_span(rng, tree, i, j);
      tree.nodes[static_cast<std::size_t>(child) - 1].head = head;
      i = j + 1;
    }
  }
  return head;
}
}  // namespace detail

// random projective tree: every subtree covers a contiguous index span
inline glosshift::DependencyTree projective_tree(glosshift::RngStream& rng, std::size_t n) {
  static const std::vector<std::string> upos = {"NOUN", "VERB", "ADJ", "ADV", "PROPN", "DET"};
  static const std::vector<std::string> deprels = {"nsubj", "obj", "amod", "advmod", "det",
                                                   "nmod", "punct"};
  glosshift::DependencyTree tree;
  tree.nodes.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& nd = tree.nodes[i];
    nd.index = static_cast<int>(i) + 1;
    nd.form = "w" + std::to_string(i + 1);
    nd.upos = upos[rng.next_below(upos.size())];
    nd.deprel = deprels[rng.next_below(deprels.size())];
  }
  const int root = detail::projective_span(rng, tree, 1, static_cast<int>(n));
  auto& r = tree.nodes[static_cast<std::size_t>(root) - 1];
  r.head = 0;
  r.deprel = "root";
  return tree;
}

// token positions of the subtree rooted at `node`, via a naive closure
inline std::set<std::size_t> subtree_positions(const glosshift::DependencyTree& tree,
                                               int node) {
  std::set<std::size_t> out;
  out.insert(static_cast<std::size_t>(node) - 1);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& nd : tree.nodes) {
      if (nd.head != 0 && out.count(static_cast<std::size_t>(nd.head) - 1) &&
          !out.count(static_cast<std::size_t>(nd.index) - 1)) {
        out.insert(static_cast<std::size_t>(nd.index) - 1);
        grew = true;
      }
    }
  }
  return out;
}

}  // namespace testutil
