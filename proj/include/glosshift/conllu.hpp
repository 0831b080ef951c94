#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "glosshift/text.hpp"

namespace glosshift {

struct DepNode {
  int index = 0;  // 1-based word index
  std::string form;
  std::string upos;
  int head = 0;  // 0 = root
  std::string deprel;
};

// A single dependency-parsed sentence. Node indices are contiguous
// 1..n; exactly one node has head 0 and the head pointers are acyclic.
struct DependencyTree {
  std::vector<DepNode> nodes;           // nodes[i] has index i+1
  std::vector<std::string> comments;    // leading '#' lines, verbatim

  std::size_t size() const { return nodes.size(); }
  const DepNode& node(int index) const { return nodes[static_cast<std::size_t>(index) - 1]; }

  // 1-based index of the root node.
  int root() const;

  // "# sent_id = ..." comment value, or "" when absent.
  std::string sent_id() const;

  Sentence forms() const;

  // true when every subtree covers a contiguous index span
  bool is_projective() const;

  // children of each node in ascending index order; children_of(0) are
  // the root(s)
  std::vector<std::vector<int>> child_table() const;
};

// Reads CoNLL-U (UD v2): 10 tab-separated columns, blocks separated by
// blank lines. Multiword-token ranges (1-2) and empty nodes (5.1) are
// skipped. Throws MalformedConllu / CyclicTree.
std::vector<DependencyTree> parse_conllu(std::istream& in);
std::vector<DependencyTree> parse_conllu(const std::filesystem::path& path);

void write_conllu(const std::vector<DependencyTree>& trees, std::ostream& out);

}  // namespace glosshift
