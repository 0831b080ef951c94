#include "glosshift/conllu.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "glosshift/errors.hpp"

namespace glosshift {

int DependencyTree::root() const {
  for (const auto& n : nodes) {
    if (n.head == 0) return n.index;
  }
  return 0;
}

std::string DependencyTree::sent_id() const {
  for (const auto& c : comments) {
    const std::string key = "# sent_id";
    if (c.rfind(key, 0) == 0) {
      const std::size_t eq = c.find('=');
      if (eq != std::string::npos) {
        std::size_t b = eq + 1;
        while (b < c.size() && c[b] == ' ') ++b;
        return c.substr(b);
      }
    }
  }
  return "";
}

Sentence DependencyTree::forms() const {
  Sentence s;
  s.tokens.reserve(nodes.size());
  for (const auto& n : nodes) s.tokens.push_back(n.form);
  return s;
}

std::vector<std::vector<int>> DependencyTree::child_table() const {
  std::vector<std::vector<int>> children(nodes.size() + 1);
  for (const auto& n : nodes) children[static_cast<std::size_t>(n.head)].push_back(n.index);
  return children;
}

bool DependencyTree::is_projective() const {
  // ancestors are acyclic, so each node's subtree stats can be pushed
  // up its head chain directly
  const std::size_t n = nodes.size();
  std::vector<int> lo(n + 1), hi(n + 1);
  std::vector<std::size_t> size(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    lo[i] = hi[i] = static_cast<int>(i);
    size[i] = 1;
  }
  for (const auto& node : nodes) {
    int h = node.head;
    while (h != 0) {
      lo[static_cast<std::size_t>(h)] = std::min(lo[static_cast<std::size_t>(h)], node.index);
      hi[static_cast<std::size_t>(h)] = std::max(hi[static_cast<std::size_t>(h)], node.index);
      ++size[static_cast<std::size_t>(h)];
      h = this->node(h).head;
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    if (static_cast<std::size_t>(hi[i] - lo[i]) + 1 != size[i]) return false;
  }
  return true;
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', pos);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(pos));
      return fields;
    }
    fields.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
}

bool parse_int(const std::string& s, int& out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

void finish_tree(DependencyTree& tree, std::size_t block_line,
                 std::vector<DependencyTree>& out) {
  if (tree.nodes.empty() && tree.comments.empty()) return;
  if (tree.nodes.empty())
    throw MalformedConllu(block_line, "comment-only block without word lines");

  const std::size_t n = tree.nodes.size();
  int roots = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (tree.nodes[i].index != static_cast<int>(i) + 1)
      throw MalformedConllu(block_line, "word indices are not contiguous from 1");
    if (tree.nodes[i].head < 0 || tree.nodes[i].head > static_cast<int>(n))
      throw MalformedConllu(block_line, "head index out of range");
    if (tree.nodes[i].head == 0) ++roots;
  }
  std::string id = tree.sent_id();
  if (id.empty()) id = "#" + std::to_string(out.size() + 1);
  // every head in 1..n with no root forces a cycle
  if (roots == 0) throw CyclicTree(id);
  if (roots > 1)
    throw MalformedConllu(block_line,
                          "expected exactly one root, found " + std::to_string(roots));

  // walk up from every node; more than n steps means a cycle
  for (const auto& node : tree.nodes) {
    int cur = node.index;
    std::size_t steps = 0;
    while (cur != 0) {
      cur = tree.node(cur).head;
      if (++steps > n) throw CyclicTree(id);
    }
  }
  out.push_back(std::move(tree));
  tree = DependencyTree{};
}

}  // namespace

std::vector<DependencyTree> parse_conllu(std::istream& in) {
  std::vector<DependencyTree> trees;
  DependencyTree cur;
  std::string line;
  std::size_t line_no = 0;
  std::size_t block_line = 1;
  bool in_block = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      finish_tree(cur, block_line, trees);
      in_block = false;
      continue;
    }
    if (!in_block) {
      block_line = line_no;
      in_block = true;
    }
    if (line[0] == '#') {
      cur.comments.push_back(line);
      continue;
    }
    const auto fields = split_tabs(line);
    if (fields.size() != 10)
      throw MalformedConllu(line_no,
                            "expected 10 tab-separated columns, got " +
                                std::to_string(fields.size()));
    const std::string& id = fields[0];
    // skip multiword-token ranges ("1-2") and empty nodes ("5.1")
    if (id.find('-') != std::string::npos || id.find('.') != std::string::npos) continue;

    DepNode node;
    if (!parse_int(id, node.index) || node.index <= 0)
      throw MalformedConllu(line_no, "bad word index '" + id + "'");
    node.form = fields[1];
    node.upos = fields[3];
    if (!parse_int(fields[6], node.head))
      throw MalformedConllu(line_no, "bad head index '" + fields[6] + "'");
    node.deprel = fields[7];
    cur.nodes.push_back(std::move(node));
  }
  finish_tree(cur, block_line, trees);
  return trees;
}

std::vector<DependencyTree> parse_conllu(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open CoNLL-U file '" + path.string() + "'");
  return parse_conllu(in);
}

void write_conllu(const std::vector<DependencyTree>& trees, std::ostream& out) {
  for (const auto& tree : trees) {
    for (const auto& c : tree.comments) out << c << '\n';
    for (const auto& n : tree.nodes) {
      out << n.index << '\t' << n.form << "\t_\t" << n.upos << "\t_\t_\t" << n.head << '\t'
          << n.deprel << "\t_\t_\n";
    }
    out << '\n';
  }
}

}  // namespace glosshift
