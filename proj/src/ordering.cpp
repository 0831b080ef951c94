#include "glosshift/ordering.hpp"

#include <fstream>
#include <sstream>

#include "glosshift/errors.hpp"

namespace glosshift {

namespace {
constexpr const char* kModelHeader = "glosshift-ordering-model\tv1";
}

void OrderingModel::observe(const std::string& head_upos, const std::string& deprel,
                            bool before) {
  auto& c = counts_[{head_upos, deprel}];
  if (before)
    ++c.before;
  else
    ++c.after;
  total_before_ += before ? 1 : 0;
  ++total_;
}

void OrderingModel::set_counts(const std::string& head_upos, const std::string& deprel,
                               std::uint64_t before, std::uint64_t after) {
  auto& c = counts_[{head_upos, deprel}];
  total_before_ += before - c.before;
  total_ += before + after - c.before - c.after;
  c.before = before;
  c.after = after;
}

double OrderingModel::precedence(const std::string& head_upos, const std::string& deprel) const {
  const double k = smoothing_k_;
  auto it = counts_.find({head_upos, deprel});
  if (it != counts_.end()) {
    const auto& c = it->second;
    return (static_cast<double>(c.before) + k) /
           (static_cast<double>(c.before + c.after) + 2.0 * k);
  }
  const double denom = static_cast<double>(total_) + 2.0 * k;
  if (denom == 0.0) return 0.5;
  return (static_cast<double>(total_before_) + k) / denom;
}

void OrderingModel::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write ordering model '" + path.string() + "'");
  save(out);
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

void OrderingModel::save(std::ostream& out) const {
  out << kModelHeader << "\tsmoothing\t" << smoothing_k_ << '\n';
  for (const auto& [key, c] : counts_) {
    out << key.first << '\t' << key.second << '\t' << c.before << '\t' << c.after << '\n';
  }
}

OrderingModel OrderingModel::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open ordering model '" + path.string() + "'");
  return load(in, path.string());
}

OrderingModel OrderingModel::load(std::istream& in, const std::string& what) {
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty ordering model '" + what + "'");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::istringstream header(line);
  std::string magic, version, key;
  double k = 0.5;
  header >> magic >> version >> key >> k;
  if (magic != "glosshift-ordering-model" || version != "v1")
    throw IoError("unrecognized ordering model header in '" + what + "'");
  OrderingModel m(k);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string upos, deprel;
    std::uint64_t before = 0, after = 0;
    if (!(row >> upos >> deprel >> before >> after))
      throw IoError("bad ordering model row on line " + std::to_string(line_no) + " of '" +
                    what + "'");
    m.set_counts(upos, deprel, before, after);
  }
  return m;
}

OrderingModel estimate_ordering(const std::vector<DependencyTree>& treebank,
                                double smoothing_k) {
  if (treebank.empty()) throw EmptyTreebank("cannot estimate an ordering model from zero trees");
  OrderingModel model(smoothing_k);
  for (const auto& tree : treebank) {
    for (const auto& node : tree.nodes) {
      if (node.head == 0) continue;
      const DepNode& head = tree.node(node.head);
      model.observe(head.upos, node.deprel, node.index < head.index);
    }
  }
  return model;
}

namespace {

void linearize(int node, const std::vector<std::vector<int>>& before,
               const std::vector<std::vector<int>>& after, std::vector<std::size_t>& out) {
  for (int d : before[static_cast<std::size_t>(node)]) linearize(d, before, after, out);
  out.push_back(static_cast<std::size_t>(node) - 1);
  for (int d : after[static_cast<std::size_t>(node)]) linearize(d, before, after, out);
}

}  // namespace

std::vector<std::size_t> reorder_order(const DependencyTree& tree, const OrderingModel& model,
                                       RngStream& rng, const ReorderOptions& opts) {
  const std::size_t n = tree.size();
  const auto children = tree.child_table();
  std::vector<std::vector<int>> before(n + 1), after(n + 1);

  // Sides are sampled head by head, dependents in ascending index
  // order, so the stream consumption is canonical for a given tree.
  for (std::size_t h = 1; h <= n; ++h) {
    const DepNode& head = tree.node(static_cast<int>(h));
    const bool sampled_head = opts.heads_filter.count(head.upos) != 0;
    for (int d : children[h]) {
      const DepNode& dep = tree.node(d);
      bool goes_before = dep.index < head.index;  // original side
      if (sampled_head && (opts.include_punct || dep.deprel != "punct")) {
        goes_before = rng.next_double() < model.precedence(head.upos, dep.deprel);
      }
      (goes_before ? before : after)[h].push_back(d);
    }
  }

  std::vector<std::size_t> order;
  order.reserve(n);
  for (int r : children[0]) linearize(r, before, after, order);
  return order;
}

Sentence reorder(const DependencyTree& tree, const OrderingModel& model, RngStream& rng,
                 const ReorderOptions& opts) {
  const auto order = reorder_order(tree, model, rng, opts);
  Sentence out;
  out.tokens.reserve(order.size());
  for (std::size_t i : order) out.tokens.push_back(tree.nodes[i].form);
  return out;
}

}  // namespace glosshift
