#include "glosshift/bpe.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

#include "glosshift/errors.hpp"
#include "glosshift/utf8.hpp"

namespace glosshift {

namespace {

using SymbolPair = std::pair<std::string, std::string>;

struct PairHash {
  std::size_t operator()(const SymbolPair& p) const {
    const std::size_t h1 = std::hash<std::string>{}(p.first);
    const std::size_t h2 = std::hash<std::string>{}(p.second);
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
  }
};

// split into codepoint symbols, marker fused onto the final one
std::vector<std::string> word_symbols(const std::string& word, const std::string& marker) {
  std::vector<std::string> symbols;
  for (char32_t cp : decode_utf8(word)) symbols.push_back(encode_utf8(cp));
  if (!symbols.empty()) symbols.back() += marker;
  return symbols;
}

struct PendingMerge {
  std::int64_t count;
  SymbolPair pair;
};

// max count first; ties prefer the lexicographically smallest pair
struct PendingOrder {
  bool operator()(const PendingMerge& a, const PendingMerge& b) const {
    if (a.count != b.count) return a.count < b.count;
    return a.pair > b.pair;
  }
};

}  // namespace

SubwordVocab train_bpe(const Corpus& c, std::size_t target_size) {
  SubwordVocab v;
  v.target_size = target_size;

  // distinct word types in first-appearance order
  std::unordered_map<std::string, std::size_t> word_id;
  std::vector<std::vector<std::string>> words;
  std::vector<std::int64_t> freq;
  for (const auto& s : c.sentences) {
    for (const auto& tok : s.tokens) {
      auto [it, inserted] = word_id.emplace(tok, words.size());
      if (inserted) {
        words.push_back(word_symbols(tok, v.marker));
        freq.push_back(0);
      }
      ++freq[it->second];
    }
  }

  for (const auto& syms : words)
    for (const auto& sym : syms) v.vocab.insert(sym);
  if (target_size < v.vocab.size())
    throw TargetTooSmall("target size " + std::to_string(target_size) +
                         " is below the alphabet size " + std::to_string(v.vocab.size()));

  std::unordered_map<SymbolPair, std::int64_t, PairHash> pair_count;
  std::unordered_map<SymbolPair, std::unordered_set<std::size_t>, PairHash> pair_words;
  std::priority_queue<PendingMerge, std::vector<PendingMerge>, PendingOrder> queue;

  auto scan_word = [](const std::vector<std::string>& syms, auto&& fn) {
    for (std::size_t i = 0; i + 1 < syms.size(); ++i) fn(SymbolPair{syms[i], syms[i + 1]});
  };

  for (std::size_t w = 0; w < words.size(); ++w) {
    scan_word(words[w], [&](const SymbolPair& p) {
      pair_count[p] += freq[w];
      pair_words[p].insert(w);
    });
  }
  for (const auto& [p, n] : pair_count) queue.push({n, p});

  while (v.vocab.size() < target_size && !queue.empty()) {
    const PendingMerge top = queue.top();
    queue.pop();
    auto it = pair_count.find(top.pair);
    if (it == pair_count.end() || it->second != top.count) continue;  // stale entry
    if (top.count < 2) break;

    const SymbolPair best = top.pair;
    const std::string merged = best.first + best.second;
    v.merges.push_back(best);
    v.vocab.insert(merged);

    const auto affected = pair_words[best];  // copy: rewrites mutate the index
    for (std::size_t w : affected) {
      auto& syms = words[w];
      std::unordered_map<SymbolPair, std::int64_t, PairHash> delta;
      scan_word(syms, [&](const SymbolPair& p) { delta[p] -= freq[w]; });

      std::vector<std::string> next;
      next.reserve(syms.size());
      for (std::size_t i = 0; i < syms.size();) {
        if (i + 1 < syms.size() && syms[i] == best.first && syms[i + 1] == best.second) {
          next.push_back(merged);
          i += 2;
        } else {
          next.push_back(syms[i]);
          ++i;
        }
      }
      syms = std::move(next);

      scan_word(syms, [&](const SymbolPair& p) { delta[p] += freq[w]; });
      std::unordered_set<SymbolPair, PairHash> present;
      scan_word(syms, [&](const SymbolPair& p) { present.insert(p); });

      for (const auto& [p, d] : delta) {
        if (d != 0) {
          const std::int64_t n = (pair_count[p] += d);
          if (n <= 0)
            pair_count.erase(p);
          else
            queue.push({n, p});
        }
        if (present.count(p)) {
          pair_words[p].insert(w);
        } else {
          auto pw = pair_words.find(p);
          if (pw != pair_words.end()) {
            pw->second.erase(w);
            if (pw->second.empty()) pair_words.erase(pw);
          }
        }
      }
    }
  }
  return v;
}

void SubwordVocab::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write BPE vocabulary '" + path.string() + "'");
  save(out);
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

void SubwordVocab::save(std::ostream& out) const {
  out << "glosshift-bpe\tv1\t" << target_size << '\t' << marker << '\n';
  for (const auto& [a, b] : merges) out << a << '\t' << b << '\n';
}

SubwordVocab SubwordVocab::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open BPE vocabulary '" + path.string() + "'");
  return load(in, path.string());
}

SubwordVocab SubwordVocab::load(std::istream& in, const std::string& what) {
  SubwordVocab v;
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty BPE vocabulary '" + what + "'");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::istringstream header(line);
  std::string magic, version;
  header >> magic >> version >> v.target_size >> v.marker;
  if (magic != "glosshift-bpe" || version != "v1")
    throw IoError("unrecognized BPE vocabulary header in '" + what + "'");
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw IoError("bad merge pair on line " + std::to_string(line_no) + " of '" + what + "'");
    v.merges.emplace_back(line.substr(0, tab), line.substr(tab + 1));
    // the loaded vocab holds merge results; the alphabet reappears as
    // singleton symbols at encode time
    v.vocab.insert(v.merges.back().first + v.merges.back().second);
  }
  return v;
}

BpeEncoder::BpeEncoder(const SubwordVocab& vocab) : vocab_(vocab) {
  for (std::size_t r = 0; r < vocab.merges.size(); ++r) rank_.emplace(vocab.merges[r], r);
}

std::vector<std::string> BpeEncoder::encode_word(const std::string& word) const {
  auto hit = cache_.find(word);
  if (hit != cache_.end()) return hit->second;

  std::vector<std::string> syms = word_symbols(word, vocab_.marker);
  // repeatedly merge the earliest-learned pair present in the word
  while (syms.size() > 1) {
    std::size_t best_rank = rank_.size();
    for (std::size_t i = 0; i + 1 < syms.size(); ++i) {
      auto it = rank_.find({syms[i], syms[i + 1]});
      if (it != rank_.end() && it->second < best_rank) best_rank = it->second;
    }
    if (best_rank == rank_.size()) break;
    const auto& [a, b] = vocab_.merges[best_rank];
    std::vector<std::string> next;
    next.reserve(syms.size());
    for (std::size_t i = 0; i < syms.size();) {
      if (i + 1 < syms.size() && syms[i] == a && syms[i + 1] == b) {
        next.push_back(a + b);
        i += 2;
      } else {
        next.push_back(syms[i]);
        ++i;
      }
    }
    syms = std::move(next);
  }
  cache_.emplace(word, syms);
  return syms;
}

std::vector<std::string> BpeEncoder::encode(const Sentence& s) const {
  std::vector<std::string> out;
  for (const auto& tok : s.tokens) {
    const auto pieces = encode_word(tok);
    out.insert(out.end(), pieces.begin(), pieces.end());
  }
  return out;
}

OverlapReport subword_overlap(const Corpus& c1, const Corpus& c2, const SubwordVocab& v) {
  BpeEncoder enc(v);
  auto type_set = [&](const Corpus& c) {
    std::unordered_set<std::string> types;
    std::unordered_set<std::string> seen_words;
    for (const auto& s : c.sentences) {
      for (const auto& tok : s.tokens) {
        if (!seen_words.insert(tok).second) continue;
        for (auto& piece : enc.encode_word(tok)) types.insert(std::move(piece));
      }
    }
    return types;
  };
  const auto e1 = type_set(c1);
  const auto e2 = type_set(c2);

  OverlapReport r;
  r.e1_size = e1.size();
  r.e2_size = e2.size();
  for (const auto& t : e1)
    if (e2.count(t)) ++r.intersection_size;
  r.union_size = e1.size() + e2.size() - r.intersection_size;
  r.overlap = r.union_size == 0 ? 1.0
                                : static_cast<double>(r.intersection_size) /
                                      static_cast<double>(r.union_size);
  return r;
}

}  // namespace glosshift
