#ifndef NLGEVAL_RESOURCES_HPP
#define NLGEVAL_RESOURCES_HPP

// File-backed lookup resources: wordlists, the slot-realization lexicon and
// word vectors. All of them are immutable after load and safe to share
// across threads.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace nlgeval {

class WordSet {
 public:
  WordSet() = default;
  explicit WordSet(std::vector<std::string> words);

  // One lowercase word per line. max_entries > 0 keeps only the first
  // max_entries lines (the files are frequency-ranked).
  static WordSet load(const std::string& path, std::size_t max_entries = 0);

  bool contains(std::string_view lower_word) const;
  void insert(std::string word);
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

 private:
  std::unordered_set<std::string> words_;
};

// attribute -> value -> surface realizations. The value itself always counts
// as a realization, so an empty (identity) lexicon is usable everywhere.
class SlotLexicon {
 public:
  SlotLexicon() = default;

  // JSON object {attribute: {value: [realization, ...]}}.
  static SlotLexicon load(const std::string& path);
  static SlotLexicon identity() { return SlotLexicon(); }

  void add(const std::string& attribute, const std::string& value,
           const std::string& realization);

  // Realizations for (attribute, value), always including the value itself.
  std::vector<std::string> realizations(std::string_view attribute,
                                        std::string_view value) const;

  // Known values per attribute (the closed inventory used by the
  // hallucination gate).
  const std::map<std::string, std::vector<std::string>>& inventory() const {
    return inventory_;
  }

  bool empty() const { return table_.empty(); }

 private:
  std::map<std::string, std::map<std::string, std::vector<std::string>>> table_;
  std::map<std::string, std::vector<std::string>> inventory_;
};

// Plain-text vectors: "word v1 v2 ... vd" per line, optional "count dim"
// header line (auto-detected).
class WordVectors {
 public:
  WordVectors() = default;

  static WordVectors load(const std::string& path);

  const std::vector<float>* find(std::string_view lower_word) const;
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return vectors_.size(); }

 private:
  std::unordered_map<std::string, std::vector<float>> vectors_;
  std::size_t dim_ = 0;
};

}  // namespace nlgeval

#endif
