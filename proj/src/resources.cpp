#include "nlgeval/resources.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nlgeval/error.hpp"
#include "nlgeval/textproc.hpp"

namespace nlgeval {

WordSet::WordSet(std::vector<std::string> words) {
  for (std::string& w : words) words_.insert(std::move(w));
}

WordSet WordSet::load(const std::string& path, std::size_t max_entries) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open wordlist: " + path);
  WordSet set;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    set.words_.insert(text::lower_copy(line));
    if (max_entries && set.words_.size() >= max_entries) break;
  }
  return set;
}

bool WordSet::contains(std::string_view lower_word) const {
  return words_.count(std::string(lower_word)) > 0;
}

void WordSet::insert(std::string word) { words_.insert(std::move(word)); }

SlotLexicon SlotLexicon::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open lexicon: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::Malformed, "lexicon " + path + ": " + e.what());
  }
  if (!doc.is_object())
    throw Error(Errc::Malformed, "lexicon " + path + ": top level must be an object");
  SlotLexicon lex;
  for (const auto& [attr, values] : doc.items()) {
    if (!values.is_object())
      throw Error(Errc::Malformed, "lexicon attribute " + attr + ": expected object");
    for (const auto& [value, reals] : values.items()) {
      lex.inventory_[attr].push_back(value);
      auto& bucket = lex.table_[attr][value];
      if (reals.is_array()) {
        for (const auto& r : reals)
          if (r.is_string()) bucket.push_back(r.get<std::string>());
      } else if (reals.is_string()) {
        bucket.push_back(reals.get<std::string>());
      }
    }
  }
  return lex;
}

void SlotLexicon::add(const std::string& attribute, const std::string& value,
                      const std::string& realization) {
  auto& bucket = table_[attribute][value];
  if (bucket.empty()) inventory_[attribute].push_back(value);
  bucket.push_back(realization);
}

std::vector<std::string> SlotLexicon::realizations(std::string_view attribute,
                                                   std::string_view value) const {
  std::vector<std::string> out{std::string(value)};
  auto ait = table_.find(std::string(attribute));
  if (ait == table_.end()) return out;
  auto vit = ait->second.find(std::string(value));
  if (vit == ait->second.end()) return out;
  for (const std::string& r : vit->second)
    if (r != out[0]) out.push_back(r);
  return out;
}

WordVectors WordVectors::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open vector file: " + path);
  WordVectors wv;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string word;
    ss >> word;
    std::vector<float> vec;
    float v;
    while (ss >> v) vec.push_back(v);
    if (lineno == 1 && vec.size() == 1 && word.find_first_not_of("0123456789") ==
                                              std::string::npos) {
      continue;  // "count dim" header
    }
    if (vec.empty())
      throw Error(Errc::Malformed, "vector file " + path + " line " +
                                       std::to_string(lineno) + ": no values");
    if (wv.dim_ == 0) wv.dim_ = vec.size();
    if (vec.size() != wv.dim_)
      throw Error(Errc::Malformed, "vector file " + path + " line " +
                                       std::to_string(lineno) + ": expected " +
                                       std::to_string(wv.dim_) + " values, got " +
                                       std::to_string(vec.size()));
    wv.vectors_[text::lower_copy(word)] = std::move(vec);
  }
  return wv;
}

const std::vector<float>* WordVectors::find(std::string_view lower_word) const {
  auto it = vectors_.find(std::string(lower_word));
  return it == vectors_.end() ? nullptr : &it->second;
}

}  // namespace nlgeval
