#include "nlgeval/wbm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "nlgeval/error.hpp"

namespace nlgeval::wbm {

namespace {

using Ids = std::vector<int>;

// Token strings are interned to ints per metric call; comparisons and
// hashing then work on ids.
class Interner {
 public:
  Ids ids(const Tokens& tokens) {
    Ids out;
    out.reserve(tokens.size());
    for (const Token& t : tokens) out.push_back(id(t.lower));
    return out;
  }

  int id(const std::string& s) {
    auto [it, fresh] = map_.try_emplace(s, static_cast<int>(map_.size()));
    (void)fresh;
    return it->second;
  }

 private:
  std::unordered_map<std::string, int> map_;
};

struct NgramHash {
  size_t operator()(const Ids& g) const {
    size_t h = 14695981039346656037ull;
    for (int x : g) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

using NgramCounts = std::unordered_map<Ids, long, NgramHash>;

NgramCounts ngram_counts(const Ids& seq, int n) {
  NgramCounts counts;
  if (static_cast<int>(seq.size()) < n) return counts;
  for (size_t i = 0; i + n <= seq.size(); ++i)
    ++counts[Ids(seq.begin() + i, seq.begin() + i + n)];
  return counts;
}

long levenshtein(const Ids& a, const Ids& b) {
  const size_t n = a.size(), m = b.size();
  std::vector<long> prev(m + 1), cur(m + 1);
  for (size_t j = 0; j <= m; ++j) prev[j] = static_cast<long>(j);
  for (size_t i = 1; i <= n; ++i) {
    cur[0] = static_cast<long>(i);
    for (size_t j = 1; j <= m; ++j) {
      long sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

constexpr size_t kMaxShiftSpan = 10;
constexpr int kMaxShiftIterations = 50;

// Contiguous subsequences of ref up to kMaxShiftSpan, for the exact-match
// constraint on shifted phrases. Hash prefilter, exact verify on hit.
struct RefWindows {
  explicit RefWindows(const Ids& ref) : ref_(ref) {
    for (size_t len = 1; len <= std::min(kMaxShiftSpan, ref.size()); ++len)
      for (size_t i = 0; i + len <= ref.size(); ++i)
        hashes_.insert(NgramHash{}(Ids(ref.begin() + i, ref.begin() + i + len)));
  }

  bool contains(const Ids& span) const {
    if (span.size() > ref_.size()) return false;
    if (!hashes_.count(NgramHash{}(span))) return false;
    for (size_t i = 0; i + span.size() <= ref_.size(); ++i)
      if (std::equal(span.begin(), span.end(), ref_.begin() + i)) return true;
    return false;
  }

 private:
  const Ids& ref_;
  std::unordered_set<size_t> hashes_;
};

Ids apply_shift(const Ids& seq, size_t start, size_t len, size_t dest) {
  Ids span(seq.begin() + start, seq.begin() + start + len);
  Ids rest;
  rest.reserve(seq.size() - len);
  rest.insert(rest.end(), seq.begin(), seq.begin() + start);
  rest.insert(rest.end(), seq.begin() + start + len, seq.end());
  rest.insert(rest.begin() + dest, span.begin(), span.end());
  return rest;
}

struct EditCount {
  long edits = 0;
  long shifts = 0;
  long word_edits = 0;  // levenshtein part after shifting
};

// Greedy shift search: repeatedly apply the shift that most reduces the
// remaining word edit distance (scan order: start, length, destination;
// first best wins). Every shifted phrase must occur verbatim in the
// reference.
EditCount ter_edits(const Ids& cand, const Ids& ref, bool allow_shifts) {
  EditCount out;
  Ids cur = cand;
  long base = levenshtein(cur, ref);
  if (allow_shifts && !cur.empty()) {
    RefWindows windows(ref);
    for (int iter = 0; iter < kMaxShiftIterations && base > 0; ++iter) {
      long best_gain = 0;
      size_t bs = 0, bl = 0, bd = 0;
      const size_t n = cur.size();
      for (size_t start = 0; start < n; ++start) {
        for (size_t len = 1; len <= std::min(kMaxShiftSpan, n - start); ++len) {
          Ids span(cur.begin() + start, cur.begin() + start + len);
          if (!windows.contains(span)) continue;
          for (size_t dest = 0; dest + len <= n; ++dest) {
            if (dest == start) continue;
            long d = levenshtein(apply_shift(cur, start, len, dest), ref);
            if (base - d > best_gain) {
              best_gain = base - d;
              bs = start;
              bl = len;
              bd = dest;
            }
          }
        }
      }
      if (best_gain <= 0) break;
      cur = apply_shift(cur, bs, bl, bd);
      base -= best_gain;
      ++out.shifts;
    }
  }
  out.word_edits = base;
  out.edits = out.shifts + base;
  return out;
}

double require_refs(const RefList& references, const char* metric) {
  if (references.empty())
    throw Error(Errc::EmptyReferences,
                std::string(metric) + ": at least one reference required");
  return 0.0;
}

}  // namespace

bool WbmScore::has_flag(const std::string& f) const {
  return std::find(flags.begin(), flags.end(), f) != flags.end();
}

WbmScore bleu(const Tokens& candidate, const RefList& references, int max_n,
              Smoothing smoothing) {
  require_refs(references, "bleu");
  if (max_n < 1) throw Error(Errc::InvalidConfig, "bleu: max_n must be >= 1");

  WbmScore score;
  score.metric = "bleu";

  Interner intern;
  Ids cand = intern.ids(candidate);
  std::vector<Ids> refs;
  refs.reserve(references.size());
  for (const Tokens& r : references) refs.push_back(intern.ids(r));

  const long c = static_cast<long>(cand.size());
  score.detail["candidate_length"] = static_cast<double>(c);
  if (c == 0) {
    score.flags.push_back("empty_candidate");
    for (int n = 1; n <= max_n; ++n) score.detail["precision_" + std::to_string(n)] = 0.0;
    score.detail["brevity_penalty"] = 0.0;
    return score;
  }

  // effective reference length: closest to c, ties to the shorter
  long r_eff = static_cast<long>(refs[0].size());
  for (const Ids& r : refs) {
    long len = static_cast<long>(r.size());
    long d_new = std::labs(len - c), d_old = std::labs(r_eff - c);
    if (d_new < d_old || (d_new == d_old && len < r_eff)) r_eff = len;
  }
  score.detail["effective_reference_length"] = static_cast<double>(r_eff);

  double log_sum = 0.0;
  bool zero = false;
  for (int n = 1; n <= max_n; ++n) {
    NgramCounts cand_counts = ngram_counts(cand, n);
    long total = std::max<long>(0, c - n + 1);
    long clipped = 0;
    if (total > 0 && !cand_counts.empty()) {
      NgramCounts max_ref;
      for (const Ids& r : refs)
        for (const auto& [g, k] : ngram_counts(r, n)) {
          long& slot = max_ref[g];
          slot = std::max(slot, k);
        }
      for (const auto& [g, k] : cand_counts) {
        auto it = max_ref.find(g);
        if (it != max_ref.end()) clipped += std::min(k, it->second);
      }
    }
    double p;
    if (total == 0) {
      p = 0.0;
    } else if (smoothing == Smoothing::AddOne && n >= 2) {
      p = static_cast<double>(clipped + 1) / static_cast<double>(total + 1);
    } else {
      p = static_cast<double>(clipped) / static_cast<double>(total);
    }
    score.detail["precision_" + std::to_string(n)] = p;
    if (p <= 0.0)
      zero = true;
    else
      log_sum += std::log(p);
  }

  double bp = 1.0;
  if (c < r_eff) bp = std::exp(1.0 - static_cast<double>(r_eff) / static_cast<double>(c));
  score.detail["brevity_penalty"] = bp;
  score.value = zero ? 0.0 : bp * std::exp(log_sum / max_n);
  return score;
}

WbmScore ter(const Tokens& candidate, const RefList& references, bool allow_shifts) {
  require_refs(references, "ter");

  WbmScore score;
  score.metric = "ter";

  Interner intern;
  Ids cand = intern.ids(candidate);
  std::vector<Ids> refs;
  refs.reserve(references.size());
  double len_sum = 0.0;
  for (const Tokens& r : references) {
    refs.push_back(intern.ids(r));
    len_sum += static_cast<double>(r.size());
  }
  double avg_len = len_sum / static_cast<double>(refs.size());
  if (avg_len <= 0.0)
    throw Error(Errc::EmptyReferences, "ter: no non-empty reference");

  EditCount best;
  bool first = true;
  for (const Ids& r : refs) {
    EditCount e = ter_edits(cand, r, allow_shifts);
    if (first || e.edits < best.edits) {
      best = e;
      first = false;
    }
  }

  score.detail["edits"] = static_cast<double>(best.edits);
  score.detail["shifts"] = static_cast<double>(best.shifts);
  score.detail["word_edits"] = static_cast<double>(best.word_edits);
  score.detail["avg_reference_length"] = avg_len;
  if (candidate.empty()) score.flags.push_back("empty_candidate");
  score.value = static_cast<double>(best.edits) / avg_len;
  return score;
}

WbmScore rouge_n(const Tokens& candidate, const RefList& references, int n) {
  require_refs(references, "rouge_n");
  if (n < 1) throw Error(Errc::InvalidConfig, "rouge_n: n must be >= 1");

  WbmScore score;
  score.metric = "rouge_" + std::to_string(n);

  Interner intern;
  Ids cand = intern.ids(candidate);
  NgramCounts cand_counts = ngram_counts(cand, n);
  if (candidate.empty()) score.flags.push_back("empty_candidate");

  double best = 0.0;
  double best_total = 0.0, best_matches = 0.0;
  for (const Tokens& reference : references) {
    Ids ref = intern.ids(reference);
    long total = static_cast<long>(ref.size()) - n + 1;
    if (total <= 0) continue;  // reference shorter than n: recall 0
    long matches = 0;
    for (const auto& [g, k] : ngram_counts(ref, n)) {
      auto it = cand_counts.find(g);
      if (it != cand_counts.end()) matches += std::min(k, it->second);
    }
    double recall = static_cast<double>(matches) / static_cast<double>(total);
    if (recall > best) {
      best = recall;
      best_total = static_cast<double>(total);
      best_matches = static_cast<double>(matches);
    }
  }
  score.detail["reference_ngrams"] = best_total;
  score.detail["matched_ngrams"] = best_matches;
  score.value = best;
  return score;
}

namespace {

long lcs_length(const Ids& a, const Ids& b) {
  const size_t n = a.size(), m = b.size();
  std::vector<long> prev(m + 1, 0), cur(m + 1, 0);
  for (size_t i = 1; i <= n; ++i) {
    for (size_t j = 1; j <= m; ++j) {
      if (a[i - 1] == b[j - 1])
        cur[j] = prev[j - 1] + 1;
      else
        cur[j] = std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

}  // namespace

WbmScore rouge_l(const Tokens& candidate, const RefList& references) {
  require_refs(references, "rouge_l");

  WbmScore score;
  score.metric = "rouge_l";
  if (candidate.empty()) score.flags.push_back("empty_candidate");

  Interner intern;
  Ids cand = intern.ids(candidate);

  double best_f = 0.0, best_r = 0.0, best_p = 0.0;
  for (const Tokens& reference : references) {
    Ids ref = intern.ids(reference);
    long l = lcs_length(cand, ref);
    double r = ref.empty() ? 0.0 : static_cast<double>(l) / ref.size();
    double p = cand.empty() ? 0.0 : static_cast<double>(l) / cand.size();
    double f = (p + r) > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
    if (f > best_f) {
      best_f = f;
      best_r = r;
      best_p = p;
    }
  }
  score.detail["recall"] = best_r;
  score.detail["precision"] = best_p;
  score.value = best_f;
  return score;
}

double LexicalOverlapProvider::similarity(const TextUnit& a, const TextUnit& b,
                                          std::vector<std::string>* flags) const {
  auto type_set = [&](const TextUnit& u) {
    std::set<std::string> out;
    for (const auto& s : u.sentences)
      for (const auto& t : s.tokens) {
        if (t.kind != text::TokenKind::Word) continue;
        if (stopwords_ && stopwords_->contains(t.lower)) continue;
        out.insert(t.lower);
      }
    return out;
  };
  std::set<std::string> sa = type_set(a), sb = type_set(b);
  if (sa.empty() && sb.empty()) {
    if (flags) flags->push_back("empty_after_filter");
    return 0.0;
  }
  size_t common = 0;
  for (const std::string& w : sa) common += sb.count(w);
  return 2.0 * static_cast<double>(common) /
         static_cast<double>(sa.size() + sb.size());
}

double EmbeddingProvider::similarity(const TextUnit& a, const TextUnit& b,
                                     std::vector<std::string>* flags) const {
  auto mean_vector = [&](const TextUnit& u, std::vector<double>& mean) {
    mean.assign(vectors_.dim(), 0.0);
    size_t n = 0;
    for (const auto& s : u.sentences)
      for (const auto& t : s.tokens) {
        if (t.kind != text::TokenKind::Word) continue;
        if (const std::vector<float>* v = vectors_.find(t.lower)) {
          for (size_t i = 0; i < mean.size(); ++i) mean[i] += (*v)[i];
          ++n;
        }
      }
    if (n == 0) return false;
    for (double& x : mean) x /= static_cast<double>(n);
    return true;
  };
  std::vector<double> va, vb;
  if (!mean_vector(a, va) || !mean_vector(b, vb)) {
    if (flags) flags->push_back("no_vector_coverage");
    return 0.0;
  }
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (size_t i = 0; i < va.size(); ++i) {
    dot += va[i] * vb[i];
    na += va[i] * va[i];
    nb += vb[i] * vb[i];
  }
  if (na <= 0.0 || nb <= 0.0) {
    if (flags) flags->push_back("zero_vector");
    return 0.0;
  }
  double cosine = dot / (std::sqrt(na) * std::sqrt(nb));
  double scaled = (cosine + 1.0) / 2.0;
  return std::clamp(scaled, 0.0, 1.0);
}

WbmScore semantic_similarity(const TextUnit& a, const TextUnit& b,
                             const SimilarityProvider& provider) {
  WbmScore score;
  score.metric = "semsim";
  score.value = provider.similarity(a, b, &score.flags);
  return score;
}

}  // namespace nlgeval::wbm
