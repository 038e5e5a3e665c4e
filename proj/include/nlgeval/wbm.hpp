#ifndef NLGEVAL_WBM_HPP
#define NLGEVAL_WBM_HPP

// Word-based metrics: BLEU, TER, ROUGE-N, ROUGE-L and semantic similarity.
// All functions are pure and deterministic; token comparison uses the
// lowercased token surface.

#include <map>
#include <string>
#include <vector>

#include "nlgeval/resources.hpp"
#include "nlgeval/textproc.hpp"

namespace nlgeval::wbm {

using text::TextUnit;
using text::Token;
using Tokens = std::vector<Token>;
using RefList = std::vector<Tokens>;

enum class Smoothing { None, AddOne };

struct WbmScore {
  std::string metric;
  double value = 0.0;
  std::map<std::string, double> detail;
  std::vector<std::string> flags;

  bool has_flag(const std::string& f) const;
};

// Geometric mean of clipped n-gram precisions (n = 1..max_n) times the
// brevity penalty exp(1 - r/c) for c < r, with r the reference length
// closest to c (ties to the shorter reference). Smoothing::AddOne applies
// add-one smoothing to the n >= 2 precisions.
WbmScore bleu(const Tokens& candidate, const RefList& references, int max_n = 4,
              Smoothing smoothing = Smoothing::None);

// Translation edit rate: cheapest reference's edit count (insert, delete,
// substitute, plus greedy phrase shifts at cost 1) over the average
// reference length. allow_shifts=false gives plain word edit distance.
WbmScore ter(const Tokens& candidate, const RefList& references,
             bool allow_shifts = true);

// Max over references of clipped n-gram recall.
WbmScore rouge_n(const Tokens& candidate, const RefList& references, int n);

// Max over references of the LCS F1 score.
WbmScore rouge_l(const Tokens& candidate, const RefList& references);

class SimilarityProvider {
 public:
  virtual ~SimilarityProvider() = default;
  virtual std::string name() const = 0;
  // Value in [0,1]; may append diagnostic flags.
  virtual double similarity(const TextUnit& a, const TextUnit& b,
                            std::vector<std::string>* flags) const = 0;
};

// Dice coefficient over stopword-filtered lowercased Word-token type sets.
class LexicalOverlapProvider final : public SimilarityProvider {
 public:
  explicit LexicalOverlapProvider(const WordSet* stopwords = nullptr)
      : stopwords_(stopwords) {}
  std::string name() const override { return "lexical_overlap"; }
  double similarity(const TextUnit& a, const TextUnit& b,
                    std::vector<std::string>* flags) const override;

 private:
  const WordSet* stopwords_;
};

// Cosine of mean word vectors, rescaled from [-1,1] to [0,1].
class EmbeddingProvider final : public SimilarityProvider {
 public:
  explicit EmbeddingProvider(WordVectors vectors) : vectors_(std::move(vectors)) {}
  std::string name() const override { return "embedding"; }
  double similarity(const TextUnit& a, const TextUnit& b,
                    std::vector<std::string>* flags) const override;

 private:
  WordVectors vectors_;
};

WbmScore semantic_similarity(const TextUnit& a, const TextUnit& b,
                             const SimilarityProvider& provider);

}  // namespace nlgeval::wbm

#endif
