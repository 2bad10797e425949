#pragma once

#include <map>
#include <string>
#include <vector>

namespace shapecap::metrics {

using Tokens = std::vector<std::string>;
using NGramCounts = std::map<Tokens, int>;

NGramCounts ngram_counts(const Tokens& tokens, int n);

// Clipped ("modified") n-gram precision as a fraction. Denominator 0 when the
// candidate has fewer than n tokens.
struct Precision {
  int matched = 0;
  int total = 0;
  double value() const { return total > 0 ? double(matched) / total : 0.0; }
};
Precision modified_precision(const Tokens& candidate, const std::vector<Tokens>& references,
                             int n);

// Sentence BLEU-n: geometric mean of modified precisions 1..n times the
// brevity penalty against the closest reference length. No smoothing.
double bleu_n(const Tokens& candidate, const std::vector<Tokens>& references, int n);

// Corpus BLEU-n from summed clipped counts and summed lengths.
double corpus_bleu(const std::vector<Tokens>& candidates,
                   const std::vector<std::vector<Tokens>>& references, int n);

std::size_t lcs_length(const Tokens& a, const Tokens& b);

// ROUGE-L F1 against each reference, maximized over references.
double rouge_l(const Tokens& candidate, const std::vector<Tokens>& references);

struct CiderResult {
  std::vector<double> per_shape;
  double mean = 0.0;
};

// CIDEr (orders 1..4, no length penalty) with idf taken from the reference
// sets of the evaluated corpus. Throws std::invalid_argument for corpora of
// fewer than two shapes, where every shared n-gram has zero idf.
CiderResult cider(const std::vector<Tokens>& candidates,
                  const std::vector<std::vector<Tokens>>& references);

struct Alignment {
  int matches = 0;
  int chunks = 0;
};

// Exact-match unigram alignment with the most matches and, among those, the
// fewest chunks.
Alignment align_unigrams(const Tokens& candidate, const Tokens& reference);

// METEOR restricted to exact matches (no stemming, synonyms or paraphrases):
// F_mean = 10PR / (R + 9P), penalty 0.5 (chunks / matches)^3, best reference.
double meteor_simple(const Tokens& candidate, const std::vector<Tokens>& references);

// Per-sample and corpus scores for the report columns B-1..B-4, M, R, C.
struct SampleScores {
  std::string shape_id;
  double bleu[4] = {0, 0, 0, 0};
  double meteor = 0.0;
  double rouge = 0.0;
  double cider = 0.0;
};

struct MetricTable {
  double bleu[4] = {0, 0, 0, 0};  // mean of sentence scores
  double corpus_bleu[4] = {0, 0, 0, 0};
  double meteor = 0.0;
  double rouge = 0.0;
  double cider = 0.0;
  double exact_match = 0.0;  // fraction of candidates equal to some reference
  std::vector<SampleScores> samples;
};

// Scores a corpus given per-shape candidate tokens and reference token sets.
// CIDEr is left at zero for corpora with fewer than two shapes.
MetricTable evaluate(const std::vector<std::string>& shape_ids,
                     const std::vector<Tokens>& candidates,
                     const std::vector<std::vector<Tokens>>& references);

}  // namespace shapecap::metrics
