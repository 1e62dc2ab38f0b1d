#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bilirank {

// Configuration problems (bad parameters, enumeration budget, ranges). CLI exit 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (files, id manifests). CLI exit 3.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Training failure (divergence). CLI exit 4.
class TrainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Accumulated log-space arithmetic may drift a hair above zero; anything
// beyond this is a logic error, not rounding.
inline constexpr double kLogProbTol = 1e-12;

// Log-space probability: a finite value <= 0, or kNegInf for probability zero.
// Never NaN. Positive values within kLogProbTol are clamped to zero.
struct LogProb {
  double v = kNegInf;

  static LogProb of(double x);
  static LogProb zero_prob() { return LogProb{kNegInf}; }
  bool is_zero() const { return v == kNegInf; }
};

enum class Modality { Text, Video };

const char* to_string(Modality m);

struct Token {
  std::uint32_t id = 0;
  friend bool operator==(const Token&, const Token&) = default;
  friend auto operator<=>(const Token&, const Token&) = default;
};

// Non-empty ordered symbol sequence for one modality.
struct TokenSeq {
  Modality modality = Modality::Text;
  std::vector<Token> tokens;

  TokenSeq() = default;
  TokenSeq(Modality m, std::vector<Token> toks);
  TokenSeq(Modality m, std::initializer_list<std::uint32_t> ids);

  std::size_t length() const { return tokens.size(); }
  // All token ids strictly below vocab, else throws std::invalid_argument.
  void check_vocab(std::uint32_t vocab, const std::string& what) const;
  std::vector<std::uint32_t> ids() const;

  friend bool operator==(const TokenSeq&, const TokenSeq&) = default;
};

// ln sum(exp(values)) with max-shift; kNegInf iff every input is kNegInf.
// Accepts arbitrary finite reals (used for logit normalization too).
double log_sum_exp(std::span<const double> values);
double log_sum_exp(std::initializer_list<double> values);
LogProb log_sum_exp(std::span<const LogProb> values);

// Lowest index whose score lies within tie_tolerance of the maximum.
std::size_t argmax_with_ties(std::span<const double> scores, double tie_tolerance);

// splitmix64 counter-based generator (Steele, Lea & Flood 2014 constants).
// Fixed project-wide so seeded runs replay identically on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next_u64();
  // Uniform in [0, 1) from the top 53 bits.
  double next_double();
  // Uniform in (0, 1].
  double next_open_closed();
  // Unbiased uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n);

  // Independent child stream; derived from the parent seed and index only,
  // so it does not depend on how far the parent has advanced.
  Rng child(std::uint64_t index) const;

  static std::uint64_t mix(std::uint64_t x);

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

// Sample an index from a probability row (sums to 1 within tolerance).
std::size_t sample_row(std::span<const double> probs, Rng& rng);

// Deterministic summary of a sequence into one of n_states condition states.
// Shared by the generative worlds and the tabular model.
std::uint32_t sequence_state(const TokenSeq& seq, std::uint32_t n_states);

enum class Direction { V2T, T2V };

const char* to_string(Direction d);
Direction direction_from_string(const std::string& s);

enum class ScoreKind { CandidateLikelihood, QueryLikelihood, Prior, Fused };

const char* to_string(ScoreKind k);
ScoreKind score_kind_from_string(const std::string& s);

// Dense queries x candidates table of log-probabilities, or of calibrated
// scores (which may be positive) when `calibrated` is set.
struct ScoreMatrix {
  ScoreKind kind = ScoreKind::CandidateLikelihood;
  bool calibrated = false;
  std::vector<std::string> query_ids;
  std::vector<std::string> candidate_ids;
  std::vector<double> scores;  // row-major

  static ScoreMatrix make(ScoreKind kind, std::vector<std::string> query_ids,
                          std::vector<std::string> candidate_ids);

  std::size_t rows() const { return query_ids.size(); }
  std::size_t cols() const { return candidate_ids.size(); }
  double& at(std::size_t q, std::size_t c) { return scores[q * cols() + c]; }
  double at(std::size_t q, std::size_t c) const { return scores[q * cols() + c]; }
  std::span<const double> row(std::size_t q) const {
    return {scores.data() + q * cols(), cols()};
  }

  // Dimension consistency, no NaN, Prior has one row, uncalibrated entries
  // are valid log-probabilities. Throws DataError.
  void validate() const;
};

struct RankedEntry {
  std::size_t candidate = 0;
  double score = kNegInf;
  bool reranked = true;  // false for first-stage tail entries
};

// Per-query descending candidate ordering with provenance and optional
// ground-truth linkage.
struct RankingResult {
  std::vector<std::string> query_ids;
  std::vector<std::string> candidate_ids;
  std::vector<std::vector<RankedEntry>> order;  // one list per query
  std::string provenance;
  std::vector<std::size_t> gt_map;  // empty when no ground truth is linked

  // 1-based rank of `candidate` in query q's list; 0 if absent.
  std::size_t rank_of(std::size_t q, std::size_t candidate) const;
};

// True when b's per-query order is consistent with a's scores up to `tol`
// and vice versa (candidates whose scores differ by <= tol may swap).
bool rankings_match(const RankingResult& a, const RankingResult& b, double tol);

// Minimal fixed-thread parallel loop with deterministic per-index outputs.
// threads == 0 picks hardware concurrency; threads <= 1 runs inline.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace bilirank
