#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "platek/denot.hpp"
#include "platek/optree.hpp"
#include "platek/term.hpp"
#include "platek/types.hpp"

namespace platek {

/// Small deterministic generator (splitmix64); identical streams on every
/// platform for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// Uniform draw from [0, n); n >= 1.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::uint64_t state_;
};

struct CorpusParams {
  std::size_t max_term_size = 7;
  int type_rank_bound = 2;
  int type_size_bound = 7;  // binder candidate types are capped at this size
  std::vector<std::string> oracle_names = {"exists2", "mu"};
  std::uint64_t base_bound = 1;
  std::uint64_t enumeration_budget = 1'000'000;
  std::uint64_t fuel = 10000;
  std::uint64_t seed = 0x9e3779b9;
  std::size_t sample_count = 0;  // 0 = exhaustive enumeration
};

/// Candidate types for binder annotations: the closure of {0} under
/// arrows within the rank and size bounds.
std::vector<Type> candidate_types(int rank_bound, int size_bound);

/// All well-typed closed terms of type 0 with at most max_term_size
/// nodes, over the base constants and the named oracles, with binder
/// annotations drawn from the candidate types.
std::vector<Term> enumerate_closed_terms(const CorpusParams& params,
                                         const OracleTable& oracles);

/// Seeded well-typed term generation for property suites.
class TermGen {
 public:
  TermGen(std::uint64_t seed, const CorpusParams& params,
          const OracleTable& oracles);

  /// A closed term of the requested type within the size budget.
  Term closed_term(const Type& type, std::size_t size_budget);
  /// A term of the requested type that may use the given context
  /// variables.
  Term term_in_context(const Type& type, const std::vector<std::pair<std::string, Type>>& ctx,
                       std::size_t size_budget);
  Type random_candidate_type();

  Rng& rng() { return rng_; }

 private:
  Term gen(const Type& type, std::vector<std::pair<std::string, Type>>& ctx,
           std::size_t budget, int depth);
  Rng rng_;
  std::vector<Type> candidates_;
  const OracleTable& oracles_;
  int fresh_ = 0;
};

struct FincheckReport {
  std::string header;
  std::uint64_t total = 0;
  std::uint64_t agree = 0;
  std::uint64_t disagree = 0;
  std::uint64_t inconclusive = 0;
  std::uint64_t budget_exceeded = 0;
  // term text plus verdict detail for every non-agreeing term
  std::vector<std::pair<std::string, std::string>> failures;

  bool clean() const { return disagree == 0 && inconclusive == 0; }
  std::string summary() const;
};

/// Runs the denotational/operational agreement check over the corpus:
/// exhaustive when sample_count is 0, otherwise seeded random sampling.
FincheckReport run_fincheck(const CorpusParams& params,
                            const OracleTable& oracles);

}  // namespace platek
