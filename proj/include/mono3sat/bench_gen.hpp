#pragma once

#include "mono3sat/formula.hpp"

#include <cstdint>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mono3sat {

class GenError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Portable seeded stream: std::mt19937_64 (its output sequence is fixed by
/// the C++ standard) with unbiased rejection sampling for bounded draws, so a
/// seed reproduces the same numbers on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  bool coin() { return (next() >> 63) != 0; }

private:
  std::mt19937_64 engine_;
};

struct GenConfig {
  std::uint32_t variable_count = 3;
  std::uint32_t clause_count = 0;
  std::uint64_t seed = 0;

  /// Throws GenError unless at least 3 variables and 3 * clauses <= 4 * vars.
  void validate() const;
};

/// A random 3-SAT-4 instance: each clause takes 3 distinct variables that
/// still have occurrence budget, with independent random polarities.
CnfFormula generate(const GenConfig &cfg);

struct PipelineBlowup {
  std::string pipeline; // mono23sat4, mono3sat5, mono3sat5-compact, mono3sat4
  std::uint32_t out_vars = 0;
  std::size_t out_clauses = 0;
  double millis = 0;
  std::uint32_t expected_vars = 0;
  std::size_t expected_clauses = 0;

  bool identity_holds() const noexcept {
    return out_vars == expected_vars && out_clauses == expected_clauses;
  }
};

struct BlowupRecord {
  std::uint32_t input_vars = 0;
  std::size_t input_clauses = 0;
  std::size_t mixed = 0;
  std::size_t pos2 = 0;
  std::size_t neg2 = 0;
  std::vector<PipelineBlowup> pipelines;

  bool identities_hold() const noexcept;
};

/// Runs every pipeline on a 3-SAT-4 formula and compares the output sizes with
/// their closed forms.
BlowupRecord blowup_report(const CnfFormula &f);

inline constexpr std::string_view kBlowupCsvHeader =
    "seed,input_vars,input_clauses,mixed,pos2,neg2,pipeline,out_vars,out_clauses,millis";

void write_csv_rows(std::ostream &out, std::uint64_t seed, const BlowupRecord &r);

} // namespace mono3sat
