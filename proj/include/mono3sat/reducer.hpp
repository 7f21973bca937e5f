#pragma once

#include "mono3sat/formula.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mono3sat {

class ReductionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Hands out consecutive fresh variable indices.
class FreshAllocator {
public:
  explicit FreshAllocator(std::uint32_t next_index);

  /// Starts just above every variable of f, including unreferenced declared ones.
  static FreshAllocator after(const CnfFormula &f) { return FreshAllocator(f.variable_count() + 1); }

  Variable allocate();
  std::uint32_t next_index() const noexcept { return next_; }
  /// Highest index handed out so far, or next_index() - 1 if none.
  std::uint32_t ceiling() const noexcept { return next_ - 1; }

private:
  std::uint32_t next_;
};

enum class Rule { Gold, R1, R2, R3, R3Compact, GadgetTrue, GadgetFalse };

std::string_view rule_name(Rule r) noexcept;

/// Occurrence accounting for one rule application to a 2-clause {x, y}.
/// delta_x / delta_y: extra appearances of x / y beyond the replaced clause;
/// delta_new: the most appearances of any fresh variable.
struct RuleStats {
  int delta_x;
  int delta_y;
  int delta_new;
  int clauses_added;
  int vars_added;

  bool operator==(const RuleStats &) const = default;
};

/// R1, R2, R3 and R3Compact only.
RuleStats rule_stats(Rule r);

enum class R3Mode { Standard, Compact };

/// Splits a mixed 3-clause C+ ∪ C- into (C+ ∪ {u}, C- ∪ {¬u}) with u fresh.
/// The first element is always the 3-clause, the second the 2-clause.
std::pair<Clause, Clause> gold_step(const Clause &c, FreshAllocator &alloc);

/// {x,y} -> {x,y,u},{x,y,v},{x,y,w},{¬u,¬v,¬w}; negative input is dual.
std::vector<Clause> apply_r1(const Clause &c, FreshAllocator &alloc);
/// {x,y} -> {x,y,u},{x,y,v}, R1({¬u,¬v}); negative input is dual.
std::vector<Clause> apply_r2(const Clause &c, FreshAllocator &alloc);
/// {x,y} -> {x,y,u}, R2({¬u,¬v}), R2({¬u,¬w}), R2({v,w}); negative input is
/// dual. Compact mode uses R1 for the last replacement.
std::vector<Clause> apply_r3(const Clause &c, FreshAllocator &alloc,
                             R3Mode mode = R3Mode::Standard);

enum class GadgetSign { ForceTrue, ForceFalse };

/// The 25-clause forcing collection over 21 template variables. Every
/// satisfying assignment sets the designated variable to true (ForceTrue) or
/// false (ForceFalse, the literal-wise negation).
struct GadgetTemplate {
  struct Slot {
    std::uint8_t var; // index into names
    bool positive;
  };
  using TemplateClause = std::array<Slot, 3>;

  static constexpr std::size_t kClauses = 25;
  static constexpr std::size_t kVariables = 21;

  /// Template variable names in first-appearance order; also allocation order.
  std::array<std::string_view, kVariables> names;
  std::array<TemplateClause, kClauses> clauses;
  std::uint8_t designated;
  GadgetSign sign;

  static const GadgetTemplate &force_true();
  static const GadgetTemplate &force_false();
  static const GadgetTemplate &get(GadgetSign sign);

  /// Slot index for a template name such as "z" or "l"; throws if unknown.
  std::uint8_t slot(std::string_view name) const;
};

struct GadgetInstance {
  std::vector<Clause> clauses;
  Variable designated;
  /// Concrete variable for each template slot, in GadgetTemplate::names order.
  std::vector<Variable> mapping;
};

GadgetInstance instantiate_gadget(const GadgetTemplate &tmpl, FreshAllocator &alloc);

struct TraceStep {
  Rule rule;
  /// Index of the pipeline-input clause this step descends from.
  std::size_t source_clause;
  /// Output clause indices still attributed to this step.
  std::vector<std::size_t> produced;
  std::vector<Variable> allocated;
};

struct ReductionTrace {
  std::vector<TraceStep> steps;
  std::uint32_t original_variable_ceiling = 0;

  /// One "trace <clause-index> <rule-name> <source-clause-index>" line per
  /// produced clause, ascending by clause index.
  std::vector<std::string> comment_lines() const;
};

struct Reduction {
  CnfFormula formula;
  ReductionTrace trace;
};

/// Applies the Gold split to each mixed clause; input must be 3-SAT-4.
Reduction eliminate_mixed(const CnfFormula &f);

/// 3-SAT-4 -> Monotone 3-SAT-5.
Reduction to_monotone_3sat5(const CnfFormula &f, R3Mode mode = R3Mode::Standard);
/// 3-SAT-4 -> Monotone 3-SAT-4.
Reduction to_monotone_3sat4(const CnfFormula &f);

/// Entry points that accept Monotone (2,3)-SAT-4 input directly.
Reduction replace_two_clauses_r3(const CnfFormula &mono23, R3Mode mode = R3Mode::Standard);
Reduction replace_two_clauses_gadget(const CnfFormula &mono23);

} // namespace mono3sat
