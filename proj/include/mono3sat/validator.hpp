#pragma once

#include "mono3sat/formula.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mono3sat {

enum class ProfileName { ThreeSat4, Mono23Sat4, Mono3Sat5, Mono3Sat4 };

enum class WidthRule { Exactly3, TwoOrThree };

/// A syntactic r-SAT-s class: clause widths, monotonicity, and the cap on
/// how many clauses a single variable may appear in.
struct Profile {
  ProfileName name;
  WidthRule width;
  bool monotone;
  std::uint32_t occurrence_cap;

  static Profile get(ProfileName name) noexcept;
  /// Accepts the command-line names 3sat4, mono23sat4, mono3sat5, mono3sat4.
  static std::optional<Profile> parse(std::string_view name);

  std::string_view id() const noexcept;
  bool width_ok(std::size_t w) const noexcept;
};

enum class ViolationKind { Width, Mixed, Occurrence };

struct Violation {
  ViolationKind kind;
  /// Clause index for Width/Mixed; variable index for Occurrence.
  std::size_t subject;
  std::string detail;
};

struct ViolationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  std::size_t size() const noexcept { return violations.size(); }
};

/// All width and monotonicity violations by clause index, followed by all
/// occurrence-cap violations by variable index.
ViolationReport check_profile(const CnfFormula &f, const Profile &p);

inline bool satisfies(const CnfFormula &f, ProfileName p) {
  return check_profile(f, Profile::get(p)).ok();
}

std::string format_violation(const Violation &v);

} // namespace mono3sat
