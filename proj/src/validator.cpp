#include "mono3sat/validator.hpp"

namespace mono3sat {

Profile Profile::get(ProfileName name) noexcept {
  switch (name) {
  case ProfileName::ThreeSat4:
    return {name, WidthRule::Exactly3, false, 4};
  case ProfileName::Mono23Sat4:
    return {name, WidthRule::TwoOrThree, true, 4};
  case ProfileName::Mono3Sat5:
    return {name, WidthRule::Exactly3, true, 5};
  case ProfileName::Mono3Sat4:
    break;
  }
  return {ProfileName::Mono3Sat4, WidthRule::Exactly3, true, 4};
}

std::optional<Profile> Profile::parse(std::string_view name) {
  for (auto p : {ProfileName::ThreeSat4, ProfileName::Mono23Sat4, ProfileName::Mono3Sat5,
                 ProfileName::Mono3Sat4}) {
    auto profile = get(p);
    if (profile.id() == name)
      return profile;
  }
  return std::nullopt;
}

std::string_view Profile::id() const noexcept {
  switch (name) {
  case ProfileName::ThreeSat4:
    return "3sat4";
  case ProfileName::Mono23Sat4:
    return "mono23sat4";
  case ProfileName::Mono3Sat5:
    return "mono3sat5";
  case ProfileName::Mono3Sat4:
    return "mono3sat4";
  }
  return "?";
}

bool Profile::width_ok(std::size_t w) const noexcept {
  return width == WidthRule::Exactly3 ? w == 3 : (w == 2 || w == 3);
}

ViolationReport check_profile(const CnfFormula &f, const Profile &p) {
  ViolationReport report;
  const auto &clauses = f.clauses();
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    const auto kind = classify_clause(clauses[i]);
    if (!p.width_ok(kind.width))
      report.violations.push_back({ViolationKind::Width, i,
                                   "clause " + std::to_string(i) + " has width " +
                                       std::to_string(kind.width)});
    if (p.monotone && kind.polarity == Polarity::Mixed)
      report.violations.push_back(
          {ViolationKind::Mixed, i, "clause " + std::to_string(i) + " is mixed"});
  }
  const OccurrenceTable occ(f);
  for (std::uint32_t v = 1; v <= occ.variable_count(); ++v) {
    const auto total = occ.total(Variable(v));
    if (total > p.occurrence_cap)
      report.violations.push_back({ViolationKind::Occurrence, v,
                                   "variable " + std::to_string(v) + " occurs " +
                                       std::to_string(total) + " times (cap " +
                                       std::to_string(p.occurrence_cap) + ")"});
  }
  return report;
}

std::string format_violation(const Violation &v) {
  const char *kind = v.kind == ViolationKind::Width   ? "width"
                     : v.kind == ViolationKind::Mixed ? "mixed"
                                                      : "occurrence";
  return std::string(kind) + ": " + v.detail;
}

} // namespace mono3sat
