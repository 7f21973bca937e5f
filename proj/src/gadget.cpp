#include "mono3sat/reducer.hpp"

#include <algorithm>

namespace mono3sat {

namespace {

struct TableClause {
  std::array<std::string_view, 3> vars;
  bool positive;
};

// The forcing collection as listed, clauses 1..25. "l" stands for ell.
constexpr std::array<TableClause, GadgetTemplate::kClauses> kTable{{
    {{"u", "w", "z"}, true},  {{"u", "v", "z"}, true},  {{"w", "v", "g"}, false},
    {{"w", "v", "h"}, false}, {{"w", "v", "i"}, false}, {{"g", "h", "i"}, true},
    {{"m", "n", "g"}, false}, {{"m", "n", "h"}, false}, {{"m", "n", "i"}, false},
    {{"m", "a", "b"}, true},  {{"n", "a", "b"}, true},  {{"u", "a", "r"}, false},
    {{"u", "b", "r"}, false}, {{"r", "z", "f"}, true},  {{"d", "e", "a"}, false},
    {{"d", "e", "b"}, false}, {{"p", "q", "d"}, true},  {{"p", "q", "e"}, true},
    {{"f", "p", "c"}, false}, {{"f", "q", "c"}, false}, {{"r", "c", "j"}, true},
    {{"j", "p", "k"}, false}, {{"j", "q", "k"}, false}, {{"k", "c", "l"}, true},
    {{"l", "j", "f"}, false},
}};

GadgetTemplate build(GadgetSign sign) {
  GadgetTemplate t{};
  t.sign = sign;
  std::size_t named = 0;
  auto slot_of = [&](std::string_view name) -> std::uint8_t {
    for (std::size_t i = 0; i < named; ++i)
      if (t.names[i] == name)
        return static_cast<std::uint8_t>(i);
    t.names.at(named) = name;
    return static_cast<std::uint8_t>(named++);
  };
  const bool flip = sign == GadgetSign::ForceFalse;
  for (std::size_t c = 0; c < kTable.size(); ++c)
    for (std::size_t k = 0; k < 3; ++k)
      t.clauses[c][k] = {slot_of(kTable[c].vars[k]), kTable[c].positive != flip};
  if (named != GadgetTemplate::kVariables)
    throw ReductionError("gadget table does not name 21 variables");
  t.designated = slot_of("z");
  return t;
}

} // namespace

const GadgetTemplate &GadgetTemplate::force_true() {
  static const GadgetTemplate t = build(GadgetSign::ForceTrue);
  return t;
}

const GadgetTemplate &GadgetTemplate::force_false() {
  static const GadgetTemplate t = build(GadgetSign::ForceFalse);
  return t;
}

const GadgetTemplate &GadgetTemplate::get(GadgetSign sign) {
  return sign == GadgetSign::ForceTrue ? force_true() : force_false();
}

std::uint8_t GadgetTemplate::slot(std::string_view name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end())
    throw ReductionError("unknown gadget variable '" + std::string(name) + "'");
  return static_cast<std::uint8_t>(it - names.begin());
}

GadgetInstance instantiate_gadget(const GadgetTemplate &tmpl, FreshAllocator &alloc) {
  std::vector<Variable> mapping;
  mapping.reserve(GadgetTemplate::kVariables);
  for (std::size_t i = 0; i < GadgetTemplate::kVariables; ++i)
    mapping.push_back(alloc.allocate());

  std::vector<Clause> clauses;
  clauses.reserve(GadgetTemplate::kClauses);
  for (const auto &tc : tmpl.clauses)
    clauses.push_back(Clause{Literal(mapping[tc[0].var], tc[0].positive),
                             Literal(mapping[tc[1].var], tc[1].positive),
                             Literal(mapping[tc[2].var], tc[2].positive)});
  const Variable z = mapping[tmpl.designated];
  return {std::move(clauses), z, std::move(mapping)};
}

} // namespace mono3sat
