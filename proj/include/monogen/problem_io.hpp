#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monogen/constraints.hpp"
#include "monogen/generation.hpp"

namespace monogen {

// The on-disk JSON document; see README for the schema.  Rationals appear as
// bare integers or "p/q" strings, never as floats.
struct ProblemFile {
  std::optional<IntVec> box_c;  // engaged: explicit caps; empty: "auto"
  Mode mode = Mode::MaxFeasible;
  std::vector<Constraint> constraints;
};

// Throws std::invalid_argument with a path-style context on any malformed or
// unknown field.
ProblemFile parse_problem(const std::string& json_text);
std::string serialize_problem(const ProblemFile& pf);

// Validates every constraint and resolves the box ("auto" derives it from the
// constraints; an explicit box is honored exactly).
InequalitySystem instantiate(const ProblemFile& pf);

struct OutputRecord {
  EmissionTag tag;
  IntVec vec;
};

std::string format_record(const OutputRecord& r);
OutputRecord parse_record(const std::string& line);

}  // namespace monogen
