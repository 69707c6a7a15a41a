#pragma once

#include <string>

#include "aqg/examples.hpp"

namespace aqg {

// Definition files are UTF-8 JSON with sparse structure constants and
// complex scalars as [re, im] pairs:
//
//   {
//     "name": "group_z2",
//     "dimension": 2,
//     "basis": ["e", "g"],
//     "unit": [[1, 0], [0, 0]],
//     "mult":  [{"i":0,"j":0,"terms":[{"k":0,"c":[1,0]}]}, ...],
//     "star":  [{"i":0,"terms":[{"j":0,"c":[1,0]}]}, ...],
//     "comult":[{"i":0,"terms":[{"p":0,"q":0,"c":[1,0]}]}, ...]
//   }
//
// Serialization is deterministic (fixed key order, entries sorted by index,
// exact terms only), so generate/parse round trips are byte-identical.

std::string serialize_definition(const AlgebraWithComult& input,
                                 const std::string& name);

/// Parse a definition document; throws PARSE_ERROR / SCHEMA_ERROR.
AlgebraWithComult parse_definition(const std::string& text);

/// Load a definition file and pre-check the *-algebra axioms; throws
/// AXIOM_ERROR (as REJECTED_AXIOM) when they fail.
AlgebraWithComult load_definition(const std::string& path, double tol);

void write_definition(const std::string& path, const AlgebraWithComult& input,
                      const std::string& name);

}  // namespace aqg
