#pragma once

// JSON form of graded algebras:
//
//   {"field": {"type": "GF", "p": 2} | {"type": "Q"},
//    "group": {"names": [...], "table": [[int]]},
//    "components": {name: dim, ...},
//    "structure": [[g, i, h, j, [coeff, ...]], ...],
//    "unit": [coeff, ...],
//    "meta": {key: string, ...}}
//
// g and h are element names (indices are accepted on input), i and j are
// positions within R_g and R_h, and the coefficient list is over the basis of
// R_gh. Zero products are omitted. GF(p) scalars are integers in [0, p),
// rationals are strings "n" or "n/d".

#include <string>
#include <variant>

#include "json.hpp"

#include "graded/algebra.hpp"

namespace graded {

using Json = nlohmann::ordered_json;

using AnyAlgebra = std::variant<GradedAlgebra<PrimeField>, GradedAlgebra<RationalField>>;

template <Field F>
Json scalar_to_json(const F& f, const typename F::Elem& x);

template <Field F>
Json vector_to_json(const F& f, const Vec<F>& v);

template <Field F>
Json algebra_to_json(const GradedAlgebra<F>& a);

// Shape-checks everything (InvalidInput on any malformation) but does not run
// the group or associativity scans.
AnyAlgebra algebra_from_json(const Json& j);

// Two-space indentation with a trailing newline.
std::string dump_json(const Json& j);

AnyAlgebra read_algebra_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace graded
