#pragma once

// JSON encodings shared by the disk cache and the command line.
//
//   polynomial   [[e_z, e_w, "num", "den"], ...] in graded-lex order
//   field elem   {"num": polynomial, "den": polynomial}
//   UniPoly      [[exp, coeff], ...], coeff an integer or a "num/den" string
//   SymFunc1     {"basis": "s", "bound": 8, "terms": [[partition, field elem], ...]}

#include <json.hpp>

#include "charvar/hlv.hpp"

namespace charvar {

using Json = nlohmann::json;

Json bigrat_to_json(const BigRat& x);
BigRat bigrat_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const ZWPoly& p);
ZWPoly zwpoly_from_json(const Json& j);

Json to_json(const FieldElem& f);
FieldElem field_from_json(const Json& j);

Json to_json(const UniPoly& p);
UniPoly unipoly_from_json(const Json& j);

Json to_json(const SymFunc1& f);
SymFunc1 symfunc_from_json(const Json& j);

Json to_json(const MultiSymFunc& f);
MultiSymFunc multisymfunc_from_json(const Json& j);

Json to_json(const KernelResult& kr);
KernelResult kernel_from_json(const Json& j);

/// Compact, key-sorted rendering (nlohmann objects are already key-ordered).
std::string dump_canonical(const Json& j);

}  // namespace charvar
