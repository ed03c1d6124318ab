#pragma once

#include <cstdint>

#include "aritygap/finite_function.hpp"

// Reference answers computed from first principles on the raw table. This
// translation unit deliberately reimplements essentiality, identification and
// support search instead of calling the classifier code it is used to check.
namespace aritygap::oracle {

// ess f minus the best essential arity over identifications of two distinct
// essential variables.
std::size_t oracle_gap(const FiniteFunction& f);

struct QaResult {
  std::size_t value = 0;
  bool exhaustive = false;  // false: support space exceeded the budget and the
                            // factorization fallback was used
};

// Minimum essential arity over every function agreeing with f on the
// repeated-coordinate arguments. Off-diagonal cells range over the values of
// f; a minimal support never needs a fresh value.
QaResult oracle_qa(const FiniteFunction& f, std::uint64_t support_budget = std::uint64_t(1) << 20);

}  // namespace aritygap::oracle
