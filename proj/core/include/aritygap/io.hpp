#pragma once

#include <iosfwd>
#include <string>

#include "aritygap/boolfn.hpp"
#include "aritygap/finite_function.hpp"
#include "aritygap/order.hpp"

namespace aritygap {

// Table files:
//   aritygap-table v1
//   domain: 0 1
//   codomain: 0 1            (or: codomain: rational)
//   arity: 2
//   kind: function           (optional; function | setfunction | mobius)
//   table:
//   0 0 -> 0
//   ...
// One row per argument tuple, every tuple exactly once; canonical output is
// in lexicographic tuple order. Values are codomain symbols, or rationals
// "p" / "p/q" for rational codomains.
//
// Poset files:
//   aritygap-poset v1
//   elements: a b c
//   covers:
//   a < b
//   ...

enum class TableKind { function, setfunction, mobius };
const char* table_kind_name(TableKind kind);

struct TableFile {
  TableKind kind = TableKind::function;
  FiniteFunction fn;
};

TableFile parse_table(std::istream& in);
TableFile parse_table_file(const std::string& path);
void write_table(std::ostream& out, const FiniteFunction& fn,
                 TableKind kind = TableKind::function);
std::string table_to_string(const FiniteFunction& fn, TableKind kind = TableKind::function);

// setfunction / mobius kinds carry their 2^n values on a two-element domain
// with a rational codomain.
SetFunction set_function_of(const TableFile& file);
MobiusCoefficients mobius_of(const TableFile& file);
FiniteFunction table_of(const SetFunction& v);
FiniteFunction table_of(const MobiusCoefficients& m);

Poset parse_poset(std::istream& in);
Poset parse_poset_file(const std::string& path);
void write_poset(std::ostream& out, const Poset& p);
std::string poset_to_string(const Poset& p);

}  // namespace aritygap
