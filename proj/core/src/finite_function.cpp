#include "aritygap/finite_function.hpp"

#include "aritygap/error.hpp"

namespace aritygap {

namespace {
constexpr std::size_t kMaxTableSize = std::size_t(1) << 26;
}

std::size_t table_size_for(std::size_t domain_size, std::size_t arity) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (size > kMaxTableSize / domain_size) {
      fail(ErrorCode::budget_exceeded, "function table too large");
    }
    size *= domain_size;
  }
  return size;
}

FiniteFunction::FiniteFunction(Carrier domain, std::size_t arity, Codomain codomain,
                               std::vector<Rational> table)
    : domain_(std::move(domain)),
      arity_(arity),
      codomain_(std::move(codomain)),
      table_(std::move(table)) {
  if (arity_ == 0) fail(ErrorCode::invalid_argument, "arity must be at least 1");
  const std::size_t expected = table_size_for(domain_.size(), arity_);
  if (table_.size() != expected) {
    fail(ErrorCode::arity_mismatch,
         "table has " + std::to_string(table_.size()) + " entries, expected " +
             std::to_string(expected));
  }
  if (codomain_.is_carrier()) {
    const auto limit = static_cast<std::int64_t>(codomain_.as_carrier().size());
    for (const auto& v : table_) {
      if (!is_integer(v) || v.numerator() < 0 || v.numerator() >= limit) {
        fail(ErrorCode::invalid_argument, "table value is not a codomain element index");
      }
    }
  }
  strides_.resize(arity_);
  std::size_t stride = 1;
  for (std::size_t i = arity_; i-- > 0;) {
    strides_[i] = stride;
    stride *= domain_.size();
  }
}

FiniteFunction FiniteFunction::tabulate(
    Carrier domain, std::size_t arity, Codomain codomain,
    const std::function<Rational(std::span<const std::size_t>)>& fn) {
  const std::size_t size = table_size_for(domain.size(), arity);
  std::vector<Rational> table;
  table.reserve(size);
  Tuple tuple(arity, 0);
  for (std::size_t index = 0; index < size; ++index) {
    table.push_back(fn(tuple));
    for (std::size_t pos = arity; pos-- > 0;) {
      if (++tuple[pos] < domain.size()) break;
      tuple[pos] = 0;
    }
  }
  return FiniteFunction(std::move(domain), arity, std::move(codomain), std::move(table));
}

const Rational& FiniteFunction::value(std::size_t index) const {
  if (index >= table_.size()) fail(ErrorCode::index_out_of_range, "tuple index out of range");
  return table_[index];
}

const Rational& FiniteFunction::value(std::span<const std::size_t> tuple) const {
  return table_[index_of(tuple)];
}

std::size_t FiniteFunction::value_index(std::size_t index) const {
  if (!codomain_.is_carrier()) {
    fail(ErrorCode::invalid_argument, "value_index needs a carrier codomain");
  }
  return static_cast<std::size_t>(value(index).numerator());
}

std::size_t FiniteFunction::stride(std::size_t position) const {
  if (position >= arity_) fail(ErrorCode::index_out_of_range, "variable index out of range");
  return strides_[position];
}

std::size_t FiniteFunction::digit(std::size_t index, std::size_t position) const {
  return (index / stride(position)) % domain_.size();
}

std::size_t FiniteFunction::index_of(std::span<const std::size_t> tuple) const {
  if (tuple.size() != arity_) fail(ErrorCode::arity_mismatch, "tuple length differs from arity");
  std::size_t index = 0;
  for (std::size_t i = 0; i < arity_; ++i) {
    if (tuple[i] >= domain_.size()) fail(ErrorCode::index_out_of_range, "tuple entry out of range");
    index += tuple[i] * strides_[i];
  }
  return index;
}

void FiniteFunction::decode(std::size_t index, std::span<std::size_t> out) const {
  if (out.size() != arity_) fail(ErrorCode::arity_mismatch, "tuple length differs from arity");
  for (std::size_t i = 0; i < arity_; ++i) {
    out[i] = (index / strides_[i]) % domain_.size();
  }
}

Tuple FiniteFunction::decode(std::size_t index) const {
  Tuple out(arity_, 0);
  decode(index, out);
  return out;
}

}  // namespace aritygap
