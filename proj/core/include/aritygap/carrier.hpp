#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace aritygap {

// A finite set of named elements. The element index is the semantic handle;
// symbols only matter for serialization. For chain-ordered uses the element
// order is the chain order.
class Carrier {
public:
  Carrier(std::string name, std::vector<std::string> elements);

  static Carrier boolean();                 // {"0", "1"}
  static Carrier range(std::size_t size);   // {"0", ..., "size-1"}

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::string& symbol(std::size_t index) const;
  const std::vector<std::string>& symbols() const noexcept { return elements_; }
  std::optional<std::size_t> index_of(std::string_view symbol) const;

  // Carriers are interchangeable when their element lists agree.
  bool operator==(const Carrier& other) const { return elements_ == other.elements_; }

private:
  std::string name_;
  std::vector<std::string> elements_;
};

// Value space of a function table: either a finite carrier (table entries are
// element indices) or exact rationals.
class Codomain {
public:
  static Codomain rational();
  static Codomain carrier(Carrier c);

  bool is_rational() const noexcept { return !carrier_.has_value(); }
  bool is_carrier() const noexcept { return carrier_.has_value(); }
  const Carrier& as_carrier() const;

  bool operator==(const Codomain& other) const = default;

private:
  Codomain() = default;
  std::optional<Carrier> carrier_;
};

}  // namespace aritygap
