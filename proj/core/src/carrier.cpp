#include "aritygap/carrier.hpp"

#include <algorithm>

#include "aritygap/error.hpp"

namespace aritygap {

Carrier::Carrier(std::string name, std::vector<std::string> elements)
    : name_(std::move(name)), elements_(std::move(elements)) {
  if (elements_.empty()) fail(ErrorCode::invalid_argument, "carrier needs at least one element");
  for (const auto& symbol : elements_) {
    if (symbol.empty() || symbol.find_first_of(" \t\r\n") != std::string::npos) {
      fail(ErrorCode::invalid_argument, "carrier symbol must be a nonempty token");
    }
  }
  auto sorted = elements_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    fail(ErrorCode::invalid_argument, "carrier elements must be distinct");
  }
}

Carrier Carrier::boolean() { return Carrier("bool", {"0", "1"}); }

Carrier Carrier::range(std::size_t size) {
  std::vector<std::string> elements;
  elements.reserve(size);
  for (std::size_t i = 0; i < size; ++i) elements.push_back(std::to_string(i));
  return Carrier("range" + std::to_string(size), std::move(elements));
}

const std::string& Carrier::symbol(std::size_t index) const {
  if (index >= elements_.size()) fail(ErrorCode::index_out_of_range, "carrier index out of range");
  return elements_[index];
}

std::optional<std::size_t> Carrier::index_of(std::string_view symbol) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == symbol) return i;
  }
  return std::nullopt;
}

Codomain Codomain::rational() { return Codomain(); }

Codomain Codomain::carrier(Carrier c) {
  Codomain out;
  out.carrier_ = std::move(c);
  return out;
}

const Carrier& Codomain::as_carrier() const {
  if (!carrier_) fail(ErrorCode::invalid_argument, "codomain is rational-valued, not a carrier");
  return *carrier_;
}

}  // namespace aritygap
