#include "aritygap/extend.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "aritygap/error.hpp"
#include "aritygap/fnalg.hpp"

namespace aritygap {

namespace {

void check_point(const MobiusCoefficients& m, std::span<const Rational> x) {
  if (x.size() != m.n) fail(ErrorCode::arity_mismatch, "point dimension differs from n");
  if (m.values.size() != (std::size_t(1) << m.n)) {
    fail(ErrorCode::arity_mismatch, "coefficient count is not 2^n");
  }
}

}  // namespace

Rational eval_owen(const OwenExtension& p, std::span<const Rational> x) {
  const auto& m = p.coefficients;
  check_point(m, x);
  Rational sum(0);
  for (std::uint32_t mask = 0; mask < m.values.size(); ++mask) {
    if (m.values[mask] == Rational(0)) continue;
    Rational term = m.values[mask];
    for (std::size_t k = 0; k < m.n; ++k) {
      if (mask & (std::uint32_t(1) << k)) term *= x[k];
    }
    sum += term;
  }
  return sum;
}

Rational eval_lovasz(const LovaszExtension& f, std::span<const Rational> x) {
  const auto& m = f.coefficients;
  check_point(m, x);
  Rational sum(0);
  for (std::uint32_t mask = 0; mask < m.values.size(); ++mask) {
    if (m.values[mask] == Rational(0)) continue;
    if (mask == 0) {
      sum += m.values[mask];
      continue;
    }
    Rational least;
    bool first = true;
    for (std::size_t k = 0; k < m.n; ++k) {
      if (!(mask & (std::uint32_t(1) << k))) continue;
      if (first || x[k] < least) least = x[k];
      first = false;
    }
    sum += m.values[mask] * least;
  }
  return sum;
}

FiniteFunction restrict_to_cube(const MobiusCoefficients& m) {
  return from_set_function(zeta(m));
}

SimplexId simplex_of(std::span<const Rational> x) {
  SimplexId id;
  id.order.resize(x.size());
  std::iota(id.order.begin(), id.order.end(), std::size_t(0));
  std::stable_sort(id.order.begin(), id.order.end(),
                   [&](std::size_t lhs, std::size_t rhs) { return x[lhs] < x[rhs]; });
  return id;
}

bool essential_in_extension(const LovaszExtension& f, std::size_t index) {
  return essential_from_mobius(f.coefficients, index);
}

std::size_t arity_gap_of_cube_restriction(const MobiusCoefficients& m) {
  return arity_gap(restrict_to_cube(m));
}

const char* lovasz_form_name(LovaszForm form) {
  switch (form) {
    case LovaszForm::form_i: return "form_i";
    case LovaszForm::form_ii: return "form_ii";
    case LovaszForm::form_iii: return "form_iii";
    case LovaszForm::form_iv: return "form_iv";
    case LovaszForm::form_v: return "form_v";
  }
  return "unknown";
}

MobiusCoefficients instantiate_lovasz_form(LovaszForm form, std::size_t n, const Rational& a,
                                           const Rational& b, const Rational& c,
                                           const std::vector<std::size_t>& permutation) {
  if (permutation.size() != n) fail(ErrorCode::arity_mismatch, "permutation size differs from n");
  MobiusCoefficients m{n, std::vector<Rational>(std::size_t(1) << n, Rational(0))};
  const auto var = [&](std::size_t k) { return std::uint32_t(1) << permutation[k]; };
  m.values[0] = a;
  switch (form) {
    case LovaszForm::form_i: {
      if (n < 2) fail(ErrorCode::wrong_arity, "alternating template needs n >= 2");
      // Constant term a, then ((a-b)/2) * (-2)^|S| on nonempty S.
      const Rational lambda = (a - b) / 2;
      for (std::uint32_t mask = 1; mask < m.values.size(); ++mask) {
        Rational coeff = lambda;
        for (int k = 0; k < std::popcount(mask); ++k) coeff *= -2;
        m.values[mask] = coeff;
      }
      break;
    }
    case LovaszForm::form_ii:
      if (n != 2) fail(ErrorCode::wrong_arity, "form_ii is binary");
      m.values[var(0)] = b - a;
      m.values[var(0) | var(1)] = a - b;
      break;
    case LovaszForm::form_iii:
      if (n != 3) fail(ErrorCode::wrong_arity, "form_iii is ternary");
      m.values[var(0) | var(1)] = b - a;
      m.values[var(0) | var(2)] = b - a;
      m.values[var(1) | var(2)] = b - a;
      m.values[var(0) | var(1) | var(2)] = (a - b) * 2;
      break;
    case LovaszForm::form_iv:
      if (n != 3) fail(ErrorCode::wrong_arity, "form_iv is ternary");
      m.values[var(0)] = b - a;
      m.values[var(1)] = b - a;
      m.values[var(0) | var(1)] = a - b;
      m.values[var(0) | var(2)] = a - b;
      m.values[var(1) | var(2)] = a - b;
      m.values[var(0) | var(1) | var(2)] = (b - a) * 2;
      break;
    case LovaszForm::form_v:
      if (n != 2) fail(ErrorCode::wrong_arity, "form_v is binary");
      m.values[var(0)] = b - a;
      m.values[var(1)] = c - a;
      m.values[var(0) | var(1)] = a * 2 - b - c;
      break;
  }
  return m;
}

std::optional<LovaszGap2Match> classify_lovasz_gap2(const LovaszExtension& f) {
  const auto& m = f.coefficients;
  const std::size_t n = m.n;
  if (m.values.size() != (std::size_t(1) << n)) {
    fail(ErrorCode::arity_mismatch, "coefficient count is not 2^n");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!essential_from_mobius(m, i)) {
      fail(ErrorCode::inessential_variable, "input must depend on all of its variables");
    }
  }
  if (n < 2) return std::nullopt;

  const Rational a = m.values[0];

  // Parameters are read off designated coefficients, then the whole vector is
  // verified against the regenerated template.
  const auto matches = [&](LovaszForm form, const Rational& aa, const Rational& bb,
                           const Rational& cc,
                           const std::vector<std::size_t>& perm) -> bool {
    return instantiate_lovasz_form(form, n, aa, bb, cc, perm) == m;
  };

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t(0));

  {
    const Rational lambda = m.values[1] / -2;  // coefficient of the first singleton
    const Rational b = a - lambda * 2;
    if (b != a && matches(LovaszForm::form_i, a, b, Rational(0), perm)) {
      return LovaszGap2Match{LovaszForm::form_i, a, b, Rational(0), perm};
    }
  }

  const auto try_form = [&](LovaszForm form, std::size_t arity,
                            const auto& params) -> std::optional<LovaszGap2Match> {
    if (n != arity) return std::nullopt;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t(0));
    do {
      const auto bc = params(p);
      if (matches(form, a, bc.first, bc.second, p)) {
        return LovaszGap2Match{form, a, bc.first, bc.second, p};
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return std::nullopt;
  };

  if (auto hit = try_form(LovaszForm::form_ii, 2,
                          [&](const std::vector<std::size_t>& p) {
                            return std::pair{a + m.values[std::uint32_t(1) << p[0]], Rational(0)};
                          })) {
    return hit;
  }
  if (auto hit = try_form(LovaszForm::form_iii, 3,
                          [&](const std::vector<std::size_t>& p) {
                            const std::uint32_t pair01 =
                                (std::uint32_t(1) << p[0]) | (std::uint32_t(1) << p[1]);
                            return std::pair{a + m.values[pair01], Rational(0)};
                          })) {
    return hit;
  }
  if (auto hit = try_form(LovaszForm::form_iv, 3,
                          [&](const std::vector<std::size_t>& p) {
                            return std::pair{a + m.values[std::uint32_t(1) << p[0]], Rational(0)};
                          })) {
    return hit;
  }
  if (auto hit = try_form(LovaszForm::form_v, 2,
                          [&](const std::vector<std::size_t>& p) {
                            return std::pair{a + m.values[std::uint32_t(1) << p[0]],
                                             a + m.values[std::uint32_t(1) << p[1]]};
                          })) {
    return hit;
  }
  return std::nullopt;
}

std::optional<std::pair<Rational, Rational>> classify_nondecreasing_lovasz(
    const LovaszExtension& f) {
  const auto& m = f.coefficients;
  const SetFunction v = zeta(m);
  for (std::uint32_t mask = 0; mask < v.values.size(); ++mask) {
    for (std::size_t k = 0; k < m.n; ++k) {
      const std::uint32_t bit = std::uint32_t(1) << k;
      if (!(mask & bit) && v.values[mask] > v.values[mask | bit]) {
        fail(ErrorCode::not_order_preserving, "cube restriction must be nondecreasing");
      }
    }
  }
  if (m.n != 3) return std::nullopt;
  const Rational a = m.values[0];
  const Rational b = a + m.values[0b011];
  if (b == a) return std::nullopt;
  std::vector<std::size_t> identity{0, 1, 2};
  if (instantiate_lovasz_form(LovaszForm::form_iii, 3, a, b, Rational(0), identity) == m) {
    return std::pair{a, b};
  }
  return std::nullopt;
}

}  // namespace aritygap
