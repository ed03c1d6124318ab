#include "aritygap/oracle.hpp"

#include <algorithm>
#include <vector>

#include "aritygap/error.hpp"

namespace aritygap::oracle {
namespace {

bool table_depends_on(const std::vector<Rational>& table, std::size_t domain_size,
                      std::size_t stride, std::size_t position_count) {
  (void)position_count;
  for (std::size_t t = 0; t < table.size(); ++t) {
    if ((t / stride) % domain_size != 0) continue;
    for (std::size_t b = 1; b < domain_size; ++b) {
      if (table[t] != table[t + b * stride]) return true;
    }
  }
  return false;
}

std::size_t table_essential_count(const std::vector<Rational>& table, std::size_t domain_size,
                                  std::size_t arity) {
  std::size_t count = 0;
  std::size_t stride = 1;
  for (std::size_t i = arity; i-- > 0;) {
    if (table_depends_on(table, domain_size, stride, arity)) ++count;
    stride *= domain_size;
  }
  return count;
}

std::vector<std::size_t> table_essentials(const std::vector<Rational>& table,
                                          std::size_t domain_size, std::size_t arity) {
  std::vector<std::size_t> strides(arity);
  std::size_t stride = 1;
  for (std::size_t i = arity; i-- > 0;) {
    strides[i] = stride;
    stride *= domain_size;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < arity; ++i) {
    if (table_depends_on(table, domain_size, strides[i], arity)) out.push_back(i);
  }
  return out;
}

std::vector<Rational> identified_table(const std::vector<Rational>& table,
                                       std::size_t domain_size, std::size_t arity, std::size_t i,
                                       std::size_t j) {
  std::vector<std::size_t> strides(arity);
  std::size_t stride = 1;
  for (std::size_t p = arity; p-- > 0;) {
    strides[p] = stride;
    stride *= domain_size;
  }
  std::vector<Rational> out(table.size());
  for (std::size_t t = 0; t < table.size(); ++t) {
    const std::size_t di = (t / strides[i]) % domain_size;
    const std::size_t dj = (t / strides[j]) % domain_size;
    out[t] = table[t + (dj - di) * strides[i]];
  }
  return out;
}

}  // namespace

std::size_t oracle_gap(const FiniteFunction& f) {
  const std::size_t k = f.domain().size();
  const std::size_t n = f.arity();
  const auto essentials = table_essentials(f.table(), k, n);
  if (essentials.size() < 2) {
    fail(ErrorCode::arity_gap_undefined, "arity gap needs at least two essential variables");
  }
  std::size_t best = 0;
  for (const std::size_t i : essentials) {
    for (const std::size_t j : essentials) {
      if (i == j) continue;
      best = std::max(best, table_essential_count(identified_table(f.table(), k, n, i, j), k, n));
    }
  }
  return essentials.size() - best;
}

QaResult oracle_qa(const FiniteFunction& f, std::uint64_t support_budget) {
  const std::size_t k = f.domain().size();
  const std::size_t n = f.arity();

  std::vector<std::size_t> off_diagonal;
  {
    Tuple tuple(n, 0);
    for (std::size_t t = 0; t < f.table_size(); ++t) {
      f.decode(t, tuple);
      bool repeat = n == 1;
      for (std::size_t a = 0; a < n && !repeat; ++a) {
        for (std::size_t b = a + 1; b < n && !repeat; ++b) repeat = tuple[a] == tuple[b];
      }
      if (!repeat) off_diagonal.push_back(t);
    }
  }

  std::vector<Rational> palette(f.table().begin(), f.table().end());
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());

  std::uint64_t combinations = 1;
  bool within_budget = true;
  for (std::size_t c = 0; c < off_diagonal.size() && within_budget; ++c) {
    if (combinations > support_budget / palette.size()) {
      within_budget = false;
    } else {
      combinations *= palette.size();
    }
  }

  if (within_budget) {
    std::vector<Rational> support(f.table());
    std::vector<std::size_t> choice(off_diagonal.size(), 0);
    std::size_t best = n;
    while (true) {
      for (std::size_t c = 0; c < off_diagonal.size(); ++c) {
        support[off_diagonal[c]] = palette[choice[c]];
      }
      best = std::min(best, table_essential_count(support, k, n));
      if (best == 0) break;
      std::size_t pos = off_diagonal.size();
      bool advanced = false;
      while (pos-- > 0) {
        if (++choice[pos] < palette.size()) {
          advanced = true;
          break;
        }
        choice[pos] = 0;
      }
      if (!advanced) break;
    }
    return QaResult{best, true};
  }

  // Fallback: smallest coordinate set whose fibers are constant on the
  // repeated-coordinate arguments.
  std::vector<std::size_t> diagonal;
  {
    std::vector<bool> off(f.table_size(), false);
    for (const std::size_t t : off_diagonal) off[t] = true;
    for (std::size_t t = 0; t < f.table_size(); ++t) {
      if (!off[t]) diagonal.push_back(t);
    }
  }
  Tuple tuple(n, 0);
  for (std::size_t size = 0; size <= n; ++size) {
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
      std::size_t bits = 0;
      for (std::size_t i = 0; i < n; ++i) bits += (mask >> i) & 1;
      if (bits != size) continue;
      bool constant_fibers = true;
      std::vector<std::pair<std::size_t, Rational>> seen;
      for (const std::size_t t : diagonal) {
        f.decode(t, tuple);
        std::size_t key = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (mask & (std::size_t(1) << i)) key = key * k + tuple[i];
        }
        bool found = false;
        for (const auto& [seen_key, seen_value] : seen) {
          if (seen_key == key) {
            found = true;
            if (seen_value != f.value(t)) constant_fibers = false;
            break;
          }
        }
        if (!found) seen.emplace_back(key, f.value(t));
        if (!constant_fibers) break;
      }
      if (constant_fibers) return QaResult{size, false};
    }
  }
  return QaResult{n, false};
}

}  // namespace aritygap::oracle
