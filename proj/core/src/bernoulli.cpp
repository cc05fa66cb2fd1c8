#include "dtaylor/bernoulli.hpp"

#include <mutex>
#include <shared_mutex>
#include <vector>

namespace dtaylor {
namespace {

std::shared_mutex memo_mutex;
std::vector<Rational>& memo() {
  static std::vector<Rational> table = {Rational(1), Rational(-1, 2)};
  return table;
}

// B_m = -(1/(m+1)) sum_{j=0}^{m-1} binom(m+1, j) B_j.
Rational next_from(const std::vector<Rational>& prefix) {
  const unsigned long m = prefix.size();
  Rational sum(0);
  for (unsigned long j = 0; j < m; ++j) {
    if (prefix[j].is_zero()) continue;
    sum += Rational::binomial(m + 1, j) * prefix[j];
  }
  return -sum / Rational(static_cast<long>(m + 1));
}

}  // namespace

Rational bernoulli(unsigned k) {
  if (k >= 3 && k % 2 == 1) return Rational(0);
  {
    std::shared_lock lock(memo_mutex);
    const auto& table = memo();
    if (k < table.size()) return table[k];
  }
  // Compute locally from a snapshot, then publish. Concurrent callers may
  // duplicate work; the published prefix is always consistent.
  std::vector<Rational> local;
  {
    std::shared_lock lock(memo_mutex);
    local = memo();
  }
  while (local.size() <= k) local.push_back(next_from(local));
  Rational result = local[k];
  {
    std::unique_lock lock(memo_mutex);
    auto& table = memo();
    if (table.size() < local.size()) table = std::move(local);
  }
  return result;
}

Rational bernoulli_abs(unsigned k) { return bernoulli(k).abs(); }

}  // namespace dtaylor
