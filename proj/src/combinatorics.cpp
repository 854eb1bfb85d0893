#include "rbalg/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>

#include "rbalg/errors.hpp"

namespace rbalg {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  std::vector<bool> seen(values_.size() + 1, false);
  for (int v : values_) {
    if (v < 1 || v > static_cast<int>(values_.size()) || seen[static_cast<std::size_t>(v)]) {
      throw PreconditionError("not a permutation: " + to_string());
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? "," : "") << values_[i];
  os << ")";
  return os.str();
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw PreconditionError("empty composition");
  for (int p : parts_) {
    if (p < 1) throw PreconditionError("composition part must be positive");
  }
}

int Composition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Composition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ")";
  return os.str();
}

Rational bernoulli_number(int n) {
  static std::mutex mu;
  static std::vector<Rational> memo{Rational(1)};
  if (n < 0) throw PreconditionError("Bernoulli index must be nonnegative");
  std::lock_guard lock(mu);
  // Σ_{k=0}^{m} C(m+1,k) B_k = 0 for m >= 1.
  while (static_cast<int>(memo.size()) <= n) {
    int m = static_cast<int>(memo.size());
    Rational s;
    for (int k = 0; k < m; ++k) s += binomial(m + 1, k) * memo[static_cast<std::size_t>(k)];
    memo.push_back(-s / Rational(m + 1));
  }
  return memo[static_cast<std::size_t>(n)];
}

Rational bernoulli_fraction(int n) { return bernoulli_number(n) / factorial(n); }

int descent_count(const Permutation& sigma) {
  int d = 0;
  const auto& v = sigma.values();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) d += v[i] > v[i + 1];
  return d;
}

CycleType cycle_type(const Permutation& sigma) {
  CycleType ct;
  int n = sigma.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int i = 1; i <= n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = sigma(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    ct.lengths.push_back(len);
  }
  std::sort(ct.lengths.begin(), ct.lengths.end(), std::greater<>());
  ct.cycles = static_cast<int>(ct.lengths.size());
  return ct;
}

BarSets bar_sets(const Permutation& sigma) {
  BarSets b;
  int n = sigma.size();
  int prefix_max = 0;
  for (int k = 1; k < n; ++k) {
    prefix_max = std::max(prefix_max, sigma(k));
    if (sigma(k + 1) > prefix_max) b.e.push_back(k);
  }
  std::vector<int> suffix_min(static_cast<std::size_t>(n) + 2, n + 1);
  for (int j = n; j >= 1; --j) suffix_min[static_cast<std::size_t>(j)] = std::min(suffix_min[static_cast<std::size_t>(j) + 1], sigma(j));
  for (int l = 1; l < n; ++l) {
    if (sigma(l) < suffix_min[static_cast<std::size_t>(l) + 1]) b.f.push_back(l);
  }
  return b;
}

Rational omega_composition(const std::vector<int>& parts) {
  long long prod = 1;
  int partial = 0;
  for (int p : parts) {
    partial += p;
    prod *= partial;
  }
  return Rational(1, prod);
}

Rational omega_ordered_partition(const OrderedSetPartition& pi) {
  std::vector<int> sizes;
  for (const auto& b : pi.blocks) sizes.push_back(static_cast<int>(b.size()));
  return omega_composition(sizes);
}

std::vector<Composition> refinement_blocks(const Composition& finer, const Composition& coarser) {
  std::vector<Composition> blocks;
  std::size_t j = 0;
  for (int target : coarser.parts()) {
    std::vector<int> block;
    int sum = 0;
    while (sum < target && j < finer.parts().size()) {
      sum += finer[j];
      block.push_back(finer[j]);
      ++j;
    }
    if (sum != target) return {};
    blocks.emplace_back(std::move(block));
  }
  if (j != finer.parts().size()) return {};
  return blocks;
}

bool refines(const Composition& finer, const Composition& coarser) { return !refinement_blocks(finer, coarser).empty(); }

Rational omega_refined(const Composition& finer, const Composition& coarser) {
  auto blocks = refinement_blocks(finer, coarser);
  if (blocks.empty()) throw PreconditionError(finer.to_string() + " does not refine " + coarser.to_string());
  Rational w(1);
  for (const auto& b : blocks) w *= omega_composition(b);
  return w;
}

Rational simplex_monomial_integral(const std::vector<int>& exponents) {
  // Innermost-out: after integrating t_m..t_j the integrand is a monomial in t_{j-1}
  // of degree p_j, with ∫_0^{t} s^e * s^{p} ds = t^{e+p+1}/(e+p+1).
  Rational value(1);
  int degree = 0;
  for (auto it = exponents.rbegin(); it != exponents.rend(); ++it) {
    if (*it < 0) throw PreconditionError("negative exponent in simplex integral");
    degree += *it + 1;
    value /= Rational(degree);
  }
  return value;
}

bool omega_symmetrization_check(const std::vector<int>& m) {
  std::vector<int> idx(m.size());
  std::iota(idx.begin(), idx.end(), 0);
  Rational lhs;
  do {
    std::vector<int> permuted;
    for (int i : idx) permuted.push_back(m[static_cast<std::size_t>(i)]);
    lhs += omega_composition(permuted);
  } while (std::next_permutation(idx.begin(), idx.end()));
  Rational rhs(1);
  for (int x : m) rhs /= Rational(x);
  return lhs == rhs;
}

std::vector<Permutation> enumerate_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(v.begin(), v.end(), 1);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<Composition> enumerate_compositions(int n) {
  if (n < 1) throw PreconditionError("compositions need n >= 1");
  std::vector<Composition> out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = 1; p <= rest; ++p) {
      current.push_back(p);
      rec(rest - p);
      current.pop_back();
    }
  };
  rec(n);
  return out;
}

std::vector<SetPartition> enumerate_set_partitions(int n) {
  std::vector<SetPartition> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  // Restricted growth strings in lexicographic order.
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int max_label) {
    if (pos == n) {
      SetPartition p;
      p.blocks.resize(static_cast<std::size_t>(max_label) + 1);
      for (int i = 0; i < n; ++i) p.blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i + 1);
      out.push_back(std::move(p));
      return;
    }
    for (int l = 0; l <= max_label + 1; ++l) {
      rgs[static_cast<std::size_t>(pos)] = l;
      rec(pos + 1, std::max(max_label, l));
    }
  };
  rgs[0] = 0;
  rec(1, 0);
  return out;
}

std::vector<OrderedSetPartition> enumerate_ordered_set_partitions(int n) {
  std::vector<OrderedSetPartition> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  // Surjections f:[n]->[k], k increasing, each in lexicographic order; block i = f^{-1}(i).
  for (int k = 1; k <= n; ++k) {
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    std::vector<int> hits(static_cast<std::size_t>(k), 0);
    std::function<void(int, int)> rec = [&](int pos, int missing) {
      if (n - pos < missing) return;
      if (pos == n) {
        OrderedSetPartition p;
        p.blocks.resize(static_cast<std::size_t>(k));
        for (int i = 0; i < n; ++i) p.blocks[static_cast<std::size_t>(f[static_cast<std::size_t>(i)])].push_back(i + 1);
        out.push_back(std::move(p));
        return;
      }
      for (int l = 0; l < k; ++l) {
        f[static_cast<std::size_t>(pos)] = l;
        int fresh = hits[static_cast<std::size_t>(l)]++ == 0;
        rec(pos + 1, missing - fresh);
        --hits[static_cast<std::size_t>(l)];
      }
    };
    rec(0, k);
  }
  return out;
}

std::uint64_t ordered_bell(int n) {
  // a(n) = Σ_{k=1}^{n} C(n,k) a(n-k)
  std::vector<std::uint64_t> a(static_cast<std::size_t>(n) + 1, 0);
  a[0] = 1;
  for (int m = 1; m <= n; ++m) {
    std::uint64_t c = 1;
    for (int k = 1; k <= m; ++k) {
      c = c * static_cast<std::uint64_t>(m - k + 1) / static_cast<std::uint64_t>(k);
      a[static_cast<std::size_t>(m)] += c * a[static_cast<std::size_t>(m - k)];
    }
  }
  return a[static_cast<std::size_t>(n)];
}

std::uint64_t bell(int n) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace rbalg
