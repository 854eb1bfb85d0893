#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rbalg/rational.hpp"

namespace rbalg {

/// Permutation of {1..n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);  // throws PreconditionError unless bijective
  static Permutation identity(int n);

  [[nodiscard]] int size() const { return static_cast<int>(values_.size()); }
  [[nodiscard]] int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }  // 1-based
  [[nodiscard]] const std::vector<int>& values() const { return values_; }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

/// Nonempty sequence of positive integers.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);  // throws PreconditionError on empty or nonpositive parts

  [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
  [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); }
  [[nodiscard]] int weight() const;
  [[nodiscard]] int operator[](std::size_t i) const { return parts_[i]; }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

using Block = std::vector<int>;  // sorted elements of {1..n}

struct OrderedSetPartition {
  std::vector<Block> blocks;
};

// Blocks sorted by their smallest element.
struct SetPartition {
  std::vector<Block> blocks;
};

struct CycleType {
  std::vector<int> lengths;  // nonincreasing
  int cycles = 0;
};

struct BarSets {
  std::vector<int> e;  // E_sigma, increasing
  std::vector<int> f;  // F_sigma, increasing
};

/// b_n = B_n / n!, with B_1 = -1/2. Memoized; safe to call concurrently.
Rational bernoulli_fraction(int n);
Rational bernoulli_number(int n);

int descent_count(const Permutation& sigma);
CycleType cycle_type(const Permutation& sigma);

/// E = {k : sigma(k+1) > sigma(j) for all j <= k}, F = {l : sigma(l) < sigma(j) for all j >= l+1}.
BarSets bar_sets(const Permutation& sigma);

/// 1 / (i1 (i1+i2) ... (i1+...+ik)).
Rational omega_composition(const std::vector<int>& parts);
inline Rational omega_composition(const Composition& c) { return omega_composition(c.parts()); }
Rational omega_ordered_partition(const OrderedSetPartition& pi);

/// True when J is obtained from I by splitting parts, i.e. I ⪯ J.
bool refines(const Composition& finer, const Composition& coarser);
/// Blocks J_1..J_k of `finer` whose weights are the parts of `coarser`.
std::vector<Composition> refinement_blocks(const Composition& finer, const Composition& coarser);
/// ω(J, I) = prod_k ω(J_k). Throws PreconditionError when J does not refine I.
Rational omega_refined(const Composition& finer, const Composition& coarser);

/// ∫_0^1 dt1 ∫_0^{t1} dt2 ... ∫_0^{t_{m-1}} dt_m  prod_j t_j^{e_j}.
Rational simplex_monomial_integral(const std::vector<int>& exponents);

/// Σ_{σ ∈ S_k} ω(m_σ) == Π 1/m_i.
bool omega_symmetrization_check(const std::vector<int>& m);

std::vector<Permutation> enumerate_permutations(int n);
std::vector<Composition> enumerate_compositions(int n);
std::vector<OrderedSetPartition> enumerate_ordered_set_partitions(int n);
std::vector<SetPartition> enumerate_set_partitions(int n);

std::uint64_t ordered_bell(int n);
std::uint64_t bell(int n);

}  // namespace rbalg
