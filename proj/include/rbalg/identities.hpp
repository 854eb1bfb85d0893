#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rbalg/combinatorics.hpp"
#include "rbalg/parallel.hpp"
#include "rbalg/rb_core.hpp"
#include "rbalg/rb_models.hpp"

namespace rbalg {

struct IdentityReport {
  std::string identity;
  std::string model;
  std::string weight;
  int n = 0;
  std::uint64_t lhs_terms = 0;
  std::uint64_t rhs_terms = 0;
  bool residual_zero = false;
  std::string first_nonzero;  // empty when the residual vanishes
  std::optional<double> elapsed_seconds;
};

template <class E>
struct Checked {
  IdentityReport report;
  E residual;
};

enum class NestingSide { Left, Right };

namespace detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

template <RotaBaxterModel M>
void require_arguments(const M& m, const std::vector<ElementOf<M>>& xs) {
  if (xs.empty()) throw PreconditionError("identity needs at least one argument");
  for (const auto& x : xs) require_compatible(m, x);
}

inline std::uint64_t count_permutations(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

template <RotaBaxterModel M>
void require_commutative(const M& m) {
  if (!m.is_commutative()) throw PreconditionError("identity only holds in commutative models; got " + m.name());
}

}  // namespace detail

std::string describe_nonzero(const SequenceModel& m, const SeqElement& x);

template <RotaBaxterModel M>
std::string describe_nonzero(const M& m, const ElementOf<M>& x) {
  std::string s = m.render(x);
  if (s.size() > 200) s = s.substr(0, 200) + "...";
  return s;
}

template <RotaBaxterModel M>
Checked<ElementOf<M>> make_checked(const M& m, std::string identity, int n, std::uint64_t lhs_terms,
                                   std::uint64_t rhs_terms, const ElementOf<M>& lhs, const ElementOf<M>& rhs,
                                   const detail::Stopwatch& clock) {
  Checked<ElementOf<M>> out{IdentityReport{}, m.sub(lhs, rhs)};
  auto& r = out.report;
  r.identity = std::move(identity);
  r.model = m.name();
  r.weight = m.weight().to_string();
  r.n = n;
  r.lhs_terms = lhs_terms;
  r.rhs_terms = rhs_terms;
  r.residual_zero = m.is_zero(out.residual);
  if (!r.residual_zero) r.first_nonzero = describe_nonzero(m, out.residual);
  r.elapsed_seconds = clock.seconds();
  return out;
}

/// Σ_σ R(R(...R(x_σ1) x_σ2 ...) x_σn) for Left; Σ_σ R(x_σ1 R(x_σ2 ... R(x_σn))) for Right.
/// Depth-first over permutation prefixes so shared prefixes are evaluated once.
template <RotaBaxterModel M>
ElementOf<M> nested_sum(const M& m, const std::vector<ElementOf<M>>& xs, NestingSide side, int workers = 1) {
  detail::require_arguments(m, xs);
  const int n = static_cast<int>(xs.size());
  using E = ElementOf<M>;
  auto step = [&](const E& acc, int j) {
    return m.apply_r(side == NestingSide::Left ? m.mul(acc, xs[static_cast<std::size_t>(j)])
                                               : m.mul(xs[static_cast<std::size_t>(j)], acc));
  };
  auto dfs = [&](auto&& self, const E& acc, std::uint32_t used, int depth, E& total) -> void {
    if (depth == n) {
      total = m.add(total, acc);
      return;
    }
    for (int j = 0; j < n; ++j) {
      if (used & (1u << j)) continue;
      self(self, step(acc, j), used | (1u << j), depth + 1, total);
    }
  };
  return parallel_reduce<E>(
      static_cast<std::size_t>(n), workers, m.zero(),
      [&](std::size_t first, E& total) {
        int j = static_cast<int>(first);
        dfs(dfs, m.apply_r(xs[first]), 1u << j, 1, total);
      },
      [&](const E& a, const E& b) { return m.add(a, b); });
}

template <RotaBaxterModel M>
ElementOf<M> nested_left_sum(const M& m, const std::vector<ElementOf<M>>& xs, int workers = 1) {
  return nested_sum(m, xs, NestingSide::Left, workers);
}

template <RotaBaxterModel M>
ElementOf<M> nested_right_sum(const M& m, const std::vector<ElementOf<M>>& xs, int workers = 1) {
  return nested_sum(m, xs, NestingSide::Right, workers);
}

/// 𝙻(B) = Σ over orderings of B of R(𝔩(x_b1, ..., x_bm)), indexed by the bitmask of B.
template <RotaBaxterModel M>
std::vector<ElementOf<M>> block_pre_lie_sums(const M& m, const std::vector<ElementOf<M>>& xs, int workers = 1) {
  const int n = static_cast<int>(xs.size());
  using E = ElementOf<M>;
  const std::size_t masks = std::size_t{1} << n;
  // Unapplied sums: W(B) = Σ_orderings 𝔩(...) = Σ_{b ∈ B} W(B \ {b}) ▷ x_b, W({b}) = x_b.
  std::vector<E> words(masks, m.zero());
  for (std::size_t mask = 1; mask < masks; ++mask) {
    if ((mask & (mask - 1)) == 0) words[mask] = xs[static_cast<std::size_t>(__builtin_ctzll(mask))];
  }
  for (int size = 2; size <= n; ++size) {
    std::vector<std::size_t> level;
    for (std::size_t mask = 1; mask < masks; ++mask) {
      if (__builtin_popcountll(mask) == size) level.push_back(mask);
    }
    auto vals = parallel_map<E>(level.size(), workers, [&](std::size_t i) {
      std::size_t mask = level[i];
      E acc = m.zero();
      for (int b = 0; b < n; ++b) {
        if (!(mask & (std::size_t{1} << b))) continue;
        acc = m.add(acc, pre_lie_left(m, words[mask ^ (std::size_t{1} << b)], xs[static_cast<std::size_t>(b)]));
      }
      return acc;
    });
    for (std::size_t i = 0; i < level.size(); ++i) words[level[i]] = std::move(vals[i]);
  }
  for (std::size_t mask = 1; mask < masks; ++mask) words[mask] = m.apply_r(words[mask]);
  return words;
}

/// Σ_{π ordered set partition} ω(π) 𝙻(π_1) ... 𝙻(π_k), one product per partition.
template <RotaBaxterModel M>
ElementOf<M> ncbs_rhs_direct(const M& m, const std::vector<ElementOf<M>>& xs, int workers = 1) {
  detail::require_arguments(m, xs);
  const int n = static_cast<int>(xs.size());
  using E = ElementOf<M>;
  auto blocks = block_pre_lie_sums(m, xs, workers);
  auto partitions = enumerate_ordered_set_partitions(n);
  return parallel_reduce<E>(
      partitions.size(), workers, m.zero(),
      [&](std::size_t i, E& total) {
        const auto& pi = partitions[i];
        E prod = m.one();
        for (std::size_t k = 0; k < pi.blocks.size(); ++k) {
          std::size_t mask = 0;
          for (int b : pi.blocks[k]) mask |= std::size_t{1} << (b - 1);
          prod = k == 0 ? blocks[mask] : m.mul(prod, blocks[mask]);
        }
        total = m.add(total, m.scale(omega_ordered_partition(pi), prod));
      },
      [&](const E& a, const E& b) { return m.add(a, b); });
}

/// Same sum grouped by the last block. ω(π) = ω(π without its last block) / |S|, so
/// Q(S) = (1/|S|) Σ_{∅ ≠ B ⊆ S} Q(S \ B) 𝙻(B) with Q(∅) = 1, and the result is Q({1..n}).
template <RotaBaxterModel M>
ElementOf<M> ncbs_rhs(const M& m, const std::vector<ElementOf<M>>& xs, int workers = 1) {
  detail::require_arguments(m, xs);
  const int n = static_cast<int>(xs.size());
  using E = ElementOf<M>;
  auto blocks = block_pre_lie_sums(m, xs, workers);
  const std::size_t masks = std::size_t{1} << n;
  std::vector<E> q(masks, m.zero());
  for (int size = 1; size <= n; ++size) {
    std::vector<std::size_t> level;
    for (std::size_t mask = 1; mask < masks; ++mask) {
      if (__builtin_popcountll(mask) == size) level.push_back(mask);
    }
    auto vals = parallel_map<E>(level.size(), workers, [&](std::size_t i) {
      const std::size_t set = level[i];
      E acc = blocks[set];
      for (std::size_t b = (set - 1) & set; b != 0; b = (b - 1) & set) acc = m.add(acc, m.mul(q[set ^ b], blocks[b]));
      return m.scale(Rational(1, size), acc);
    });
    for (std::size_t i = 0; i < level.size(); ++i) q[level[i]] = std::move(vals[i]);
  }
  return q[masks - 1];
}

template <RotaBaxterModel M>
Checked<ElementOf<M>> check_ncbs(const M& m, const std::vector<ElementOf<M>>& xs, int workers = 1) {
  detail::Stopwatch clock;
  detail::require_arguments(m, xs);
  const int n = static_cast<int>(xs.size());
  auto lhs = nested_left_sum(m, xs, workers);
  auto rhs = ncbs_rhs(m, xs, workers);
  return make_checked(m, "noncommutative Bohnenblust-Spitzer", n, detail::count_permutations(n), ordered_bell(n),
                      lhs, rhs, clock);
}

/// Σ_{I ⊨ n} ω(I) 𝔏^(i1)(a) ... 𝔏^(ik)(a), one product per composition.
template <RotaBaxterModel M>
ElementOf<M> key_identity_rhs_direct(const M& m, const ElementOf<M>& a, int n) {
  if (n < 1) throw PreconditionError("key identity needs n >= 1");
  auto ls = big_l_powers(m, a, n);
  ElementOf<M> total = m.zero();
  for (const auto& c : enumerate_compositions(n)) {
    ElementOf<M> prod = ls[static_cast<std::size_t>(c[0] - 1)];
    for (int k = 1; k < c.length(); ++k) prod = m.mul(prod, ls[static_cast<std::size_t>(c[static_cast<std::size_t>(k)] - 1)]);
    total = m.add(total, m.scale(omega_composition(c), prod));
  }
  return total;
}

/// Same sum grouped by the last part: since ω(I) = ω(I without its last part) / |I|,
/// P_n = (1/n) Σ_k P_{n-k} 𝔏^(k)(a) with P_0 = 1.
template <RotaBaxterModel M>
ElementOf<M> key_identity_rhs(const M& m, const ElementOf<M>& a, int n) {
  if (n < 1) throw PreconditionError("key identity needs n >= 1");
  auto ls = big_l_powers(m, a, n);
  std::vector<ElementOf<M>> p{m.one()};
  for (int j = 1; j <= n; ++j) {
    ElementOf<M> acc = ls[static_cast<std::size_t>(j - 1)];
    for (int k = 1; k < j; ++k) acc = m.add(acc, m.mul(p[static_cast<std::size_t>(j - k)], ls[static_cast<std::size_t>(k - 1)]));
    p.push_back(m.scale(Rational(1, j), acc));
  }
  return p.back();
}

template <RotaBaxterModel M>
Checked<ElementOf<M>> check_key_identity(const M& m, const ElementOf<M>& a, int n) {
  detail::Stopwatch clock;
  require_compatible(m, a);
  if (n < 1) throw PreconditionError("key identity needs n >= 1");
  auto lhs = rx_left_brackets(m, a, n).back();
  auto rhs = key_identity_rhs(m, a, n);
  return make_checked(m, "key identity", n, 1, std::uint64_t{1} << (n - 1), lhs, rhs, clock);
}

/// Argument indices (0-based) of the packets of σ: σ(1..n) split after each
/// position in E_σ (Left) or F_σ (Right), each packet in σ order.
inline std::vector<std::vector<int>> sigma_packets(const Permutation& sigma, NestingSide side) {
  auto bars = bar_sets(sigma);
  auto cuts = side == NestingSide::Left ? bars.e : bars.f;
  cuts.push_back(sigma.size());
  std::vector<std::vector<int>> packets;
  int start = 1;
  for (int end : cuts) {
    std::vector<int> packet;
    for (int i = start; i <= end; ++i) packet.push_back(sigma(i) - 1);
    packets.push_back(std::move(packet));
    start = end + 1;
  }
  return packets;
}

namespace detail {

template <RotaBaxterModel M>
ElementOf<M> fold_packets(const M& m, const std::vector<ElementOf<M>>& xs, const Permutation& sigma, NestingSide side) {
  if (static_cast<int>(xs.size()) != sigma.size()) throw PreconditionError("permutation size does not match arguments");
  std::optional<ElementOf<M>> acc;
  for (const auto& packet : sigma_packets(sigma, side)) {
    auto at = [&](std::size_t i) { return xs[static_cast<std::size_t>(packet[i])]; };
    ElementOf<M> folded = side == NestingSide::Left ? at(0) : at(packet.size() - 1);
    for (std::size_t i = 1; i < packet.size(); ++i) {
      folded = side == NestingSide::Left ? pre_lie_left(m, folded, at(i)) : pre_lie_right(m, at(packet.size() - 1 - i), folded);
    }
    acc = acc ? double_product(m, *acc, folded) : folded;
  }
  return *acc;
}

}  // namespace detail

/// Packets of σ split after each position in E_σ, each packet folded left with ▷,
/// packets joined with the double product.
template <RotaBaxterModel M>
ElementOf<M> t_sigma(const M& m, const std::vector<ElementOf<M>>& xs, const Permutation& sigma) {
  return detail::fold_packets(m, xs, sigma, NestingSide::Left);
}

/// Packets split after each position in F_σ, each folded right with ◁, joined with the double product.
template <RotaBaxterModel M>
ElementOf<M> u_sigma(const M& m, const std::vector<ElementOf<M>>& xs, const Permutation& sigma) {
  return detail::fold_packets(m, xs, sigma, NestingSide::Right);
}

/// Σ_σ R(T_σ) (Left) or Σ_σ R(U_σ) (Right).
template <RotaBaxterModel M>
ElementOf<M> packet_sum(const M& m, const std::vector<ElementOf<M>>& xs, NestingSide side, int workers = 1) {
  detail::require_arguments(m, xs);
  using E = ElementOf<M>;
  auto perms = enumerate_permutations(static_cast<int>(xs.size()));
  E inner = parallel_reduce<E>(
      perms.size(), workers, m.zero(),
      [&](std::size_t i, E& total) {
        total = m.add(total, side == NestingSide::Left ? t_sigma(m, xs, perms[i]) : u_sigma(m, xs, perms[i]));
      },
      [&](const E& a, const E& b) { return m.add(a, b); });
  return m.apply_r(inner);
}

template <RotaBaxterModel M>
Checked<ElementOf<M>> check_new_identity(const M& m, const std::vector<ElementOf<M>>& xs, NestingSide side,
                                         int workers = 1) {
  detail::Stopwatch clock;
  detail::require_arguments(m, xs);
  const int n = static_cast<int>(xs.size());
  auto lhs = nested_sum(m, xs, side, workers);
  auto rhs = packet_sum(m, xs, side, workers);
  auto count = detail::count_permutations(n);
  return make_checked(m, side == NestingSide::Left ? "pre-Lie packet formula (left)" : "pre-Lie packet formula (right)",
                      n, count, count, lhs, rhs, clock);
}

/// n! (Ra)^[n] = Σ_σ (−θ)^{n − #cycles(σ)} Π_{cycles τ} R(a^{|τ|}).
template <RotaBaxterModel M>
Checked<ElementOf<M>> check_waring(const M& m, const ElementOf<M>& a, int n) {
  detail::Stopwatch clock;
  detail::require_commutative(m);
  require_compatible(m, a);
  if (n < 1) throw PreconditionError("Waring form needs n >= 1");
  using E = ElementOf<M>;
  std::vector<E> r_powers{m.one()};
  E power = m.one();
  for (int k = 1; k <= n; ++k) {
    power = m.mul(power, a);
    r_powers.push_back(m.apply_r(power));
  }
  const Rational minus_theta = -m.weight();
  E rhs = m.zero();
  auto perms = enumerate_permutations(n);
  for (const auto& sigma : perms) {
    auto ct = cycle_type(sigma);
    E prod = m.one();
    for (int len : ct.lengths) prod = m.mul(prod, r_powers[static_cast<std::size_t>(len)]);
    rhs = m.add(rhs, m.scale(minus_theta.pow(n - ct.cycles), prod));
  }
  E lhs = m.scale(factorial(n), rx_left_brackets(m, a, n).back());
  return make_checked(m, "Waring form of Spitzer's identity", n, 1, perms.size(), lhs, rhs, clock);
}

/// Σ_σ nested = Σ_{π set partition} (−θ)^{n−|π|} Π_i (|π_i|−1)! R(Π_{j∈π_i} x_j).
template <RotaBaxterModel M>
ElementOf<M> commutative_bs_rhs(const M& m, const std::vector<ElementOf<M>>& xs) {
  detail::require_commutative(m);
  detail::require_arguments(m, xs);
  const int n = static_cast<int>(xs.size());
  const Rational minus_theta = -m.weight();
  ElementOf<M> rhs = m.zero();
  for (const auto& pi : enumerate_set_partitions(n)) {
    ElementOf<M> prod = m.one();
    Rational coeff = minus_theta.pow(n - static_cast<int>(pi.blocks.size()));
    for (const auto& block : pi.blocks) {
      ElementOf<M> inner = m.one();
      for (int j : block) inner = m.mul(inner, xs[static_cast<std::size_t>(j - 1)]);
      prod = m.mul(prod, m.apply_r(inner));
      coeff = coeff * factorial(static_cast<int>(block.size()) - 1);
    }
    rhs = m.add(rhs, m.scale(coeff, prod));
  }
  return rhs;
}

template <RotaBaxterModel M>
Checked<ElementOf<M>> check_commutative_bs(const M& m, const std::vector<ElementOf<M>>& xs, int workers = 1) {
  detail::Stopwatch clock;
  detail::require_commutative(m);
  detail::require_arguments(m, xs);
  const int n = static_cast<int>(xs.size());
  auto lhs = nested_left_sum(m, xs, workers);
  auto rhs = commutative_bs_rhs(m, xs);
  return make_checked(m, "commutative Bohnenblust-Spitzer", n, detail::count_permutations(n), bell(n), lhs, rhs,
                      clock);
}

/// Substitutes S_I ↦ (RX)^[i1]···(RX)^[ik] (dot) and S_I ↦ w^(i1) ∗ ··· ∗ w^(ik) with
/// w^(k) = (RX)^[k-1]·X (double product) into the NCSF antipode of S_n, and compares with
/// −R(X·(R̃X)^{n-1}) and −X·(R̃X)^{n-1} in the sequence model of length n+2.
Checked<std::pair<SeqElement, SeqElement>> check_antipode_spitzer(int n);
/// Same substitutions applied to the Dynkin image D(S_n), compared with 𝔏^(n)(X) and 𝔩^(n)(X).
Checked<std::pair<SeqElement, SeqElement>> check_dynkin_generators(int n);

/// Component k of (RX)^[n] against M_{(1..n)} and of (RX)^{n} against M_{(n..1)}, both in k−1 variables.
/// The residual holds the left and right differences.
Checked<std::pair<NCPoly, NCPoly>> check_ncqsym(int n, int k);

}  // namespace rbalg
