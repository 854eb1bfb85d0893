#pragma once

#include <random>

#include "rbalg/rb_models.hpp"

namespace rbalg {

using Rng = std::mt19937_64;

Rational random_rational(Rng& rng, long long span = 9, bool nonzero = false);

/// Random polynomial in x_1..x_vars of `alphabet`, up to `terms` words of length <= max_len.
NCPoly random_ncpoly(Rng& rng, int vars, int max_len, int terms, int alphabet = 0);
LaurentSeries random_laurent(Rng& rng, int max_pole, int max_positive);
UPoly random_upoly(Rng& rng, int degree);

// Per-model random elements, fully determined by the generator state.
SeqElement random_element(const SequenceModel& m, Rng& rng);
LaurentSeries random_element(const LaurentMSModel& m, Rng& rng);
UPoly random_element(const PolyIntModel& m, Rng& rng);
PolyMatrix random_element(const MatrixPolyModel& m, Rng& rng);
Samples random_element(const RiemannModel& m, Rng& rng);

/// c_i · X^(i) for i = 1..n: the generator sequence of alphabet i with a random
/// nonzero scalar, so each argument is homogeneous in its own letters.
std::vector<SeqElement> random_scaled_generators(const SequenceModel& m, int n, Rng& rng);

template <RotaBaxterModel M>
ElementOf<M> random_element(const Rescaled<M>& m, Rng& rng) {
  return random_element(m.base(), rng);
}

template <RotaBaxterModel M>
ElementOf<M> random_element(const DoubleProductModel<M>& m, Rng& rng) {
  return random_element(m.base(), rng);
}

}  // namespace rbalg
