#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace rbalg {

inline int default_workers() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Splits [0, count) into contiguous chunks, one per worker, folds each chunk
/// with `body(index, acc)` starting from `identity`, and combines the partial
/// results in chunk order. With exact arithmetic the result does not depend on
/// the worker count.
template <class T, class Body, class Combine>
T parallel_reduce(std::size_t count, int workers, const T& identity, Body body, Combine combine) {
  std::size_t w = static_cast<std::size_t>(std::clamp(workers, 1, 256));
  w = std::min(w, std::max<std::size_t>(count, 1));
  if (w <= 1) {
    T acc = identity;
    for (std::size_t i = 0; i < count; ++i) body(i, acc);
    return acc;
  }
  std::vector<T> partial(w, identity);
  std::vector<std::exception_ptr> errors(w);
  {
    std::vector<std::jthread> threads;
    threads.reserve(w);
    for (std::size_t t = 0; t < w; ++t) {
      std::size_t begin = count * t / w, end = count * (t + 1) / w;
      threads.emplace_back([&, t, begin, end] {
        try {
          for (std::size_t i = begin; i < end; ++i) body(i, partial[t]);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  T acc = partial[0];
  for (std::size_t t = 1; t < w; ++t) acc = combine(acc, partial[t]);
  return acc;
}

/// Evaluates `fn(i)` for i in [0, count) on up to `workers` threads; results in index order.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, int workers, Fn fn) {
  std::vector<T> out(count);
  parallel_reduce<int>(count, workers, 0, [&](std::size_t i, int&) { out[i] = fn(i); }, [](int a, int) { return a; });
  return out;
}

}  // namespace rbalg
