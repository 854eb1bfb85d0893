#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "rbalg/rational.hpp"

namespace rbalg {

/// Variable x_index of alphabet `alphabet`. Packed as alphabet * 256 + index so
/// that integer order is the lexicographic (alphabet, index) order.
class Generator {
 public:
  constexpr Generator() = default;
  Generator(int alphabet, int index);  // alphabet in [0,255], index in [1,255]
  static constexpr Generator from_code(std::uint16_t code) {
    Generator g;
    g.code_ = code;
    return g;
  }

  [[nodiscard]] constexpr int alphabet() const { return code_ >> 8; }
  [[nodiscard]] constexpr int index() const { return code_ & 0xff; }
  [[nodiscard]] constexpr std::uint16_t code() const { return code_; }
  [[nodiscard]] std::string to_string() const;

  friend constexpr auto operator<=>(Generator, Generator) = default;

 private:
  std::uint16_t code_ = 1;
};

/// Word over generators; letters stored as packed codes.
using Word = boost::container::small_vector<std::uint16_t, 10>;

/// Graded lexicographic order: shorter words first, then letterwise.
bool word_less(const Word& a, const Word& b);
std::string render_word(const Word& w);

/// Element of the free associative algebra over the generators, stored as a
/// vector of (word, coefficient) sorted by word_less with no zero coefficient.
class NCPoly {
 public:
  using Term = std::pair<Word, Rational>;

  NCPoly() = default;
  explicit NCPoly(const Rational& constant);
  static NCPoly generator(Generator g, const Rational& coeff = Rational(1));
  static NCPoly monomial(Word w, const Rational& coeff = Rational(1));
  static NCPoly from_terms(std::vector<Term> terms);  // any order, duplicates summed

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] Rational coeff(const Word& w) const;
  [[nodiscard]] bool is_homogeneous() const;
  [[nodiscard]] std::string to_string() const;

  NCPoly operator-() const;
  friend NCPoly operator+(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator-(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const Rational& s, const NCPoly& a);
  NCPoly& operator+=(const NCPoly& o) { return *this = *this + o; }
  NCPoly& operator-=(const NCPoly& o) { return *this = *this - o; }
  NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }

  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<Term> terms_;
};

inline NCPoly poly_add(const NCPoly& a, const NCPoly& b) { return a + b; }
inline NCPoly poly_mul(const NCPoly& a, const NCPoly& b) { return a * b; }
inline NCPoly scalar_mul(const Rational& s, const NCPoly& a) { return s * a; }

/// Largest word (graded lexicographic order) with nonzero coefficient.
/// Throws PreconditionError on the zero polynomial.
Word sup_monomial(const NCPoly& p);

/// M_f over variables x_1..x_{num_vars} of `alphabet`: the sum over increasing
/// injections φ:{1..k}->{1..num_vars} of x_{φ(f(1))} ... x_{φ(f(n))}.
/// Throws PreconditionError unless f is a surjection onto {1..k}.
NCPoly m_qsym_truncated(const std::vector<int>& f, int num_vars, int alphabet = 0);

}  // namespace rbalg
