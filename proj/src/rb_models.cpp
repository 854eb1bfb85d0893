#include "rbalg/rb_models.hpp"

#include <sstream>

namespace rbalg {

// ---------------------------------------------------------------------------
// UPoly

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UPoly::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Rational();
}

UPoly UPoly::integral() const {
  if (c_.empty()) return {};
  std::vector<Rational> out(c_.size() + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) out[i + 1] = c_[i] / Rational(static_cast<long long>(i + 1));
  return UPoly(std::move(out));
}

std::string UPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    bool neg = c_[i].sign() < 0;
    Rational mag = neg ? -c_[i] : c_[i];
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    if (i == 0) {
      os << mag;
    } else {
      if (!mag.is_one()) os << mag << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

UPoly UPoly::operator-() const {
  UPoly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return UPoly(std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(out));
}

UPoly operator*(const Rational& s, const UPoly& a) {
  if (s.is_zero()) return {};
  UPoly p = a;
  for (auto& c : p.c_) c *= s;
  return p;
}

// ---------------------------------------------------------------------------
// SequenceModel

SequenceModel::SequenceModel(int length) : n_(length) {
  if (length < 1 || length > 255) throw PreconditionError("sequence truncation must be in [1,255]");
}

SeqElement SequenceModel::zero() const { return SeqElement{std::vector<NCPoly>(static_cast<std::size_t>(n_))}; }

SeqElement SequenceModel::one() const {
  return SeqElement{std::vector<NCPoly>(static_cast<std::size_t>(n_), NCPoly(Rational(1)))};
}

SeqElement SequenceModel::add(const Element& a, const Element& b) const {
  Element r = a;
  for (std::size_t k = 0; k < r.components.size(); ++k) r.components[k] += b.components[k];
  return r;
}

SeqElement SequenceModel::sub(const Element& a, const Element& b) const {
  Element r = a;
  for (std::size_t k = 0; k < r.components.size(); ++k) r.components[k] -= b.components[k];
  return r;
}

SeqElement SequenceModel::negate(const Element& a) const {
  Element r = a;
  for (auto& c : r.components) c = -c;
  return r;
}

SeqElement SequenceModel::scale(const Rational& s, const Element& a) const {
  Element r = a;
  for (auto& c : r.components) c = s * c;
  return r;
}

SeqElement SequenceModel::mul(const Element& a, const Element& b) const {
  Element r;
  r.components.reserve(a.components.size());
  for (std::size_t k = 0; k < a.components.size(); ++k) r.components.push_back(a.components[k] * b.components[k]);
  return r;
}

SeqElement SequenceModel::apply_r(const Element& a) const {
  Element r;
  r.components.reserve(a.components.size());
  NCPoly partial;
  for (const auto& c : a.components) {
    r.components.push_back(partial);
    partial += c;
  }
  return r;
}

bool SequenceModel::is_zero(const Element& a) const {
  for (const auto& c : a.components) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::string SequenceModel::render(const Element& a) const {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < a.components.size(); ++k) os << (k ? "; " : "") << a.components[k].to_string();
  os << ")";
  return os.str();
}

SeqElement SequenceModel::generator_sequence(int alphabet) const {
  Element r;
  for (int k = 1; k <= n_; ++k) r.components.push_back(NCPoly::generator(Generator(alphabet, k)));
  return r;
}

SeqElement SequenceModel::from_components(std::vector<NCPoly> comps) const {
  if (static_cast<int>(comps.size()) != n_) throw ModelMismatch("sequence length does not match the model truncation");
  return SeqElement{std::move(comps)};
}

SeqElement standard_r(const SequenceModel& m, const SeqElement& y) { return m.apply_r(y); }

SeqElement rx_bracket(const SequenceModel& m, int n, Bracket variant, int alphabet) {
  if (n < 0) throw PreconditionError("bracket exponent must be nonnegative");
  auto x = m.generator_sequence(alphabet);
  auto all = variant == Bracket::Left ? rx_left_brackets(m, x, n) : rx_right_brackets(m, x, n);
  return all.back();
}

// ---------------------------------------------------------------------------
// Laurent

LaurentSeries ms_project(const LaurentSeries& x) {
  if (!x.is_exact() && x.truncation() < -1) {
    throw PreconditionError("pole part unknown: series truncated below eps^-1");
  }
  return x.pole_part();
}

LaurentSeries LaurentMSModel::apply_r(const Element& a) const { return ms_project(a); }

// ---------------------------------------------------------------------------
// MatrixPolyModel

MatrixPolyModel::MatrixPolyModel(int dim) : d_(dim) {
  if (dim < 1) throw PreconditionError("matrix dimension must be positive");
}

PolyMatrix MatrixPolyModel::zero() const { return PolyMatrix{d_, std::vector<UPoly>(static_cast<std::size_t>(d_ * d_))}; }

PolyMatrix MatrixPolyModel::one() const {
  auto m = zero();
  for (int i = 0; i < d_; ++i) m.at(i, i) = UPoly(Rational(1));
  return m;
}

PolyMatrix MatrixPolyModel::add(const Element& a, const Element& b) const {
  auto r = a;
  for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] = r.entries[i] + b.entries[i];
  return r;
}

PolyMatrix MatrixPolyModel::sub(const Element& a, const Element& b) const {
  auto r = a;
  for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] = r.entries[i] - b.entries[i];
  return r;
}

PolyMatrix MatrixPolyModel::negate(const Element& a) const {
  auto r = a;
  for (auto& e : r.entries) e = -e;
  return r;
}

PolyMatrix MatrixPolyModel::scale(const Rational& c, const Element& a) const {
  auto r = a;
  for (auto& e : r.entries) e = c * e;
  return r;
}

PolyMatrix MatrixPolyModel::mul(const Element& a, const Element& b) const {
  auto r = zero();
  for (int i = 0; i < d_; ++i) {
    for (int j = 0; j < d_; ++j) {
      UPoly s;
      for (int k = 0; k < d_; ++k) s = s + a.at(i, k) * b.at(k, j);
      r.at(i, j) = s;
    }
  }
  return r;
}

PolyMatrix MatrixPolyModel::apply_r(const Element& a) const {
  auto r = a;
  for (auto& e : r.entries) e = e.integral();
  return r;
}

bool MatrixPolyModel::is_zero(const Element& a) const {
  for (const auto& e : a.entries) {
    if (!e.is_zero()) return false;
  }
  return true;
}

std::string MatrixPolyModel::render(const Element& a) const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < d_; ++i) {
    os << (i ? "; " : "") << "[";
    for (int j = 0; j < d_; ++j) os << (j ? ", " : "") << a.at(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// RiemannModel

RiemannModel::RiemannModel(Rational step, int points, bool shifted) : h_(std::move(step)), m_(points), shifted_(shifted) {
  if (points < 1) throw PreconditionError("Riemann grid needs at least one point");
  if (h_.sign() <= 0) throw PreconditionError("Riemann step must be positive");
}

Samples RiemannModel::zero() const { return Samples{std::vector<Rational>(static_cast<std::size_t>(m_))}; }

Samples RiemannModel::one() const { return Samples{std::vector<Rational>(static_cast<std::size_t>(m_), Rational(1))}; }

Samples RiemannModel::add(const Element& a, const Element& b) const {
  auto r = a;
  for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] += b.values[i];
  return r;
}

Samples RiemannModel::sub(const Element& a, const Element& b) const {
  auto r = a;
  for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] -= b.values[i];
  return r;
}

Samples RiemannModel::negate(const Element& a) const {
  auto r = a;
  for (auto& v : r.values) v = -v;
  return r;
}

Samples RiemannModel::scale(const Rational& c, const Element& a) const {
  auto r = a;
  for (auto& v : r.values) v *= c;
  return r;
}

Samples RiemannModel::mul(const Element& a, const Element& b) const {
  auto r = a;
  for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] *= b.values[i];
  return r;
}

Samples RiemannModel::apply_r(const Element& a) const {
  Samples r = zero();
  Rational partial;
  for (std::size_t j = 0; j < a.values.size(); ++j) {
    if (shifted_) {
      r.values[j] = h_ * partial;
      partial += a.values[j];
    } else {
      partial += a.values[j];
      r.values[j] = h_ * partial;
    }
  }
  return r;
}

bool RiemannModel::is_zero(const Element& a) const {
  for (const auto& v : a.values) {
    if (!v.is_zero()) return false;
  }
  return true;
}

std::string RiemannModel::render(const Element& a) const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < a.values.size(); ++i) os << (i ? ", " : "") << a.values[i];
  os << "]";
  return os.str();
}

std::string RiemannModel::name() const {
  return std::string(shifted_ ? "riemann-shifted" : "riemann") + "(h=" + h_.to_string() + ",M=" + std::to_string(m_) + ")";
}

}  // namespace rbalg
