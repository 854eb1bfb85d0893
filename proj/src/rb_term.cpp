#include "rbalg/rb_term.hpp"

#include <cctype>
#include <sstream>

namespace rbalg {

std::string render_theta_poly(const ThetaPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    bool neg = c[i].sign() < 0;
    Rational mag = neg ? -c[i] : c[i];
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    if (i == 0) {
      os << mag;
    } else {
      if (!mag.is_one()) os << mag << "*";
      os << "theta";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::string Monomial::key() const {
  if (factors.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "*";
    if (factors[i].is_r()) {
      s += "R(" + factors[i].arg->key() + ")";
    } else {
      s += "Z" + std::to_string(factors[i].gen);
    }
  }
  return s;
}

bool is_elementary(const Monomial& m) {
  for (std::size_t i = 0; i < m.factors.size(); ++i) {
    if (!m.factors[i].is_r()) continue;
    if (i + 1 < m.factors.size() && m.factors[i + 1].is_r()) return false;
    if (!is_elementary(*m.factors[i].arg)) return false;
  }
  return true;
}

void RBTerm::add_entry(const Monomial& m, const ThetaPoly& c) {
  if (c.is_zero()) return;
  auto key = m.key();
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), Entry{m, c});
    return;
  }
  it->second.coeff = it->second.coeff + c;
  if (it->second.coeff.is_zero()) terms_.erase(it);
}

RBTerm RBTerm::generator(int index) {
  if (index < 1) throw PreconditionError("generator index must be positive");
  Monomial m;
  m.factors.push_back(Factor{index, nullptr});
  return from_monomial(std::move(m));
}

RBTerm RBTerm::constant(const ThetaPoly& c) { return from_monomial(Monomial{}, c); }

RBTerm RBTerm::theta() { return constant(ThetaPoly(std::vector<Rational>{Rational(0), Rational(1)})); }

RBTerm RBTerm::from_monomial(Monomial m, const ThetaPoly& c) {
  RBTerm t;
  t.add_entry(m, c);
  return t;
}

std::string RBTerm::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, e] : terms_) {
    const auto& cs = e.coeff.coeffs();
    bool scalar = cs.size() == 1;
    bool neg = scalar && cs[0].sign() < 0;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    bool unit = e.mono.factors.empty();
    if (scalar) {
      Rational mag = neg ? -cs[0] : cs[0];
      if (unit) {
        os << mag;
      } else {
        if (!mag.is_one()) os << mag << "*";
        os << key;
      }
    } else {
      os << "(" << render_theta_poly(e.coeff) << ")";
      if (!unit) os << "*" << key;
    }
  }
  return os.str();
}

bool RBTerm::is_elementary() const {
  for (const auto& [key, e] : terms_) {
    if (!rbalg::is_elementary(e.mono)) return false;
  }
  return true;
}

int RBTerm::max_generator() const {
  int best = 0;
  std::function<void(const Monomial&)> walk = [&](const Monomial& m) {
    for (const auto& f : m.factors) {
      if (f.is_r()) walk(*f.arg);
      else best = std::max(best, f.gen);
    }
  };
  for (const auto& [key, e] : terms_) walk(e.mono);
  return best;
}

RBTerm RBTerm::operator-() const {
  RBTerm t = *this;
  for (auto& [key, e] : t.terms_) e.coeff = -e.coeff;
  return t;
}

RBTerm operator+(const RBTerm& a, const RBTerm& b) {
  RBTerm t = a;
  for (const auto& [key, e] : b.terms_) t.add_entry(e.mono, e.coeff);
  return t;
}

RBTerm operator-(const RBTerm& a, const RBTerm& b) { return a + (-b); }

RBTerm operator*(const RBTerm& a, const RBTerm& b) {
  RBTerm t;
  for (const auto& [ka, ea] : a.terms_) {
    for (const auto& [kb, eb] : b.terms_) {
      Monomial m = ea.mono;
      m.factors.insert(m.factors.end(), eb.mono.factors.begin(), eb.mono.factors.end());
      t.add_entry(m, ea.coeff * eb.coeff);
    }
  }
  return t;
}

RBTerm operator*(const ThetaPoly& c, const RBTerm& a) {
  RBTerm t;
  for (const auto& [key, e] : a.terms_) t.add_entry(e.mono, c * e.coeff);
  return t;
}

RBTerm RBTerm::apply_r() const {
  RBTerm t;
  for (const auto& [key, e] : terms_) {
    Monomial m;
    m.factors.push_back(Factor{0, std::make_shared<const Monomial>(e.mono)});
    t.add_entry(m, e.coeff);
  }
  return t;
}

bool operator==(const RBTerm& a, const RBTerm& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j) {
    if (i->first != j->first || !(i->second.coeff == j->second.coeff)) return false;
  }
  return true;
}

namespace {

class Normalizer {
 public:
  RBTerm run(const Monomial& m) {
    auto key = m.key();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    RBTerm out;
    RBTerm prepared = normalize_arguments(m);
    for (const auto& [k, e] : prepared.terms()) {
      RBTerm part = rewrite_first_pair(e.mono);
      out = out + e.coeff * part;
    }
    memo_.emplace(std::move(key), out);
    return out;
  }

 private:
  // Replaces every R-argument by its normal form, distributing over the sums.
  RBTerm normalize_arguments(const Monomial& m) {
    std::vector<std::pair<Monomial, ThetaPoly>> partial{{Monomial{}, ThetaPoly(Rational(1))}};
    for (const auto& f : m.factors) {
      if (!f.is_r()) {
        for (auto& p : partial) p.first.factors.push_back(f);
        continue;
      }
      RBTerm inner = run(*f.arg);
      std::vector<std::pair<Monomial, ThetaPoly>> next;
      for (const auto& p : partial) {
        for (const auto& [k, e] : inner.terms()) {
          Monomial q = p.first;
          q.factors.push_back(Factor{0, std::make_shared<const Monomial>(e.mono)});
          next.emplace_back(std::move(q), p.second * e.coeff);
        }
      }
      partial = std::move(next);
    }
    RBTerm t;
    for (const auto& [mono, c] : partial) t.add_entry(mono, c);
    return t;
  }

  // Arguments are already normal; rewrite the leftmost adjacent R·R pair.
  RBTerm rewrite_first_pair(const Monomial& m) {
    for (std::size_t i = 0; i + 1 < m.factors.size(); ++i) {
      if (!m.factors[i].is_r() || !m.factors[i + 1].is_r()) continue;
      const Monomial& c = *m.factors[i].arg;
      const Monomial& d = *m.factors[i + 1].arg;
      auto splice = [&](Monomial inner) {
        Monomial out;
        out.factors.assign(m.factors.begin(), m.factors.begin() + static_cast<long>(i));
        out.factors.push_back(Factor{0, std::make_shared<const Monomial>(std::move(inner))});
        out.factors.insert(out.factors.end(), m.factors.begin() + static_cast<long>(i) + 2, m.factors.end());
        return out;
      };
      Monomial c_rd = c;
      c_rd.factors.push_back(m.factors[i + 1]);
      Monomial rc_d;
      rc_d.factors.push_back(m.factors[i]);
      rc_d.factors.insert(rc_d.factors.end(), d.factors.begin(), d.factors.end());
      Monomial cd = c;
      cd.factors.insert(cd.factors.end(), d.factors.begin(), d.factors.end());
      ThetaPoly theta(std::vector<Rational>{Rational(0), Rational(1)});
      return run(splice(std::move(c_rd))) + run(splice(std::move(rc_d))) + theta * run(splice(std::move(cd)));
    }
    return RBTerm::from_monomial(m);
  }

  std::unordered_map<std::string, RBTerm> memo_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  RBTerm parse() {
    RBTerm t = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("term parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RBTerm expr() {
    RBTerm acc;
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else return acc;
    }
  }

  RBTerm term() {
    RBTerm acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  RBTerm factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (eat('/')) {
        skip();
        std::string den = digits();
        if (den.empty()) fail("missing denominator");
        num += "/" + den;
      }
      return RBTerm::constant(ThetaPoly(Rational::parse(num)));
    }
    if (s_.substr(pos_, 5) == "theta") {
      pos_ += 5;
      return RBTerm::theta();
    }
    if (c == 'Z') {
      ++pos_;
      std::string idx = digits();
      if (idx.empty()) fail("generator needs an index");
      return RBTerm::generator(std::stoi(idx));
    }
    if (c == 'X') {
      ++pos_;
      return RBTerm::generator(1);
    }
    if (c == 'R') {
      ++pos_;
      if (!eat('(')) fail("expected '(' after R");
      RBTerm inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner.apply_r();
    }
    if (c == '(') {
      ++pos_;
      RBTerm inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RBTerm normal_form(const RBTerm& t) {
  Normalizer n;
  RBTerm out;
  for (const auto& [key, e] : t.terms()) out = out + e.coeff * n.run(e.mono);
  return out;
}

RBTerm parse_rb_term(std::string_view text) { return Parser(text).parse(); }

}  // namespace rbalg
