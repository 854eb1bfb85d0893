#include "rbalg/ncpoly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "rbalg/errors.hpp"

namespace rbalg {

Generator::Generator(int alphabet, int index) {
  if (alphabet < 0 || alphabet > 255 || index < 1 || index > 255) {
    throw PreconditionError("generator out of range: alphabet " + std::to_string(alphabet) + ", index " + std::to_string(index));
  }
  code_ = static_cast<std::uint16_t>(alphabet * 256 + index);
}

std::string Generator::to_string() const { return "x[" + std::to_string(alphabet()) + "," + std::to_string(index()) + "]"; }

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string render_word(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += Generator::from_code(w[i]).to_string();
  }
  return s;
}

namespace {

using Term = NCPoly::Term;

bool term_less(const Term& a, const Term& b) { return word_less(a.first, b.first); }

// Merge two sorted, duplicate-free term lists, summing equal words.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin(), j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && word_less(i->first, j->first))) {
      out.push_back(*i++);
    } else if (i == a.end() || word_less(j->first, i->first)) {
      out.emplace_back(j->first, negate_b ? -j->second : j->second);
      ++j;
    } else {
      Rational c = negate_b ? i->second - j->second : i->second + j->second;
      if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

struct Range {
  std::size_t begin, end, length;
};

std::vector<Range> length_ranges(const std::vector<Term>& t) {
  std::vector<Range> r;
  for (std::size_t i = 0; i < t.size();) {
    std::size_t j = i;
    while (j < t.size() && t[j].first.size() == t[i].first.size()) ++j;
    r.push_back({i, j, t[i].first.size()});
    i = j;
  }
  return r;
}

}  // namespace

NCPoly::NCPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace_back(Word{}, constant);
}

NCPoly NCPoly::generator(Generator g, const Rational& coeff) { return monomial(Word{g.code()}, coeff); }

NCPoly NCPoly::monomial(Word w, const Rational& coeff) {
  NCPoly p;
  if (!coeff.is_zero()) p.terms_.emplace_back(std::move(w), coeff);
  return p;
}

NCPoly NCPoly::from_terms(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(), term_less);
  NCPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Rational NCPoly::coeff(const Word& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w, [](const Term& t, const Word& x) { return word_less(t.first, x); });
  if (it != terms_.end() && it->first == w) return it->second;
  return Rational();
}

bool NCPoly::is_homogeneous() const {
  return terms_.empty() || terms_.front().first.size() == terms_.back().first.size();
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    bool neg = c.sign() < 0;
    Rational mag = neg ? -c : c;
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    if (w.empty()) {
      os << mag;
    } else {
      if (!mag.is_one()) os << mag << "*";
      os << render_word(w);
    }
    first = false;
  }
  return os.str();
}

NCPoly NCPoly::operator-() const {
  NCPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

NCPoly operator+(const NCPoly& a, const NCPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  NCPoly p;
  p.terms_ = merge_terms(a.terms_, b.terms_, false);
  return p;
}

NCPoly operator-(const NCPoly& a, const NCPoly& b) {
  if (b.is_zero()) return a;
  NCPoly p;
  p.terms_ = merge_terms(a.terms_, b.terms_, true);
  return p;
}

NCPoly operator*(const Rational& s, const NCPoly& a) {
  if (s.is_zero()) return NCPoly();
  if (s.is_one()) return a;
  NCPoly p = a;
  for (auto& t : p.terms_) t.second *= s;
  return p;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  if (a.is_zero() || b.is_zero()) return NCPoly();
  // For fixed lengths (la, lb) the concatenations u·v run through distinct words
  // in increasing order, so each length pair yields a sorted block and only
  // blocks sharing a total length need merging.
  auto ra = length_ranges(a.terms_);
  auto rb = length_ranges(b.terms_);
  std::size_t max_len = ra.back().length + rb.back().length;
  NCPoly out;
  for (std::size_t total = ra.front().length + rb.front().length; total <= max_len; ++total) {
    std::vector<Term> acc;
    for (const auto& x : ra) {
      if (x.length > total) break;
      for (const auto& y : rb) {
        if (x.length + y.length != total) continue;
        std::vector<Term> block;
        block.reserve((x.end - x.begin) * (y.end - y.begin));
        for (std::size_t i = x.begin; i < x.end; ++i) {
          const auto& [u, cu] = a.terms_[i];
          for (std::size_t j = y.begin; j < y.end; ++j) {
            const auto& [v, cv] = b.terms_[j];
            Word w;
            w.reserve(u.size() + v.size());
            w.insert(w.end(), u.begin(), u.end());
            w.insert(w.end(), v.begin(), v.end());
            block.emplace_back(std::move(w), cu * cv);
          }
        }
        acc = acc.empty() ? std::move(block) : merge_terms(acc, block, false);
      }
    }
    for (auto& t : acc) out.terms_.push_back(std::move(t));
  }
  return out;
}

Word sup_monomial(const NCPoly& p) {
  if (p.is_zero()) throw PreconditionError("sup of the zero polynomial");
  return p.terms().back().first;
}

NCPoly m_qsym_truncated(const std::vector<int>& f, int num_vars, int alphabet) {
  if (f.empty()) throw PreconditionError("empty surjection");
  int k = *std::max_element(f.begin(), f.end());
  std::vector<bool> hit(static_cast<std::size_t>(k) + 1, false);
  for (int v : f) {
    if (v < 1) throw PreconditionError("surjection values must be positive");
    hit[static_cast<std::size_t>(v)] = true;
  }
  for (int v = 1; v <= k; ++v) {
    if (!hit[static_cast<std::size_t>(v)]) throw PreconditionError("not a surjection onto {1..k}");
  }
  std::vector<NCPoly::Term> terms;
  std::vector<int> phi(static_cast<std::size_t>(k) + 1, 0);
  std::function<void(int, int)> rec = [&](int slot, int lowest) {
    if (slot > k) {
      Word w;
      for (int v : f) w.push_back(Generator(alphabet, phi[static_cast<std::size_t>(v)]).code());
      terms.emplace_back(std::move(w), Rational(1));
      return;
    }
    for (int x = lowest; x <= num_vars - (k - slot); ++x) {
      phi[static_cast<std::size_t>(slot)] = x;
      rec(slot + 1, x + 1);
    }
  };
  rec(1, 1);
  return NCPoly::from_terms(std::move(terms));
}

}  // namespace rbalg
