#include "rbalg/hopf.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace rbalg {

// ---------------------------------------------------------------------------
// Trees

int Tree::size() const {
  int n = 1;
  for (const auto& c : children) n += c.size();
  return n;
}

std::string Tree::to_string() const {
  std::string s = "(";
  for (const auto& c : children) s += c.to_string();
  return s + ")";
}

namespace {

void canonicalize(Tree& t) {
  for (auto& c : t.children) canonicalize(c);
  std::sort(t.children.begin(), t.children.end(),
            [](const Tree& a, const Tree& b) { return a.to_string() < b.to_string(); });
}

class TreeParser {
 public:
  explicit TreeParser(std::string_view s) : s_(s) {}

  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }

  Tree tree() {
    skip();
    if (s_.substr(pos_, 3) == "\xE2\x80\xA2") {  // bullet: single vertex
      pos_ += 3;
      return Tree{};
    }
    if (pos_ >= s_.size() || s_[pos_] != '(') fail("expected '('");
    ++pos_;
    Tree t;
    for (;;) {
      skip();
      if (pos_ >= s_.size()) fail("unbalanced parentheses");
      if (s_[pos_] == ')') {
        ++pos_;
        return t;
      }
      t.children.push_back(tree());
    }
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("tree parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

struct Cut {
  std::vector<std::string> pruned;
  Tree trunk;
};

// Admissible cuts of t, including the empty cut; the root always stays in the trunk.
std::vector<Cut> admissible_cuts(const Tree& t) {
  std::vector<Cut> acc{Cut{{}, Tree{}}};
  for (const auto& child : t.children) {
    auto below = admissible_cuts(child);
    std::vector<Cut> next;
    for (const auto& partial : acc) {
      Cut removed = partial;
      removed.pruned.push_back(child.to_string());
      next.push_back(std::move(removed));
      for (const auto& c : below) {
        Cut kept = partial;
        kept.pruned.insert(kept.pruned.end(), c.pruned.begin(), c.pruned.end());
        kept.trunk.children.push_back(c.trunk);
        next.push_back(std::move(kept));
      }
    }
    acc = std::move(next);
  }
  for (auto& c : acc) canonicalize(c.trunk);
  return acc;
}

}  // namespace

Tree Tree::parse(std::string_view text) {
  TreeParser p(text);
  Tree t = p.tree();
  if (!p.at_end()) throw ParseError("trailing characters after tree '" + std::string(text) + "'");
  canonicalize(t);
  return t;
}

std::vector<Tree> parse_forest(std::string_view text) {
  TreeParser p(text);
  std::vector<Tree> out;
  while (!p.at_end()) {
    out.push_back(p.tree());
    canonicalize(out.back());
  }
  return out;
}

// ---------------------------------------------------------------------------
// HopfAlgebra

HopfAlgebra::HopfAlgebra(HopfKind kind, int max_degree) : kind_(kind), max_degree_(max_degree) {
  if (max_degree < 0) throw PreconditionError("negative degree bound");
  if (kind != HopfKind::Trees) return;
  // Trees with n vertices: a root above a multiset of smaller trees, built by degree.
  std::vector<std::vector<std::string>> by_degree(static_cast<std::size_t>(max_degree + 1));
  std::vector<Tree> all;
  for (int n = 1; n <= max_degree; ++n) {
    std::vector<std::string> found;
    auto extend = [&](auto&& self, Tree& t, int remaining, std::size_t min_index) -> void {
      if (remaining == 0) {
        Tree c = t;
        canonicalize(c);
        found.push_back(c.to_string());
        return;
      }
      for (std::size_t i = min_index; i < all.size(); ++i) {
        int s = all[i].size();
        if (s > remaining) continue;
        t.children.push_back(all[i]);
        self(self, t, remaining - s, i);
        t.children.pop_back();
      }
    };
    Tree root;
    extend(extend, root, n - 1, 0);
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    for (const auto& s : found) all.push_back(Tree::parse(s));
    by_degree[static_cast<std::size_t>(n)] = std::move(found);
  }
  for (int n = 1; n <= max_degree; ++n) {
    for (const auto& s : by_degree[static_cast<std::size_t>(n)]) {
      tree_ids_.emplace(s, static_cast<int>(tree_names_.size()));
      tree_names_.push_back(s);
      tree_degrees_.push_back(n);
    }
  }
}

std::shared_ptr<const HopfAlgebra> HopfAlgebra::make(HopfKind kind, int max_degree) {
  return std::make_shared<const HopfAlgebra>(kind, max_degree);
}
std::shared_ptr<const HopfAlgebra> HopfAlgebra::ladder(int max_degree) { return make(HopfKind::Ladder, max_degree); }
std::shared_ptr<const HopfAlgebra> HopfAlgebra::trees(int max_degree) { return make(HopfKind::Trees, max_degree); }
std::shared_ptr<const HopfAlgebra> HopfAlgebra::ncsf(int max_degree) { return make(HopfKind::Ncsf, max_degree); }

std::string HopfAlgebra::name() const {
  switch (kind_) {
    case HopfKind::Ladder: return "ladder";
    case HopfKind::Trees: return "trees";
    case HopfKind::Ncsf: return "ncsf";
  }
  return "?";
}

void HopfAlgebra::check_degree(int degree) const {
  if (degree < 0 || degree > max_degree_) {
    throw PreconditionError("degree " + std::to_string(degree) + " outside 0.." + std::to_string(max_degree_) + " for " + name());
  }
}

std::vector<int> HopfAlgebra::generators(int degree) const {
  check_degree(degree);
  if (degree == 0) return {};
  if (kind_ != HopfKind::Trees) return {degree};
  std::vector<int> out;
  for (std::size_t i = 0; i < tree_degrees_.size(); ++i) {
    if (tree_degrees_[i] == degree) out.push_back(static_cast<int>(i));
  }
  return out;
}

int HopfAlgebra::generator_degree(int gen) const {
  if (kind_ != HopfKind::Trees) {
    if (gen < 1 || gen > max_degree_) throw PreconditionError("unknown generator id " + std::to_string(gen));
    return gen;
  }
  if (gen < 0 || gen >= static_cast<int>(tree_degrees_.size())) throw PreconditionError("unknown tree id " + std::to_string(gen));
  return tree_degrees_[static_cast<std::size_t>(gen)];
}

std::string HopfAlgebra::generator_name(int gen) const {
  (void)generator_degree(gen);
  switch (kind_) {
    case HopfKind::Ladder: return "t" + std::to_string(gen);
    case HopfKind::Ncsf: return "S" + std::to_string(gen);
    case HopfKind::Trees: return tree_names_[static_cast<std::size_t>(gen)];
  }
  return "?";
}

int HopfAlgebra::find_generator(std::string_view name) const {
  if (kind_ == HopfKind::Trees) {
    std::string key = Tree::parse(name).to_string();
    auto it = tree_ids_.find(key);
    if (it == tree_ids_.end()) throw ParseError("tree " + key + " exceeds degree " + std::to_string(max_degree_));
    return it->second;
  }
  char prefix = kind_ == HopfKind::Ladder ? 't' : 'S';
  if (name.size() < 2 || name[0] != prefix ||
      !std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError("'" + std::string(name) + "' is not a generator of " + this->name());
  }
  int n = std::stoi(std::string(name.substr(1)));
  if (n < 1 || n > max_degree_) throw ParseError("generator '" + std::string(name) + "' outside degree range");
  return n;
}

int HopfAlgebra::degree(const Basis& b) const {
  int d = 0;
  for (int g : b.gens) d += generator_degree(g);
  return d;
}

std::vector<Basis> HopfAlgebra::basis(int degree) const {
  check_degree(degree);
  std::vector<Basis> out;
  if (kind_ == HopfKind::Ncsf) {
    if (degree == 0) return {Basis{}};
    for (const auto& c : enumerate_compositions(degree)) out.push_back(Basis{c.parts()});
    return out;
  }
  std::vector<int> gens;
  for (int d = 1; d <= degree; ++d) {
    for (int g : generators(d)) gens.push_back(g);
  }
  Basis current;
  auto rec = [&](auto&& self, int remaining, std::size_t min_index) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = min_index; i < gens.size(); ++i) {
      int d = generator_degree(gens[i]);
      if (d > remaining) continue;
      current.gens.push_back(gens[i]);
      self(self, remaining - d, i);
      current.gens.pop_back();
    }
  };
  rec(rec, degree, 0);
  return out;
}

std::vector<Basis> HopfAlgebra::basis_up_to(int max_degree) const {
  std::vector<Basis> out;
  for (int d = 0; d <= max_degree; ++d) {
    auto b = basis(d);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

Basis HopfAlgebra::product(const Basis& a, const Basis& b) const {
  Basis out = a;
  out.gens.insert(out.gens.end(), b.gens.begin(), b.gens.end());
  if (is_commutative()) std::sort(out.gens.begin(), out.gens.end());
  return out;
}

std::vector<CoproductTerm> HopfAlgebra::generator_coproduct(int gen) const {
  std::vector<CoproductTerm> out;
  if (kind_ != HopfKind::Trees) {
    for (int i = 0; i <= gen; ++i) {
      Basis l = i == 0 ? Basis{} : Basis{{i}};
      Basis r = i == gen ? Basis{} : Basis{{gen - i}};
      out.push_back(CoproductTerm{l, r, Rational(1)});
    }
    return out;
  }
  Tree t = Tree::parse(tree_names_[static_cast<std::size_t>(gen)]);
  out.push_back(CoproductTerm{Basis{{gen}}, Basis{}, Rational(1)});
  std::map<std::pair<Basis, Basis>, Rational> merged;
  for (const auto& c : admissible_cuts(t)) {
    Basis left;
    for (const auto& s : c.pruned) left.gens.push_back(tree_ids_.at(s));
    std::sort(left.gens.begin(), left.gens.end());
    Basis right{{tree_ids_.at(c.trunk.to_string())}};
    auto& slot = merged[{left, right}];
    slot = slot + Rational(1);
  }
  for (auto& [k, c] : merged) out.push_back(CoproductTerm{k.first, k.second, c});
  return out;
}

std::vector<CoproductTerm> HopfAlgebra::coproduct(const Basis& b) const {
  {
    std::lock_guard lock(memo_mutex_);
    if (auto it = memo_.find(b); it != memo_.end()) return it->second;
  }
  check_degree(degree(b));
  std::vector<CoproductTerm> acc{CoproductTerm{Basis{}, Basis{}, Rational(1)}};
  for (int g : b.gens) {
    auto dg = generator_coproduct(g);
    std::map<std::pair<Basis, Basis>, Rational> merged;
    for (const auto& x : acc) {
      for (const auto& y : dg) {
        auto& slot = merged[{product(x.left, y.left), product(x.right, y.right)}];
        slot = slot + x.coeff * y.coeff;
      }
    }
    acc.clear();
    for (auto& [k, c] : merged) {
      if (!c.is_zero()) acc.push_back(CoproductTerm{k.first, k.second, c});
    }
  }
  std::lock_guard lock(memo_mutex_);
  memo_.emplace(b, acc);
  return acc;
}

std::string HopfAlgebra::render(const Basis& b) const {
  if (b.gens.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < b.gens.size(); ++i) {
    if (i) s += " ";
    s += generator_name(b.gens[i]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Elements

HopfElement::HopfElement(const Basis& b, const Rational& c) { add_term(b, c); }

Rational HopfElement::coeff(const Basis& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

void HopfElement::add_term(const Basis& b, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(b, c);
  if (inserted) return;
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

HopfElement operator+(const HopfElement& a, const HopfElement& b) {
  HopfElement out = a;
  for (const auto& [k, c] : b.terms_) out.add_term(k, c);
  return out;
}

HopfElement operator-(const HopfElement& a, const HopfElement& b) {
  HopfElement out = a;
  for (const auto& [k, c] : b.terms_) out.add_term(k, -c);
  return out;
}

HopfElement operator*(const Rational& c, const HopfElement& a) {
  HopfElement out;
  if (c.is_zero()) return out;
  for (const auto& [k, v] : a.terms_) out.terms_.emplace(k, c * v);
  return out;
}

HopfElement HopfTarget::mul(const Element& a, const Element& b) const {
  HopfElement out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) out.add_term(h_->product(ka, kb), ca * cb);
  }
  return out;
}

std::string HopfTarget::render(const Element& a) const {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : a.terms()) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << "(" << c << ")*";
    os << "[" << h_->render(b) << "]";
  }
  return os.str();
}

LinMap<HopfTarget> identity_map(const HopfPtr& h, int bound) {
  LinMap<HopfTarget> f(h, HopfTarget(h), bound);
  for (const auto& b : h->basis_up_to(bound)) f.set(b, HopfElement(b));
  return f;
}

LinMap<HopfTarget> grading_map(const HopfPtr& h, int bound) { return graded(identity_map(h, bound)); }

LinMap<HopfTarget> antipode_map(const HopfPtr& h, int bound) { return conv_inverse(identity_map(h, bound)); }

LinMap<HopfTarget> dynkin_operator(const HopfPtr& h, int bound) { return dynkin(identity_map(h, bound)); }

HopfElement antipode(const HopfPtr& h, const HopfElement& x) {
  int top = 0;
  for (const auto& [b, c] : x.terms()) top = std::max(top, h->degree(b));
  return antipode_map(h, top).apply(x);
}

}  // namespace rbalg
