#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rbalg/hopf.hpp"
#include "rbalg/identities.hpp"
#include "rbalg/random.hpp"
#include "rbalg/rb_term.hpp"
#include "rbalg/renorm.hpp"
#include "rbalg/series.hpp"

namespace rbalg::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kDegreeCap = 7;
constexpr int kExpandCap = 4;

const std::vector<std::string> kIdentities = {"rb",  "atkinson", "spitzer", "waring",   "bs",   "ncbs",     "key",         "tu-left",
                                              "tu-right", "ncqsym", "antipode", "dynkin", "magnus", "eulerian", "gamma-dynkin"};

struct Options {
  std::string model = "seq";
  std::string weight;
  std::optional<int> n;
  std::optional<int> trunc;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string output;
  int workers = default_workers();
  bool unsafe_degree = false;
  bool timing = false;
  std::string hopf = "ladder";
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--model", o.model, "seq, laurent, polyint, matrix or riemann")->check(CLI::IsMember({"seq", "laurent", "polyint", "matrix", "riemann"}));
  sub->add_option("--weight", o.weight, "target weight p/q, reached by rescaling R");
  sub->add_option("--n", o.n, "number of arguments, order or degree");
  sub->add_option("--trunc", o.trunc, "model truncation (sequence length, Riemann grid points, NCQSym component)");
  sub->add_option("--seed", o.seed, "random seed");
  sub->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--output", o.output, "write the report to this file");
  sub->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
  sub->add_flag("--unsafe-degree", o.unsafe_degree, "allow degrees above the hard cap");
  sub->add_flag("--timing", o.timing, "include elapsed seconds in the report");
  sub->add_option("--hopf", o.hopf, "ladder, trees or ncsf")->check(CLI::IsMember({"ladder", "trees", "ncsf"}));
}

int degree_of(const Options& o, int fallback, int cap = kDegreeCap) {
  int n = o.n.value_or(fallback);
  if (n < 1) throw UsageError("--n must be positive");
  if (n > cap && !o.unsafe_degree) {
    throw UsageError("--n " + std::to_string(n) + " exceeds the cap " + std::to_string(cap) + "; pass --unsafe-degree to override");
  }
  return n;
}

HopfKind hopf_kind(const std::string& name) {
  if (name == "trees") return HopfKind::Trees;
  if (name == "ncsf") return HopfKind::Ncsf;
  return HopfKind::Ladder;
}

// ---------------------------------------------------------------------------
// Report rendering

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string format_seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << s;
  return os.str();
}

struct VerifyResult {
  std::string check;
  IdentityReport report;
};

std::string render_verify(const VerifyResult& r, const Options& o) {
  const auto& rep = r.report;
  bool timing = o.timing && rep.elapsed_seconds;
  if (o.format == "json") {
    Json j;
    j["check"] = r.check;
    j["identity"] = rep.identity;
    j["model"] = rep.model;
    j["weight"] = rep.weight;
    j["n"] = rep.n;
    j["seed"] = o.seed;
    j["lhs_terms"] = rep.lhs_terms;
    j["rhs_terms"] = rep.rhs_terms;
    j["residual_zero"] = rep.residual_zero;
    j["first_nonzero"] = rep.first_nonzero.empty() ? Json(nullptr) : Json(rep.first_nonzero);
    if (timing) j["elapsed_seconds"] = *rep.elapsed_seconds;
    return j.dump(2) + "\n";
  }
  if (o.format == "csv") {
    std::string header = "check,identity,model,weight,n,seed,lhs_terms,rhs_terms,residual_zero,first_nonzero";
    std::string row = csv_field(r.check) + "," + csv_field(rep.identity) + "," + csv_field(rep.model) + "," + csv_field(rep.weight) + "," +
                      std::to_string(rep.n) + "," + std::to_string(o.seed) + "," + std::to_string(rep.lhs_terms) + "," +
                      std::to_string(rep.rhs_terms) + "," + (rep.residual_zero ? "true" : "false") + "," + csv_field(rep.first_nonzero);
    if (timing) {
      header += ",elapsed_seconds";
      row += "," + format_seconds(*rep.elapsed_seconds);
    }
    return header + "\n" + row + "\n";
  }
  std::ostringstream os;
  os << "check: " << r.check << "\n"
     << "identity: " << rep.identity << "\n"
     << "model: " << rep.model << "\n"
     << "weight: " << rep.weight << "\n"
     << "n: " << rep.n << "\n"
     << "seed: " << o.seed << "\n"
     << "terms: " << rep.lhs_terms << " = " << rep.rhs_terms << "\n"
     << "residual: " << (rep.residual_zero ? "zero" : "NONZERO at " + rep.first_nonzero) << "\n";
  if (timing) os << "elapsed: " << format_seconds(*rep.elapsed_seconds) << " s\n";
  return os.str();
}

void emit(const std::string& text, const Options& o, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file) throw UsageError("cannot write " + o.output);
  file << text;
  if (!file) throw UsageError("failed writing " + o.output);
}

// ---------------------------------------------------------------------------
// verify

class Clock {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

template <RotaBaxterModel M>
IdentityReport plain_report(const M& m, std::string identity, int n, std::uint64_t lhs_terms, std::uint64_t rhs_terms,
                            std::string first_nonzero, const Clock& clock) {
  IdentityReport r;
  r.identity = std::move(identity);
  r.model = m.name();
  r.weight = m.weight().to_string();
  r.n = n;
  r.lhs_terms = lhs_terms;
  r.rhs_terms = rhs_terms;
  r.residual_zero = first_nonzero.empty();
  r.first_nonzero = std::move(first_nonzero);
  r.elapsed_seconds = clock.seconds();
  return r;
}

// Location of the first coefficient where two series differ, or "".
template <RotaBaxterModel M>
std::string series_difference(const M& m, const std::string& label, const RBSeries<M>& a, const RBSeries<M>& b) {
  for (int k = 0; k <= a.order(); ++k) {
    auto d = m.sub(a[k], b[k]);
    if (!m.is_zero(d)) return label + " at t^" + std::to_string(k) + ": " + describe_nonzero(m, d);
  }
  return {};
}

template <RotaBaxterModel M>
std::vector<ElementOf<M>> arguments(const M& m, int n, Rng& rng) {
  if constexpr (std::is_same_v<M, SequenceModel>) {
    return random_scaled_generators(m, n, rng);
  } else if constexpr (std::is_same_v<M, Rescaled<SequenceModel>>) {
    return random_scaled_generators(m.base(), n, rng);
  } else {
    std::vector<ElementOf<M>> xs;
    for (int i = 0; i < n; ++i) xs.push_back(random_element(m, rng));
    return xs;
  }
}

template <RotaBaxterModel M>
IdentityReport verify_in_model(const std::string& id, const M& m, const Options& o, Rng& rng) {
  if (id == "rb") {
    Clock clock;
    int pairs = o.n.value_or(200);
    if (pairs < 1) throw UsageError("--n must be positive");
    std::string first;
    for (int i = 0; i < pairs; ++i) {
      auto x = random_element(m, rng), y = random_element(m, rng);
      auto r = check_rb(m, x, y);
      if (first.empty() && !m.is_zero(r)) first = "pair " + std::to_string(i + 1) + ": " + describe_nonzero(m, r);
    }
    return plain_report(m, "Rota-Baxter relation", pairs, static_cast<std::uint64_t>(pairs), static_cast<std::uint64_t>(pairs), first, clock);
  }
  if (id == "atkinson") {
    Clock clock;
    int n = degree_of(o, 6, 10);
    auto a = arguments(m, 1, rng).front();
    auto residual = atkinson_factorization_residual(m, a, n);
    auto [finv, ginv] = atkinson_inverses(m, a, n);
    auto first = series_difference(m, "factorization", residual, series_zero(m, n));
    if (first.empty()) first = series_difference(m, "F inverse", finv, series_inverse(atkinson_F(m, a, n)));
    if (first.empty()) first = series_difference(m, "G inverse", ginv, series_inverse(atkinson_G(m, a, n)));
    return plain_report(m, "Atkinson factorization", n, static_cast<std::uint64_t>(n + 1), static_cast<std::uint64_t>(n + 1), first, clock);
  }
  if (id == "spitzer") {
    Clock clock;
    int n = degree_of(o, 6, 10);
    auto a = arguments(m, 1, rng).front();
    auto first = series_difference(m, "Spitzer", atkinson_F(m, a, n), classical_spitzer_rhs(m, a, n));
    return plain_report(m, "classical Spitzer identity", n, static_cast<std::uint64_t>(n + 1), static_cast<std::uint64_t>(n + 1), first, clock);
  }
  if (id == "magnus") {
    Clock clock;
    int n = degree_of(o, 5, 8);
    auto a = arguments(m, 1, rng).front();
    auto recursive = magnus_omega_recursive(m, a, n);
    auto simplex = magnus_omega_strichartz(m, a, n);
    auto logarithm = magnus_omega_from_log(m, a, n);
    auto first = series_difference(m, "recursive vs simplex", recursive, simplex);
    if (first.empty()) first = series_difference(m, "recursive vs log", recursive, logarithm);
    if (first.empty()) first = series_difference(m, "exp(omega) vs F", series_exp(simplex), atkinson_F(m, a, n));
    return plain_report(m, "Magnus expansion routes", n, 3, 3, first, clock);
  }
  if (id == "waring") return check_waring(m, arguments(m, 1, rng).front(), degree_of(o, 4)).report;
  if (id == "key") return check_key_identity(m, arguments(m, 1, rng).front(), degree_of(o, 4)).report;
  if (id == "bs") return check_commutative_bs(m, arguments(m, degree_of(o, 4), rng), o.workers).report;
  if (id == "ncbs") return check_ncbs(m, arguments(m, degree_of(o, 4), rng), o.workers).report;
  if (id == "tu-left") return check_new_identity(m, arguments(m, degree_of(o, 4), rng), NestingSide::Left, o.workers).report;
  if (id == "tu-right") return check_new_identity(m, arguments(m, degree_of(o, 4), rng), NestingSide::Right, o.workers).report;
  throw UsageError("identity " + id + " does not take a model");
}

template <class Fn>
IdentityReport with_model(const Options& o, Fn fn) {
  std::optional<Rational> weight;
  if (!o.weight.empty()) weight = Rational::parse(o.weight);
  auto dispatch = [&](const auto& base) {
    if (!weight || *weight == base.weight()) return fn(base);
    if (base.weight().is_zero()) throw UsageError("model " + base.name() + " has weight 0 and cannot be rescaled to " + weight->to_string());
    return fn(rescale(base, *weight / base.weight()));
  };
  int trunc = o.trunc.value_or(0);
  if (o.trunc && trunc < 1) throw UsageError("--trunc must be positive");
  if (o.model == "seq") return dispatch(SequenceModel(trunc ? trunc : std::max(4, o.n.value_or(4) + 2)));
  if (o.model == "laurent") return dispatch(LaurentMSModel{});
  if (o.model == "polyint") return dispatch(PolyIntModel{});
  if (o.model == "matrix") return dispatch(MatrixPolyModel(2));
  return dispatch(RiemannModel(Rational(1), trunc ? trunc : 6, false));
}

LaurentMap random_character(const HopfPtr& h, int bound, Rng& rng) {
  std::map<int, LaurentSeries> gens;
  for (int d = 1; d <= bound; ++d) {
    for (int g : h->generators(d)) gens[g] = random_laurent(rng, 1, 1);
  }
  return character_from_generators(h, LaurentMSModel{}, bound, gens);
}

IdentityReport hopf_report(const HopfPtr& h, const std::string& identity, int n, bool ok, const std::string& failure, const Clock& clock) {
  IdentityReport r;
  r.identity = identity;
  r.model = "characters " + h->name() + " -> laurent-ms";
  r.weight = "-1";
  r.n = n;
  auto count = static_cast<std::uint64_t>(h->basis_up_to(n).size());
  r.lhs_terms = count;
  r.rhs_terms = count;
  r.residual_zero = ok;
  if (!ok) r.first_nonzero = failure;
  r.elapsed_seconds = clock.seconds();
  return r;
}

IdentityReport verify(const std::string& id, const Options& o) {
  Rng rng(o.seed);
  if (id == "ncqsym") {
    if (o.model != "seq") throw UsageError("ncqsym is checked in the sequence model");
    int k = o.trunc.value_or(8);
    if (k < 1) throw UsageError("--trunc must be positive");
    return check_ncqsym(degree_of(o, 4), k).report;
  }
  if (id == "antipode") {
    if (o.model != "seq") throw UsageError("antipode is checked in the sequence model");
    return check_antipode_spitzer(degree_of(o, 4)).report;
  }
  if (id == "dynkin") {
    if (o.model != "seq") throw UsageError("dynkin is checked in the sequence model");
    return check_dynkin_generators(degree_of(o, 4)).report;
  }
  if (id == "eulerian" || id == "gamma-dynkin") {
    Clock clock;
    int n = degree_of(o, 5);
    auto h = HopfAlgebra::make(hopf_kind(o.hopf), n);
    auto gamma = random_character(h, n, rng);
    if (id == "eulerian") {
      auto log = conv_log(gamma, o.workers);
      bool infinitesimal = is_infinitesimal(log);
      bool round_trip = conv_exp(log, o.workers) == gamma;
      std::string failure = !infinitesimal ? "log is not infinitesimal" : "exp(log) differs from the character";
      return hopf_report(h, "Eulerian exp/log round trip", n, infinitesimal && round_trip, failure, clock);
    }
    bool ok = gamma_reconstruct(dynkin(gamma, o.workers), o.workers) == gamma;
    return hopf_report(h, "reconstruction from the Dynkin image", n, ok, "reconstruction differs from the character", clock);
  }
  return with_model(o, [&](const auto& m) { return verify_in_model(id, m, o, rng); });
}

// ---------------------------------------------------------------------------
// renormalize

Json laurent_json(const LaurentSeries& v) {
  Json j = Json::object();
  for (const auto& [e, c] : v.terms()) j[std::to_string(e)] = c.to_string();
  return j;
}

Json map_json(const LaurentMap& f) {
  Json j = Json::object();
  for (const auto& b : f.hopf()->basis_up_to(f.bound())) {
    auto v = f(b);
    if (!v.is_zero()) j[f.hopf()->render(b)] = laurent_json(v);
  }
  return j;
}

LaurentMap restrict_degree(const LaurentMap& f, int bound) {
  LaurentMap out(f.hopf(), f.target(), bound);
  for (const auto& b : f.hopf()->basis_up_to(bound)) out.set(b, f(b));
  return out;
}

std::string render_renormalization(const Json& j, const Options& o) {
  if (o.format == "json") return j.dump(2) + "\n";
  std::ostringstream os;
  auto series_text = [](const Json& s) {
    if (s.empty()) return std::string("0");
    std::string t;
    for (const auto& [e, c] : s.items()) t += (t.empty() ? "" : " + ") + c.get<std::string>() + "*eps^" + e;
    return t;
  };
  if (o.format == "csv") {
    os << "section,basis,exponent,value\n";
    for (const char* section : {"gamma_minus", "gamma_plus"}) {
      for (const auto& [b, s] : j[section].items()) {
        for (const auto& [e, c] : s.items()) os << section << "," << csv_field(b) << "," << e << "," << c.get<std::string>() << "\n";
      }
    }
    for (const auto& [b, c] : j["renormalized"].items()) os << "renormalized," << csv_field(b) << ",0," << c.get<std::string>() << "\n";
    for (const auto& [k, v] : j["checks"].items()) os << "check," << k << ",," << (v.get<bool>() ? "true" : "false") << "\n";
    return os.str();
  }
  os << "hopf: " << j["hopf"].get<std::string>() << "\ndegree: " << j["degree"].get<int>() << "\n";
  for (const char* section : {"gamma_minus", "gamma_plus"}) {
    for (const auto& [b, s] : j[section].items()) os << section << "(" << b << ") = " << series_text(s) << "\n";
  }
  for (const auto& [b, c] : j["renormalized"].items()) os << "renormalized(" << b << ") = " << c.get<std::string>() << "\n";
  for (const auto& [k, v] : j["checks"].items()) os << k << ": " << (v.get<bool>() ? "true" : "false") << "\n";
  for (const auto& d : j["beta"]["degrees"]) {
    os << "beta degree " << d["degree"].get<int>() << ": " << (d["scalar_form"].get<bool>() ? "scalar" : "not scalar") << "\n";
  }
  return os.str();
}

int renormalize(const std::string& path, const Options& o, std::ostream& out) {
  auto in = ingest_character(path);
  auto gamma = in.gamma;
  if (o.n) {
    if (*o.n < 0 || *o.n > gamma.bound()) throw UsageError("--n must lie between 0 and the file degree " + std::to_string(gamma.bound()));
    gamma = restrict_degree(gamma, *o.n);
  }
  Clock clock;
  auto pair = bogoliubov(gamma, o.workers);
  auto closed = closed_counterterm(gamma, o.workers);
  auto exponential = exp_counterterm(gamma, o.workers);
  auto beta = beta_report(gamma, o.workers);
  auto limit = renormalized_limit(pair);
  auto e = counit_map(gamma.hopf(), LaurentMSModel{}, gamma.bound());

  Json j;
  j["hopf"] = in.hopf->name();
  j["degree"] = gamma.bound();
  j["gamma_minus"] = map_json(pair.gamma_minus);
  j["gamma_plus"] = map_json(pair.gamma_plus);
  Json renormalized = Json::object();
  for (const auto& [b, c] : limit) renormalized[in.hopf->render(b)] = c.to_string();
  j["renormalized"] = renormalized;
  Json degrees = Json::array();
  for (const auto& d : beta.degrees) {
    Json coeffs = Json::object();
    for (const auto& [b, c] : d.coeffs) coeffs[in.hopf->render(b)] = c.to_string();
    degrees.push_back(Json{{"degree", d.degree}, {"scalar_form", d.scalar_form}, {"coefficients", coeffs}});
  }
  j["beta"] = Json{{"dynkin_of_counterterm", map_json(beta.dynkin_minus)}, {"reconstruction_holds", beta.reconstruction_holds}, {"degrees", degrees}};
  Json checks;
  checks["closed_counterterm_agrees"] = closed == pair.gamma_minus;
  checks["exp_counterterm_agrees"] = exponential == pair.gamma_minus;
  checks["refinement_matches_simplex"] = refinement_coefficients_match_simplex(gamma.bound());
  checks["birkhoff_product"] = convolution(conv_inverse(pair.gamma_minus), pair.gamma_plus, o.workers) == gamma;
  checks["minus_multiplicative"] = pair.minus_multiplicative;
  checks["plus_multiplicative"] = pair.plus_multiplicative;
  checks["uniqueness"] = uniqueness_check(gamma, o.workers);
  checks["gamma_reconstruction"] = beta.reconstruction_holds;
  j["checks"] = checks;
  j["counterterm_trivial"] = pair.gamma_minus == e;
  if (o.timing) j["elapsed_seconds"] = clock.seconds();

  emit(render_renormalization(j, o), o, out);
  for (const auto& [k, v] : checks.items()) {
    if (!v.get<bool>()) return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// magnus table

int magnus_table(const Options& o, std::ostream& out) {
  int n = degree_of(o, 4, 10);
  auto table = strichartz_table(n);
  auto comp_text = [](const Composition& c) {
    std::string s;
    for (int p : c.parts()) s += (s.empty() ? "" : ",") + std::to_string(p);
    return s;
  };
  std::ostringstream os;
  if (o.format == "json") {
    Json rows = Json::array();
    for (const auto& [c, v] : table) rows.push_back(Json{{"composition", c.parts()}, {"coefficient", v.to_string()}});
    os << Json{{"max_weight", n}, {"coefficients", rows}}.dump(2) << "\n";
  } else if (o.format == "csv") {
    os << "composition,coefficient\n";
    for (const auto& [c, v] : table) os << csv_field(comp_text(c)) << "," << v.to_string() << "\n";
  } else {
    for (const auto& [c, v] : table) os << "c(" << comp_text(c) << ") = " << v.to_string() << "\n";
  }
  emit(os.str(), o, out);
  return 0;
}

// ---------------------------------------------------------------------------
// expand

std::string letter_names(std::string s, bool single) {
  static const std::regex gen("Z([0-9]+)");
  return std::regex_replace(s, gen, single ? "X" : "X$1");
}

std::string packet_display(int n, NestingSide side) {
  std::string total;
  for (const auto& sigma : enumerate_permutations(n)) {
    std::string term;
    for (const auto& packet : sigma_packets(sigma, side)) {
      std::string folded;
      if (side == NestingSide::Left) {
        folded = "X" + std::to_string(packet[0] + 1);
        for (std::size_t i = 1; i < packet.size(); ++i) {
          std::string next = "X" + std::to_string(packet[i] + 1);
          folded = (i == 1 ? folded : "(" + folded + ")") + " ▷ " + next;
        }
      } else {
        folded = "X" + std::to_string(packet.back() + 1);
        for (std::size_t i = 1; i < packet.size(); ++i) {
          std::string prev = "X" + std::to_string(packet[packet.size() - 1 - i] + 1);
          folded = prev + " ◁ " + (i == 1 ? folded : "(" + folded + ")");
        }
      }
      term += "R(" + folded + ")";
    }
    total += (total.empty() ? "" : " + ") + term;
  }
  return total;
}

int expand(const std::string& id, const Options& o, std::ostream& out) {
  int n = degree_of(o, 2, kExpandCap);
  TermModel t;
  std::vector<RBTerm> xs;
  for (int i = 1; i <= n; ++i) xs.push_back(RBTerm::generator(i));
  RBTerm lhs, rhs;
  std::string display_rhs;
  bool single = false;
  if (id == "key") {
    single = true;
    lhs = rx_left_brackets(t, xs[0], n).back();
    rhs = key_identity_rhs(t, xs[0], n);
  } else if (id == "tu-left" || id == "tu-right") {
    auto side = id == "tu-left" ? NestingSide::Left : NestingSide::Right;
    lhs = nested_sum(t, xs, side);
    rhs = packet_sum(t, xs, side);
    display_rhs = packet_display(n, side);
  } else if (id == "ncbs") {
    lhs = nested_left_sum(t, xs);
    rhs = ncbs_rhs_direct(t, xs);
  } else {
    throw UsageError("expand supports key, tu-left, tu-right and ncbs");
  }
  auto lhs_text = letter_names(lhs.to_string(), single);
  auto rhs_text = display_rhs.empty() ? letter_names(rhs.to_string(), single) : display_rhs;
  auto lhs_nf = normal_form(lhs), rhs_nf = normal_form(rhs);
  bool equal = lhs_nf == rhs_nf;
  std::ostringstream os;
  if (o.format == "json") {
    os << Json{{"identity", id},
               {"n", n},
               {"lhs", lhs_text},
               {"rhs", rhs_text},
               {"lhs_normal_form", letter_names(lhs_nf.to_string(), single)},
               {"rhs_normal_form", letter_names(rhs_nf.to_string(), single)},
               {"equal", equal}}
              .dump(2)
       << "\n";
  } else {
    os << lhs_text << " = " << rhs_text << "\n";
    if (o.format == "text") {
      os << "normal form: " << letter_names(lhs_nf.to_string(), single) << "\n";
      os << "normal forms agree: " << (equal ? "true" : "false") << "\n";
    }
  }
  emit(os.str(), o, out);
  return equal ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Rota-Baxter algebra identities and Hopf-algebraic renormalization"};
  app.require_subcommand(1);
  Options o;
  std::string identity, file;

  auto* verify_cmd = app.add_subcommand("verify", "check an identity with exact arithmetic");
  verify_cmd->add_option("identity", identity, "identity to check")->required()->check(CLI::IsMember(kIdentities));
  add_common(verify_cmd, o);

  auto* renorm_cmd = app.add_subcommand("renormalize", "Birkhoff decomposition of a character file");
  renorm_cmd->add_option("file", file, "character JSON")->required();
  add_common(renorm_cmd, o);

  auto* magnus_cmd = app.add_subcommand("magnus", "table of Magnus coefficients c(I)");
  add_common(magnus_cmd, o);

  auto* expand_cmd = app.add_subcommand("expand", "symbolic expansion of both sides of an identity");
  expand_cmd->add_option("identity", identity, "key, tu-left, tu-right or ncbs")->required();
  add_common(expand_cmd, o);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify_cmd->parsed()) {
      VerifyResult r{identity, verify(identity, o)};
      emit(render_verify(r, o), o, out);
      return r.report.residual_zero ? 0 : 1;
    }
    if (renorm_cmd->parsed()) return renormalize(file, o, out);
    if (magnus_cmd->parsed()) return magnus_table(o, out);
    return expand(identity, o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace rbalg::cli
