#include "modbound/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "modbound/boundengine.hpp"
#include "modbound/constants.hpp"
#include "modbound/errors.hpp"
#include "modbound/lemmaverify.hpp"
#include "modbound/logscale.hpp"
#include "modbound/witness.hpp"

namespace modbound {

namespace {

using json = nlohmann::json;

constexpr unsigned kMinPrecisionBits = 64;

constexpr const char* kAnchorLevel = "M = N if N has two distinct prime factors, 3N if N is a power of 2, 2N if N = p^k";
constexpr const char* kAnchorFinal = "(2^14 d s M^2)^(2sM) (log dM)^(3sM) l^(dM) Delta(M)";
constexpr const char* kAnchorDelta = "sqrt(X) (log X)^(d phi(M)) (prod log N(v))^phi(M), X = M^(dM) |D|^phi(M)";
constexpr const char* kAnchorProduct = "prod over finite v in S of log N(v)";
constexpr const char* kAnchorSmallJ = "16 s";
constexpr const char* kAnchorSmallQ = "6 s M";
constexpr const char* kAnchorZeta = "(log 6)^3 / 2 if d = 2, 4 (log d / log log d)^3 if d >= 3";
constexpr const char* kAnchorUpsilonFull = "2^(13s+22) d^(3s+3) l^d";
constexpr const char* kAnchorUpsilonTilde = "2^(13s+22) d^(2s+3) l^d";
constexpr const char* kAnchorSiegel = "(omega/2) (2/pi)^r2 (e log|D| / (4(d-1)))^(d-1) sqrt|D| prod log N(v)";
constexpr const char* kAnchorHR = "h R prod log N(v)";
constexpr const char* kAnchorRegLower = "R_S(K) >= 0.1";
constexpr const char* kAnchorDiscLift = "N^(dN) |D|^phi(N)";
constexpr const char* kAnchorProductLift = "4^(s phi(N)) (prod log N(v))^phi(N)";
constexpr const char* kAnchorOmegaLift = "2 d^2 phi(N)^2";
constexpr const char* kAnchorLemma41 = "40 d s r^(2r) zeta^r N^8 U R log(d^2 s r^(4r) zeta^s N^16 U R)";
constexpr const char* kAnchorMatveev = "min{(1/kappa)(e n/2)^kappa 30^(n+3) n^3.5, 2^(6n+20)}";
constexpr const char* kAnchorYuC0 = "(16 e d)^(2(n+1)) n^(5/2) log(2nd) log(2d) e_p^n p^f / (f log p)^2";
constexpr const char* kAnchorYuC1 = "(log p / e_p) C0";
constexpr const char* kAnchorBakerArch = "2^(8n+29) d^(n+2) log(ed)";
constexpr const char* kAnchorBakerFinite = "2^(10n+10) e^(2n+2) d^(3n+3) p^d";
constexpr const char* kAnchorWitness = "h(j(P)) <= (2^14 d s M^2)^(2sM) (log dM)^(3sM) l^(dM) Delta(M), N = 2, M = 6";

json magnitude(const LogValue& v, const std::string& anchor) {
  const mpfr_rnd_t rnd = to_mpfr(v.rounding());
  const BigFloat l10 = lv_log10(v);
  json m;
  m["log10"] = l10.to_double(rnd);
  m["ln"] = v.ln().to_string(30, rnd);
  m["rounding"] = to_string(v.rounding());
  if (std::fabs(l10.to_double()) < 300.0) {
    BigFloat x(v.ln().precision());
    mpfr_exp(x.get(), v.ln().get(), rnd);
    m["value"] = x.to_double(rnd);
  }
  m["anchor"] = anchor;
  return m;
}

json header(const std::string& command) {
  return {{"tool", kToolName}, {"version", kToolVersion}, {"command", command}};
}

long parse_long(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("malformed " + what + " '" + text + "'");
}

mpz_class parse_mpz(const json& v) {
  if (v.is_number_integer()) return mpz_class(v.get<long>());
  if (v.is_string()) {
    mpz_class z;
    if (z.set_str(v.get<std::string>(), 10) == 0) return z;
  }
  throw UsageError("expected an integer, got " + v.dump());
}

std::vector<PlaceShape> parse_shapes(const json& list) {
  if (!list.is_array()) throw UsageError("splitting override must be a list of {\"e\", \"f\"} objects");
  std::vector<PlaceShape> shapes;
  for (const auto& item : list) shapes.push_back({item.at("e").get<int>(), item.at("f").get<int>()});
  return shapes;
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& what) {
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw UsageError("unknown key '" + key + "' in " + what);
  }
}

NumberField field_from_json(const json& j) {
  if (!j.is_object()) throw UsageError("field spec must be a JSON object");
  if (j.contains("preset")) {
    reject_unknown_keys(j, {"preset", "N", "m", "parameter"}, "preset field spec");
    std::optional<long> parameter;
    for (const char* key : {"N", "m", "parameter"}) {
      if (j.contains(key)) parameter = j.at(key).get<long>();
    }
    return field_preset(j.at("preset").get<std::string>(), parameter);
  }
  if (j.contains("poly")) {
    reject_unknown_keys(j, {"poly", "assert_irreducible", "exact_disc", "exact_omega", "splitting_overrides"},
                        "polynomial field spec");
    std::vector<mpz_class> coeffs;
    for (const auto& c : j.at("poly")) coeffs.push_back(parse_mpz(c));
    FieldOptions options;
    if (j.contains("assert_irreducible")) options.assert_irreducible = j.at("assert_irreducible").get<bool>();
    if (j.contains("exact_disc") && !j.at("exact_disc").is_null()) options.exact_disc = parse_mpz(j.at("exact_disc"));
    if (j.contains("exact_omega") && !j.at("exact_omega").is_null()) {
      options.exact_omega = j.at("exact_omega").get<long>();
    }
    if (j.contains("splitting_overrides")) {
      for (const auto& [key, list] : j.at("splitting_overrides").items()) {
        const long p = parse_long(key, "override prime");
        if (p < 2) throw UsageError("override prime must be at least 2");
        options.splitting_overrides[static_cast<std::uint64_t>(p)] = parse_shapes(list);
      }
    }
    return field_from_poly(coeffs, options);
  }
  throw UsageError("field spec needs a \"preset\" or a \"poly\" key");
}

json field_summary(const NumberField& K) {
  json poly = json::array();
  for (const auto& c : K.min_poly) poly.push_back(c.get_str());
  json overrides = json::object();
  for (const auto& [p, shapes] : K.splitting_overrides) {
    json list = json::array();
    for (const auto& s : shapes) list.push_back({{"e", s.e}, {"f", s.f}});
    overrides[std::to_string(p)] = list;
  }
  return {{"name", K.name},
          {"min_poly", poly},
          {"degree", K.degree},
          {"r1", K.r1},
          {"r2", K.r2},
          {"disc_abs", K.disc_abs.get_str()},
          {"disc_is_exact", K.disc_is_exact},
          {"omega_bound", omega_upper(K)},
          {"omega_is_exact", K.omega_is_exact},
          {"order_is_maximal", K.order_is_maximal},
          {"splitting_overrides", overrides}};
}

json place_json(const FinitePlace& v) {
  return {{"p", v.p}, {"e", v.e}, {"f", v.f}, {"norm", v.norm.get_str()}, {"over_approximated", v.over_approximated}};
}

unsigned default_precision() {
  const char* env = std::getenv(kPrecisionEnv);
  if (env == nullptr || *env == '\0') return kDefaultPrecisionBits;
  const long bits = parse_long(env, std::string(kPrecisionEnv) + " value");
  if (bits < static_cast<long>(kMinPrecisionBits) || bits > static_cast<long>(kMaxPrecisionBits)) {
    throw UsageError(std::string(kPrecisionEnv) + " must lie in [" + std::to_string(kMinPrecisionBits) + ", " +
                     std::to_string(kMaxPrecisionBits) + "]");
  }
  return static_cast<unsigned>(bits);
}

void check_precision(unsigned bits) {
  if (bits < kMinPrecisionBits || bits > kMaxPrecisionBits) {
    throw UsageError("precision must lie in [" + std::to_string(kMinPrecisionBits) + ", " +
                     std::to_string(kMaxPrecisionBits) + "] bits");
  }
}

Rounding rounding_from_string(const std::string& text) {
  if (text == "up") return Rounding::Up;
  if (text == "down") return Rounding::Down;
  throw UsageError("rounding must be 'up' or 'down', got '" + text + "'");
}

json primes_json(const std::vector<std::uint64_t>& primes) {
  json out = json::array();
  for (auto p : primes) out.push_back(p);
  return out;
}

void render_text(const json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_structured() && !value.empty()) {
        out << pad << key << ":\n";
        render_text(value, out, indent + 1);
      } else {
        out << pad << key << ": " << (value.is_structured() ? value.dump() : scalar(value)) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (value.is_structured() && !value.empty()) {
        out << pad << "-\n";
        render_text(value, out, indent + 1);
      } else {
        out << pad << "- " << (value.is_structured() ? value.dump() : scalar(value)) << "\n";
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

void emit(const json& report, const std::string& format, std::ostream& out) {
  if (format == "text") {
    render_text(report, out, 0);
  } else {
    out << report.dump(2) << "\n";
  }
}

// ---- bound

struct BoundFlags {
  std::string input_path;
  std::string field = "preset:Q";
  std::string primes;
  long level = 2;
  bool assert_cusps = false;
  std::string splitting = "auto";
  std::string rounding = "up";
  bool assert_cyclotomic = false;
  std::string hR;
};

json bound_report(const BoundBreakdown& b, const json& echo) {
  json r = header("bound");
  r["input"] = echo;
  json places = json::array();
  for (const auto& v : b.places) places.push_back(place_json(v));
  r["N"] = b.N;
  r["M"] = {{"value", b.M}, {"anchor", kAnchorLevel}};
  r["phi_M"] = b.phi_M;
  r["d"] = b.d;
  r["s"] = b.s;
  r["ell"] = b.ell;
  r["disc_abs"] = b.disc_abs.get_str();
  r["omega_bound"] = b.omega_bound;
  r["places"] = places;

  json c;
  c["place_log_product"] = magnitude(b.place_log_product, kAnchorProduct);
  c["delta_M"] = magnitude(b.delta_M, kAnchorDelta);
  c["branch_small_j"] = magnitude(b.branch_small_j, kAnchorSmallJ);
  c["branch_small_q"] = magnitude(b.branch_small_q, kAnchorSmallQ);
  c["zeta_lifted"] = magnitude(b.zeta_lifted, std::string(kAnchorZeta) + ", degree d phi(M)");
  c["upsilon_full_lifted"] = magnitude(b.upsilon_lifted.full, std::string(kAnchorUpsilonFull) + ", s phi(M), d phi(M)");
  c["upsilon_tilde_lifted"] =
      magnitude(b.upsilon_lifted.tilde, std::string(kAnchorUpsilonTilde) + ", s phi(M), d phi(M)");
  json reg;
  reg["lower"] = {{"value", b.regulator.lower_const}, {"anchor", kAnchorRegLower}};
  reg["upper_via_siegel"] = magnitude(b.regulator.upper_via_siegel, kAnchorSiegel);
  if (b.regulator.upper_via_hR) reg["upper_via_hR"] = magnitude(*b.regulator.upper_via_hR, kAnchorHR);
  c["regulator"] = reg;
  c["lift"] = {
      {"s_tilde_bound", b.lift.s_tilde_bound},
      {"d_tilde_bound", b.lift.d_tilde_bound},
      {"omega_tilde_bound", {{"value", b.lift.omega_tilde_bound}, {"anchor", kAnchorOmegaLift}}},
      {"disc_tilde_bound", magnitude(b.lift.disc_tilde_bound, kAnchorDiscLift)},
      {"product_lift", magnitude(b.lift.product_lift, kAnchorProductLift)},
  };
  if (b.lemma41_bound) c["cyclotomic_field_bound"] = magnitude(*b.lemma41_bound, kAnchorLemma41);
  r["constants"] = c;
  r["final_bound"] = magnitude(b.final_bound, kAnchorFinal);
  r["log10_final"] = b.log10_final.to_double(to_mpfr(b.context.dir));
  r["provenance_flags"] = b.provenance_flags;
  return r;
}

int run_bound(const BoundFlags& flags, const CLI::App& sub, unsigned precision, const std::string& format,
              std::ostream& out) {
  json file = json::object();
  if (!flags.input_path.empty()) {
    std::ifstream in(flags.input_path);
    if (!in) throw UsageError("cannot read input file '" + flags.input_path + "'");
    file = json::parse(in);
    if (!file.is_object()) throw UsageError("bound input must be a JSON object");
    reject_unknown_keys(file,
                        {"field", "primes", "level", "assert_cusps", "precision", "rounding", "splitting",
                         "assert_cyclotomic", "hR"},
                        "bound input");
  }
  auto given = [&](const char* opt) { return sub.count(opt) > 0; };

  BoundInput input;
  json echo;
  if (given("--field") || !file.contains("field")) {
    input.field = parse_field_spec(flags.field);
    echo["field"] = flags.field;
  } else {
    const json& f = file.at("field");
    input.field = f.is_string() ? parse_field_spec(f.get<std::string>()) : field_from_json(f);
    echo["field"] = f;
  }
  if (given("--primes") || !file.contains("primes")) {
    input.s_primes = parse_prime_list(flags.primes);
  } else if (file.at("primes").is_string()) {
    input.s_primes = parse_prime_list(file.at("primes").get<std::string>());
  } else {
    input.s_primes = file.at("primes").get<std::vector<std::uint64_t>>();
  }
  input.level_N = given("--level") || !file.contains("level") ? flags.level : file.at("level").get<long>();
  input.cusp_assertion =
      given("--assert-cusps") || !file.contains("assert_cusps") ? flags.assert_cusps : file.at("assert_cusps").get<bool>();
  input.precision_bits =
      given("--precision") || !file.contains("precision") ? precision : file.at("precision").get<unsigned>();
  check_precision(input.precision_bits);
  const std::string rounding =
      given("--rounding") || !file.contains("rounding") ? flags.rounding : file.at("rounding").get<std::string>();
  input.rounding = rounding_from_string(rounding);
  const std::string splitting =
      given("--splitting") || !file.contains("splitting") ? flags.splitting : file.at("splitting").get<std::string>();
  input.splitting = splitting_mode_from_string(splitting);
  input.assert_cyclotomic = given("--assert-cyclotomic") || !file.contains("assert_cyclotomic")
                                ? flags.assert_cyclotomic
                                : file.at("assert_cyclotomic").get<bool>();
  std::string hR = flags.hR;
  if (!given("--hR") && file.contains("hR")) {
    const json& h = file.at("hR");
    hR = h.is_string() ? h.get<std::string>() : h.dump();
  }
  if (!hR.empty()) {
    const mpq_class q = parse_real_literal(hR);
    if (q <= 0) throw UsageError("hR must be positive");
    input.hR = q;
  }

  echo["field_name"] = input.field.name;
  echo["primes"] = primes_json(input.s_primes);
  echo["level"] = input.level_N;
  echo["assert_cusps"] = input.cusp_assertion;
  echo["precision"] = input.precision_bits;
  echo["rounding"] = to_string(input.rounding);
  echo["splitting"] = to_string(input.splitting);
  echo["assert_cyclotomic"] = input.assert_cyclotomic;
  if (input.hR) echo["hR"] = input.hR->get_str();

  const BoundBreakdown b = theorem12_bound(input);
  json report = bound_report(b, echo);
  report["field"] = field_summary(input.field);
  emit(report, format, out);
  return kExitOk;
}

// ---- field

int run_field(const std::string& spec, const std::string& primes, const std::string& format, std::ostream& out) {
  const NumberField K = parse_field_spec(spec);
  const auto ps = parse_prime_list(primes);
  json r = header("field");
  r["input"] = {{"field", spec}, {"primes", primes_json(ps)}};
  r["field"] = field_summary(K);
  json splits = json::array();
  for (auto p : ps) {
    const SplitResult sr = split_prime(K, p);
    json places = json::array();
    int total = 0;
    for (const auto& v : sr.places) {
      places.push_back(place_json(v));
      total += v.e * v.f;
    }
    splits.push_back({{"p", p},
                      {"status", to_string(sr.status)},
                      {"index_divisor_suspected", sr.index_divisor_suspected},
                      {"sum_ef", total},
                      {"places", places}});
  }
  r["splitting"] = splits;
  emit(r, format, out);
  return kExitOk;
}

// ---- constants

struct ConstantFlags {
  bool zeta = false;
  bool matveev = false;
  bool yu_c0 = false;
  bool yu_c1 = false;
  bool baker = false;
  bool upsilon = false;
  long n = 2;
  long d = 2;
  int kappa = 2;
  long p = 2;
  long e = 1;
  long f = 1;
  long s = 1;
  long ell = 1;
  std::string place = "archimedean";
};

int run_constants(ConstantFlags c, unsigned precision, const std::string& format, std::ostream& out) {
  check_precision(precision);
  if (!(c.zeta || c.matveev || c.yu_c0 || c.yu_c1 || c.baker || c.upsilon)) {
    c.zeta = c.matveev = c.yu_c0 = c.yu_c1 = c.baker = c.upsilon = true;
  }
  if (c.place != "archimedean" && c.place != "finite") {
    throw UsageError("place must be 'archimedean' or 'finite', got '" + c.place + "'");
  }
  if (c.p < 2 || !is_prime(static_cast<std::uint64_t>(c.p))) throw UsageError("p must be prime");
  const RoundingContext ctx{Rounding::Up, precision};
  const auto p = static_cast<std::uint64_t>(c.p);

  json r = header("constants");
  r["input"] = {{"n", c.n},     {"d", c.d}, {"kappa", c.kappa}, {"p", c.p},
                {"e", c.e},     {"f", c.f}, {"s", c.s},         {"ell", c.ell},
                {"place", c.place}, {"precision", precision}};
  json values;
  if (c.zeta) values["zeta"] = magnitude(zeta_of_degree(c.d, ctx), kAnchorZeta);
  if (c.matveev) {
    const auto branches = matveev_branches(c.n, c.kappa, ctx);
    values["matveev_C"] = magnitude(matveev_C(c.n, c.kappa, ctx), kAnchorMatveev);
    values["matveev_explicit_branch"] =
        magnitude(branches.explicit_branch, "(1/kappa)(e n/2)^kappa 30^(n+3) n^3.5");
    values["matveev_power_branch"] = magnitude(branches.power_branch, "2^(6n+20)");
  }
  if (c.yu_c0) values["yu_C0"] = magnitude(yu_C0(c.n, c.d, p, c.e, c.f, ctx), kAnchorYuC0);
  if (c.yu_c1) values["yu_C1"] = magnitude(yu_C1(c.n, c.d, p, c.e, c.f, ctx), kAnchorYuC1);
  if (c.baker) {
    BakerParams params;
    params.n = c.n;
    params.d = c.d;
    params.kappa = c.kappa;
    if (c.place == "finite") params.place = NonArchimedeanPlace{p, c.e, c.f};
    values["baker_upsilon"] =
        magnitude(baker_upsilon(params, ctx), c.place == "finite" ? kAnchorBakerFinite : kAnchorBakerArch);
  }
  if (c.upsilon) {
    const auto u = upsilon_tilde(c.s, c.d, c.ell, ctx);
    values["upsilon_full"] = magnitude(u.full, kAnchorUpsilonFull);
    values["upsilon_tilde"] = magnitude(u.tilde, kAnchorUpsilonTilde);
  }
  r["constants"] = values;
  emit(r, format, out);
  return kExitOk;
}

// ---- verify

int run_verify(const std::string& suite, std::optional<std::uint64_t> limit, std::optional<std::uint64_t> samples,
               std::uint64_t seed, const std::string& format, std::ostream& out) {
  SuiteOptions options;
  options.limit = limit;
  options.samples = samples;
  options.seed = seed;
  const auto results = run_suite(suite, options);

  json r = header("verify");
  json echo = {{"suite", suite}, {"seed", seed}};
  echo["limit"] = limit ? json(*limit) : json(nullptr);
  echo["samples"] = samples ? json(*samples) : json(nullptr);
  r["input"] = echo;
  json list = json::array();
  bool all_passed = true;
  for (const auto& v : results) {
    json checks = json::array();
    for (const auto& c : v.checks) {
      checks.push_back({{"label", c.label},
                        {"margin_kind", c.margin_kind},
                        {"cases", c.cases},
                        {"exact", c.exact},
                        {"failures", c.failures},
                        {"worst_margin", c.worst_margin}});
    }
    list.push_back({{"lemma_id", v.lemma_id},
                    {"domain_checked", v.domain_checked},
                    {"cases_checked", v.cases_checked},
                    {"passed", v.passed()},
                    {"worst_margin", v.worst_margin},
                    {"counterexamples", v.counterexamples},
                    {"checks", checks},
                    {"notes", v.notes}});
    all_passed = all_passed && v.passed();
  }
  r["results"] = list;
  r["passed"] = all_passed;
  emit(r, format, out);
  return all_passed ? kExitOk : kExitCounterexample;
}

// ---- witness

int run_witness(const std::string& primes, long cap, unsigned precision, const std::string& format,
                std::ostream& out) {
  check_precision(precision);
  const auto ps = parse_prime_list(primes);
  const auto points = enumerate_witnesses(ps, cap);
  const BoundBreakdown b = lambda_line_bound(ps, precision);
  const WitnessReport w = check_witnesses_against_bound(points, b);

  json r = header("witness");
  r["input"] = {{"primes", primes_json(ps)}, {"cap", cap}, {"precision", precision}};
  json list = json::array();
  for (const auto& pt : points) {
    list.push_back({{"lambda", pt.lambda.get_str()},
                    {"j", pt.j_value.get_str()},
                    {"height_up", pt.j_height_up.to_double(MPFR_RNDU)}});
  }
  r["points_found"] = points.size();
  r["points"] = list;
  json max = {{"height_up", w.max_height_up.to_double(MPFR_RNDU)}};
  if (w.max_lambda) {
    max["lambda"] = w.max_lambda->get_str();
    max["j"] = w.max_j->get_str();
  }
  r["max_height"] = max;
  r["bound"] = magnitude(b.final_bound, kAnchorWitness);
  r["provenance_flags"] = b.provenance_flags;
  r["violations"] = w.violations;
  r["passed"] = w.passed();
  emit(r, format, out);
  return w.passed() ? kExitOk : kExitCounterexample;
}

}  // namespace

NumberField parse_field_spec(const std::string& text) {
  const auto start = text.find_first_not_of(" \t\n");
  if (start != std::string::npos && text[start] == '{') return field_from_json(json::parse(text));
  if (text.rfind("preset:", 0) == 0) {
    const std::string rest = text.substr(7);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) return field_preset(rest);
    return field_preset(rest.substr(0, colon), parse_long(rest.substr(colon + 1), "preset parameter"));
  }
  if (text.rfind("poly:", 0) == 0) {
    std::vector<mpz_class> coeffs;
    std::stringstream ss(text.substr(5));
    std::string item;
    while (std::getline(ss, item, ',')) {
      mpz_class z;
      if (item.empty() || z.set_str(item, 10) != 0) throw UsageError("malformed coefficient '" + item + "'");
      coeffs.push_back(z);
    }
    return field_from_poly(coeffs);
  }
  throw UsageError("field spec must start with 'preset:', 'poly:' or '{', got '" + text + "'");
}

std::vector<std::uint64_t> parse_prime_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  if (text.find_first_not_of(" ") == std::string::npos) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto a = item.find_first_not_of(' ');
    const auto b = item.find_last_not_of(' ');
    if (a == std::string::npos) throw UsageError("empty entry in prime list '" + text + "'");
    const long p = parse_long(item.substr(a, b - a + 1), "prime");
    if (p < 2) throw UsageError("primes must be at least 2, got " + std::to_string(p));
    out.push_back(static_cast<std::uint64_t>(p));
  }
  return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explicit height bounds for S-integral points on modular curves", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  unsigned precision = kDefaultPrecisionBits;
  std::string format = "json";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--precision", precision, "working precision in bits (env MODBOUND_PRECISION)");
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };

  BoundFlags bf;
  CLI::App* bound = app.add_subcommand("bound", "compute the height bound and its intermediate constants");
  bound->add_option("--input", bf.input_path, "BoundInput JSON file; explicit flags override its values");
  bound->add_option("--field", bf.field, "preset:NAME[:PARAM], poly:c0,c1,...,1 or a JSON field spec");
  bound->add_option("--primes", bf.primes, "comma separated finite primes of S");
  bound->add_option("--level", bf.level, "congruence level N >= 2");
  bound->add_flag("--assert-cusps", bf.assert_cusps, "assert that the curve has at least three cusps");
  bound->add_option("--splitting", bf.splitting, "auto, exact or overapprox");
  bound->add_option("--rounding", bf.rounding, "up or down");
  bound->add_flag("--assert-cyclotomic", bf.assert_cyclotomic, "assert that zeta_M lies in K");
  bound->add_option("--hR", bf.hR, "class number times regulator, or an upper bound for it");
  add_common(bound);

  std::string field_spec;
  std::string field_primes;
  CLI::App* field = app.add_subcommand("field", "analyse a number field and the splitting of primes");
  field->add_option("--field", field_spec, "field spec")->required();
  field->add_option("--primes", field_primes, "comma separated primes to split");
  add_common(field);

  ConstantFlags cf;
  CLI::App* constants = app.add_subcommand("constants", "print explicit linear-forms-in-logarithms constants");
  constants->add_flag("--zeta", cf.zeta, "zeta(d)");
  constants->add_flag("--matveev", cf.matveev, "C(n, kappa)");
  constants->add_flag("--yu-c0", cf.yu_c0, "C0(n, d, p)");
  constants->add_flag("--yu-c1", cf.yu_c1, "C1(n, d, p)");
  constants->add_flag("--baker", cf.baker, "Upsilon(n, d, place)");
  constants->add_flag("--upsilon", cf.upsilon, "Upsilon full and tilde (s, d, l)");
  constants->add_option("--n", cf.n, "number of multiplicands");
  constants->add_option("--d", cf.d, "field degree");
  constants->add_option("--kappa", cf.kappa, "1 or 2");
  constants->add_option("--p", cf.p, "prime below the place");
  constants->add_option("--e", cf.e, "ramification index");
  constants->add_option("--f", cf.f, "residue degree");
  constants->add_option("--s", cf.s, "place count");
  constants->add_option("--ell", cf.ell, "largest prime of S, or 1");
  constants->add_option("--place", cf.place, "archimedean or finite");
  add_common(constants);

  std::string suite = "all";
  std::optional<std::uint64_t> limit;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 1;
  CLI::App* verify = app.add_subcommand("verify", "verify the auxiliary inequalities by brute force");
  verify->add_option("--suite", suite, "suite id or all");
  verify->add_option("--limit", limit, "exhaustive range limit");
  verify->add_option("--samples", samples, "random sample count");
  verify->add_option("--seed", seed, "random seed");
  add_common(verify);

  std::string witness_primes;
  long cap = 1000;
  CLI::App* witness = app.add_subcommand("witness", "check S-integral points of the lambda-line against the bound");
  witness->add_option("--primes", witness_primes, "comma separated finite primes of S");
  witness->add_option("--cap", cap, "height cap for lambda = a/b");
  add_common(witness);

  try {
    precision = default_precision();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitMalformed;
  }

  try {
    if (*bound) return run_bound(bf, *bound, precision, format, out);
    if (*field) return run_field(field_spec, field_primes, format, out);
    if (*constants) return run_constants(cf, precision, format, out);
    if (*verify) {
      if (suite != "all") {
        bool known = false;
        for (const auto& id : suite_ids()) known = known || id == suite;
        if (!known) throw UsageError("unknown suite '" + suite + "'");
      }
      return run_verify(suite, limit, samples, seed, format, out);
    }
    if (*witness) return run_witness(witness_primes, cap, precision, format, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitMalformed;
}

}  // namespace modbound
