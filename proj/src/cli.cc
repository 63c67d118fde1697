// Copyright 2026 The gkn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gkn/cli.h"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "gkn/criteria.h"
#include "gkn/plane_oracle.h"
#include "gkn/report_json.h"
#include "gkn/surface_io.h"

namespace gkn {
namespace {

struct CommandResult {
  Json payload;
  std::string text;
};

// Raw option values; numbers stay strings until parsed as big integers.
struct Request {
  std::string surface;
  std::string divisor;
  std::string k;
  std::string delta;
  std::string delta0;
  std::string n;
  std::string g;
  std::string r;
  std::string d;
  std::string deg;
  std::string degree;
  std::string ambient;
  std::string trials = "20";
  std::string seed;
  std::string coord_bound = std::to_string(kDefaultCoordinateBound);
  std::string random;
  std::string mult = "1";
  std::string file;
  std::string dump_surface;
  bool json = false;
};

Integer Number(const std::string& text, const char* name) {
  if (text.empty()) {
    throw InputError(std::string("missing required option --") + name);
  }
  try {
    return ParseInteger(text);
  } catch (const InputError&) {
    throw InputError(std::string("--") + name + ": not an integer: '" + text +
                     "'");
  }
}

Integer NonNegative(const std::string& text, const char* name) {
  Integer value = Number(text, name);
  if (value < 0) {
    throw InputError(std::string("--") + name + " must be nonnegative, got " +
                     value.get_str());
  }
  return value;
}

int SmallInt(const std::string& text, const char* name) {
  Integer value = NonNegative(text, name);
  if (value > 1'000'000) {
    throw InputError(std::string("--") + name + " too large: " +
                     value.get_str());
  }
  return static_cast<int>(value.get_si());
}

uint64_t ResolveSeed(const std::string& text) {
  std::string source = text;
  if (source.empty()) {
    if (const char* env = std::getenv("GKN_SEED"); env != nullptr && *env) {
      source = env;
    }
  }
  if (source.empty()) return kDefaultSeed;
  Integer value = NonNegative(source, "seed");
  Integer limit = 1;
  limit <<= 64;
  if (value >= limit) throw InputError("seed must be below 2^64");
  uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value.get_mpz_t());
  return out;
}

std::string YesNo(bool b) { return b ? "yes" : "no"; }

std::string OptionalText(const std::optional<Integer>& value) {
  return value ? value->get_str() : "none";
}

std::string FormatApprox(double value) {
  std::ostringstream os;
  os << std::setprecision(12) << value;
  return os.str();
}

// "(t+sqrt(s))/8 = 48" or "(t+sqrt(s))/8 approx 1.75".
std::string FormatSurd(const QuadraticSurd& value) {
  if (auto q = value.AsRational()) {
    return value.ToString() + " = " + ToString(*q);
  }
  return value.ToString() + " approx " + FormatApprox(value.Approx());
}

std::string FormatBound(const BoundReport& b) {
  return "f = " + FormatSurd(b.bound) +
         "; max delta = " + OptionalText(b.max_admissible_delta);
}

std::string FormatTrace(const std::vector<InequalityCheck>& trace) {
  std::string out;
  for (const InequalityCheck& c : trace) {
    const char* op = c.hypothesis == Hypothesis::kHodge ? " < " : " > ";
    out += std::string("  [") + (c.holds ? "pass" : "FAIL") + "] " +
           HypothesisTag(c.hypothesis) + ": " + c.lhs.get_str() + op +
           c.rhs.get_str() + "\n";
  }
  return out;
}

std::string FormatVerdict(const GknVerdict& v, const std::string& success) {
  std::string out = "outcome: " + OutcomeName(v.outcome) + "\n";
  if (v.outcome == Outcome::kInapplicable) {
    return out + "reason: " + v.reason + "\n";
  }
  out += "k = " + v.k.get_str() + ", delta = " + v.delta.get_str() + "\n";
  out += FormatTrace(v.trace);
  if (!v.failed.empty()) {
    out += "failed:";
    for (Hypothesis h : v.failed) out += " " + HypothesisTag(h);
    out += "\n";
  }
  if (v.bound) out += FormatBound(*v.bound) + "\n";
  switch (v.outcome) {
    case Outcome::kSufficient:
      out += success + "\n";
      break;
    case Outcome::kHypothesisFailed:
    case Outcome::kBoundFailed:
      out += "no conclusion (sufficient condition not met)\n";
      break;
    case Outcome::kInapplicable:
      break;
  }
  return out;
}

class Runner {
 public:
  explicit Runner(Request& request) : req_(request) {}

  SurfaceModel Surface() {
    if (req_.surface.empty()) throw InputError("missing required option --surface");
    SurfaceModel surface = ParseSurfaceArgument(req_.surface);
    if (!req_.dump_surface.empty()) {
      std::ofstream dump(req_.dump_surface);
      if (!dump) {
        throw InputError("cannot write '" + req_.dump_surface + "'");
      }
      dump << SurfaceToJson(surface).dump(2) << "\n";
    }
    return surface;
  }

  DivisorClass Divisor(const SurfaceModel& surface) {
    if (req_.divisor.empty()) throw InputError("missing required option --divisor");
    return ParseDivisor(req_.divisor, surface);
  }

  CommandResult Invariants() {
    SurfaceModel s = Surface();
    DivisorClass d = Divisor(s);
    Integer d2 = SelfIntersection(s, d);
    Integer dh = Intersect(s, d, s.hyperplane());
    Integer dk = Intersect(s, d, s.canonical());
    Integer pa = ArithmeticGenus(s, d);
    Json payload = {{"surface", SurfaceToJson(s)},
                    {"divisor", IntegerListToJson(d.coords())},
                    {"D2", IntegerToJson(d2)},
                    {"DH", IntegerToJson(dh)},
                    {"DK", IntegerToJson(dk)},
                    {"p_a", IntegerToJson(pa)}};
    std::string text = "surface: " + s.Describe() + "\ndivisor: " +
                       d.ToString() + "\nD^2 = " + d2.get_str() +
                       "\nD.H = " + dh.get_str() + "\nD.K = " + dk.get_str() +
                       "\np_a = " + pa.get_str() + "\n";
    if (!req_.delta.empty()) {
      Integer g = GeometricGenus(s, d, NonNegative(req_.delta, "delta"));
      payload["geometric_genus"] = IntegerToJson(g);
      text += "g = " + g.get_str() + "\n";
    }
    if (!req_.k.empty()) {
      Integer nu = HodgeNumber(s, d, NonNegative(req_.k, "k"));
      payload["hodge_number"] = IntegerToJson(nu);
      text += "nu(D,kH) = " + nu.get_str() + "\n";
    }
    if (s.is_builtin()) {
      bool nef = IsNef(s, d);
      bool big = IsBigAndNef(s, d);
      payload["nef"] = nef;
      payload["big_and_nef"] = big;
      text += "nef: " + YesNo(nef) + ", big and nef: " + YesNo(big) + "\n";
    } else {
      payload["nef"] = nullptr;
      payload["big_and_nef"] = nullptr;
    }
    return {payload, text};
  }

  CommandResult GknCheck() {
    SurfaceModel s = Surface();
    DivisorClass d = Divisor(s);
    GknVerdict v = GknSufficient(s, d, NonNegative(req_.k, "k"),
                                 NonNegative(req_.delta, "delta"));
    return {ToJson(v),
            FormatVerdict(v, "C is geometrically " + v.k.get_str() +
                                 "-normal (sufficient condition met)")};
  }

  CommandResult GknBound() {
    SurfaceModel s = Surface();
    DivisorClass d = Divisor(s);
    BoundReport b = DeltaBound(s, d, NonNegative(req_.k, "k"));
    return {ToJson(b), "t = " + b.t.get_str() + ", s = " + b.s.get_str() +
                           "\n" + FormatBound(b) + "\n"};
  }

  CommandResult GknCi() {
    CiBoundReport c = CiBound(NonNegative(req_.n, "n"), NonNegative(req_.k, "k"),
                              NonNegative(req_.deg, "deg"));
    std::string text = "bound = " + ToString(c.bound) +
                       "; max delta = " + OptionalText(c.max_delta) +
                       "\nn >= 2k+1: " + YesNo(c.n_at_least_2k_plus_1) +
                       "\ndeg(S) > 4/(n(n-2k)): " + YesNo(c.degree_large_enough) +
                       "\nadmissible: " + YesNo(c.admissible) + "\n";
    return {ToJson(c), text};
  }

  CommandResult GknQuadratic() {
    SurfaceModel s = Surface();
    DivisorClass d = Divisor(s);
    InstabilityQuadratic q =
        ComputeInstabilityQuadratic(s, d, NonNegative(req_.k, "k"));
    std::string text = "F(x) = " + q.a.get_str() + "x^2 + (" + q.b.get_str() +
                       ")x + " + q.c.get_str() + "\nalpha = " +
                       FormatSurd(q.alpha) + "\nbeta = " + FormatSurd(q.beta) +
                       "\ninteger witness = " + OptionalText(q.integer_witness) +
                       "\n";
    return {ToJson(q), text};
  }

  CommandResult GknBogomolov() {
    SurfaceModel s = Surface();
    DivisorClass d = Divisor(s);
    Integer disc = BogomolovDiscriminant(s, d, NonNegative(req_.k, "k"),
                                         NonNegative(req_.delta0, "delta0"));
    return {{{"discriminant", IntegerToJson(disc)}, {"unstable", disc > 0}},
            "(D-kH)^2 - 4 delta0 = " + disc.get_str() +
                (disc > 0 ? " (Bogomolov unstable)\n" : "\n")};
  }

  CommandResult GknZeroRegularity() {
    SurfaceModel s = Surface();
    DivisorClass d = Divisor(s);
    ApplicabilityReport a = ZeroRegularityEquivalence(s, d, NonNegative(req_.k, "k"));
    std::string text = "equivalence applies: " + YesNo(a.applies) + "\n";
    for (const auto& clause : a.failed_clauses) text += "  " + clause + "\n";
    return {ToJson(a), text};
  }

  CommandResult BnRho() {
    Integer rho = BrillNoetherRho(NonNegative(req_.g, "g"),
                                  NonNegative(req_.r, "r"),
                                  NonNegative(req_.d, "d"));
    return {{{"rho", IntegerToJson(rho)}}, "rho = " + rho.get_str() + "\n"};
  }

  CommandResult BnObstruct() {
    SurfaceModel s = Surface();
    DivisorClass d = Divisor(s);
    ObstructionReport o = Obstruction2Normal(s, d, NonNegative(req_.delta, "delta"));
    std::string text = "outcome: " + ObstructionOutcomeName(o.outcome) +
                       "\ng = " + OptionalText(o.genus) +
                       ", r = " + OptionalText(o.ambient) +
                       ", deg(C) = " + o.degree.get_str() +
                       "\nrho = " + OptionalText(o.rho) + "\n";
    for (const auto& h : o.failed_hypotheses) text += "  " + h + "\n";
    return {ToJson(o), text};
  }

  CommandResult SeveriRegular() {
    SurfaceModel s = Surface();
    DivisorClass d = Divisor(s);
    GknVerdict v = SeveriRegularitySufficient(s, d, NonNegative(req_.delta, "delta"));
    return {ToJson(v),
            FormatVerdict(v, "[C] is a regular point of the Severi variety")};
  }

  CommandResult SeveriPlaneBound() {
    PlaneSeveriBound b =
        ComputePlaneSeveriBound(NonNegative(req_.n, "n"), NonNegative(req_.k, "k"));
    return {ToJson(b), "bound = " + b.bound.get_str() +
                           "\nh0 check = " + b.h0_check.get_str() + "\n"};
  }

  CommandResult SeveriVerify() {
    SeveriVerification v = VerifyPlaneSeveri(
        NonNegative(req_.n, "n"), NonNegative(req_.k, "k"),
        SmallInt(req_.trials, "trials"), ResolveSeed(req_.seed),
        Number(req_.coord_bound, "coord-bound"));
    std::ostringstream text;
    text << "degree " << v.degree << " curves, delta = " << v.delta << "\n"
         << "independent in " << v.independent_trials << "/" << v.trials
         << " trials at delta = " << v.delta << "\n"
         << "rank reached capacity " << v.delta << " in " << v.capped_trials
         << "/" << v.trials << " trials at delta = " << v.delta + 1
         << " (max rank " << v.max_rank_over_capacity << ")\n"
         << "seed " << v.seed << ", rng " << v.rng_algorithm << "\n";
    return {ToJson(v), text.str()};
  }

  CommandResult Castelnuovo() {
    Integer d = NonNegative(req_.degree, "degree");
    Integer r = NonNegative(req_.ambient, "ambient");
    Integer pi = CastelnuovoMaxGenus(d, r);
    return {{{"max_genus", IntegerToJson(pi)}},
            "pi(" + d.get_str() + ", " + r.get_str() + ") = " + pi.get_str() +
                "\n"};
  }

  CommandResult OracleRank() {
    PointConditionScheme scheme;
    Json extra;
    if (!req_.file.empty()) {
      scheme = SchemeFromJson(Json::parse(ReadFile(req_.file)));
    } else {
      if (req_.random.empty()) {
        throw InputError("oracle rank needs --file or --random <count>");
      }
      uint64_t seed = ResolveSeed(req_.seed);
      scheme = RandomConfiguration(
          SmallInt(req_.random, "random"), SmallInt(req_.mult, "mult"),
          SmallInt(req_.degree, "degree"), Number(req_.coord_bound, "coord-bound"),
          seed);
      extra = {{"seed", seed}, {"rng", std::string(CounterRng::kAlgorithm)}};
    }
    RankReport r = IndependentConditions(scheme);
    Json payload = ToJson(r);
    payload["scheme"] = SchemeToJson(scheme);
    if (!extra.is_null()) payload["generator"] = extra;
    std::ostringstream text;
    text << "matrix " << r.rows << "x" << r.cols << ", rank " << r.rank
         << "\nconditions " << r.expected_conditions.get_str() << ", h0 "
         << r.h0.get_str() << "\nindependent: " << YesNo(r.independent)
         << "\nresidual dimension " << r.residual_dimension.get_str() << "\n";
    return {payload, text.str()};
  }

 private:
  static Json IntegerListToJson(const std::vector<Integer>& values) {
    Json out = Json::array();
    for (const Integer& v : values) out.push_back(IntegerToJson(v));
    return out;
  }

  Request& req_;
};

// Reproduces the worked examples and compares them with stored values.
CommandResult WorkedExamples(bool& all_match) {
  Json checks = Json::array();
  std::string text;
  all_match = true;
  auto expect = [&](const std::string& name, const std::string& actual,
                    const std::string& expected) {
    bool ok = actual == expected;
    all_match = all_match && ok;
    checks.push_back({{"name", name},
                      {"expected", expected},
                      {"actual", actual},
                      {"ok", ok}});
    text += std::string(ok ? "[ok]   " : "[FAIL] ") + name + " = " + actual +
            (ok ? "" : " (expected " + expected + ")") + "\n";
  };

  // Nodal curves in |8H| on a smooth sextic surface, k = 2.
  {
    SurfaceModel sextic = SurfaceModel::CompleteIntersection(3, {Integer(6)});
    DivisorClass d = sextic.Multiple(8);
    BoundReport b = DeltaBound(sextic, d, 2);
    expect("sextic 8H k=2: t", b.t.get_str(), "192");
    expect("sextic 8H k=2: s", b.s.get_str(), "36864");
    expect("sextic 8H k=2: f", ToString(*b.bound.AsRational()), "48");
    expect("sextic 8H k=2: max delta", OptionalText(b.max_admissible_delta), "47");
    expect("sextic 8H k=2 delta=47",
           OutcomeName(GknSufficient(sextic, d, 2, 47).outcome), "SufficientGkn");
    expect("sextic 8H k=2 delta=48",
           OutcomeName(GknSufficient(sextic, d, 2, 48).outcome), "BoundFailed");
    expect("ci bound (8,2,6)", ToString(CiBound(8, 2, 6).bound), "48");
  }
  // Projection of a (4,4) curve on the quadric to a nodal plane octic.
  {
    SurfaceModel plane = SurfaceModel::ProjectivePlane();
    SurfaceModel quadric = SurfaceModel::SmoothQuadric();
    Integer pa = ArithmeticGenus(plane, plane.Multiple(8));
    Integer g = ArithmeticGenus(quadric, DivisorClass{4, 4});
    Integer pi = CastelnuovoMaxGenus(8, 3);
    expect("p_a(8H on P^2)", pa.get_str(), "21");
    expect("p_a((4,4) on quadric)", g.get_str(), "9");
    expect("nodes of the projection", Integer(pa - g).get_str(), "12");
    expect("castelnuovo pi(8,3)", pi.get_str(), "9");
  }
  // One-nodal (3,3) curve on the quadric.
  {
    SurfaceModel quadric = SurfaceModel::SmoothQuadric();
    DivisorClass d{3, 3};
    Integer g = GeometricGenus(quadric, d, 1);
    expect("g((3,3), delta=1)", g.get_str(), "3");
    expect("rho(3,3,6)", BrillNoetherRho(g, 3, 6).get_str(), "3");
    ObstructionReport o = Obstruction2Normal(quadric, d, 1);
    expect("obstruction on (3,3)", ObstructionOutcomeName(o.outcome),
           "Inapplicable");
    expect("obstruction reason",
           o.failed_hypotheses.empty() ? "" : o.failed_hypotheses.front(),
           "D-3H not big and nef");
    expect("linear normality bound on (3,3)",
           ToString(*DeltaBound(quadric, d, 1).bound.AsRational()), "3/2");
  }
  expect("plane Severi bound (7,1)", ComputePlaneSeveriBound(7, 1).bound.get_str(),
         "10");
  return {{{"checks", checks}, {"all_match", all_match}}, text};
}

void Emit(std::ostream& out, bool json, const std::string& command,
          const CommandResult& result) {
  if (json) {
    Json doc = {{"schema_version", kReportSchemaVersion},
                {"command", command},
                {"result", result.payload}};
    out << doc.dump(2) << "\n";
  } else {
    out << result.text;
  }
}

void EmitError(std::ostream& out, std::ostream& err, bool json,
               const std::string& command, const std::string& kind,
               const std::string& message) {
  if (json) {
    Json doc = {{"schema_version", kReportSchemaVersion},
                {"command", command},
                {"error", {{"kind", kind}, {"message", message}}}};
    out << doc.dump(2) << "\n";
  } else {
    err << "error: " << message << "\n";
  }
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Request req;
  CLI::App app{"Exact criteria for geometric k-normality of nodal curves",
               "gkn"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", req.json, "Emit one JSON object");
  app.add_option("--dump-surface", req.dump_surface,
                 "Write the parsed surface spec to this file");

  std::string command;
  std::function<CommandResult()> action;
  bool worked_examples_match = true;
  Runner runner(req);

  auto bind = [&](CLI::App* sub, std::string name,
                  CommandResult (Runner::*method)()) {
    sub->callback([&, name, method] {
      command = name;
      action = [&, method] { return (runner.*method)(); };
    });
  };
  auto surface_opts = [&](CLI::App* sub) {
    sub->add_option("--surface", req.surface,
                    "p2 | quadric | ci:r=3,deg=6 | JSON spec or file");
    sub->add_option("--divisor", req.divisor, "nH or {\"coords\":[...]}");
  };

  auto* invariants = app.add_subcommand("invariants", "D^2, D.H, D.K, p_a");
  surface_opts(invariants);
  invariants->add_option("--delta", req.delta, "also report p_a - delta");
  invariants->add_option("--k", req.k, "also report nu(D, kH)");
  bind(invariants, "invariants", &Runner::Invariants);

  auto* gkn = app.add_subcommand("gkn", "sufficient criteria and bounds");
  gkn->require_subcommand(1);
  auto* check = gkn->add_subcommand("check", "verdict with full trace");
  surface_opts(check);
  check->add_option("--k", req.k);
  check->add_option("--delta", req.delta);
  bind(check, "gkn check", &Runner::GknCheck);
  auto* bound = gkn->add_subcommand("bound", "exact bound f(H,D,S)");
  surface_opts(bound);
  bound->add_option("--k", req.k);
  bind(bound, "gkn bound", &Runner::GknBound);
  auto* ci = gkn->add_subcommand("ci", "complete intersection bound");
  ci->add_option("--n", req.n);
  ci->add_option("--k", req.k);
  ci->add_option("--deg", req.deg);
  bind(ci, "gkn ci", &Runner::GknCi);
  auto* quadratic = gkn->add_subcommand("quadratic", "instability quadratic");
  surface_opts(quadratic);
  quadratic->add_option("--k", req.k);
  bind(quadratic, "gkn quadratic", &Runner::GknQuadratic);
  auto* bogomolov = gkn->add_subcommand("bogomolov", "(D-kH)^2 - 4 delta0");
  surface_opts(bogomolov);
  bogomolov->add_option("--k", req.k);
  bogomolov->add_option("--delta0", req.delta0);
  bind(bogomolov, "gkn bogomolov", &Runner::GknBogomolov);
  auto* zero_reg = gkn->add_subcommand("zero-regularity",
                                       "applicability of the 0-regularity test");
  surface_opts(zero_reg);
  zero_reg->add_option("--k", req.k);
  bind(zero_reg, "gkn zero-regularity", &Runner::GknZeroRegularity);

  auto* bn = app.add_subcommand("bn", "Brill-Noether number and obstruction");
  bn->require_subcommand(1);
  auto* rho = bn->add_subcommand("rho", "g - (r+1)(r-d+g)");
  rho->add_option("--g", req.g);
  rho->add_option("--r", req.r);
  rho->add_option("--d", req.d);
  bind(rho, "bn rho", &Runner::BnRho);
  auto* obstruct = bn->add_subcommand("obstruct", "geometric 2-normality obstruction");
  surface_opts(obstruct);
  obstruct->add_option("--delta", req.delta);
  bind(obstruct, "bn obstruct", &Runner::BnObstruct);

  auto* severi = app.add_subcommand("severi", "Severi varieties");
  severi->require_subcommand(1);
  auto* regular = severi->add_subcommand("regular", "regularity when K = kH");
  surface_opts(regular);
  regular->add_option("--delta", req.delta);
  bind(regular, "severi regular", &Runner::SeveriRegular);
  auto* plane_bound = severi->add_subcommand("plane-bound", "plane node bound");
  plane_bound->add_option("--n", req.n);
  plane_bound->add_option("--k", req.k);
  bind(plane_bound, "severi plane-bound", &Runner::SeveriPlaneBound);
  auto* verify = severi->add_subcommand("verify", "random-configuration check");
  verify->add_option("--n", req.n);
  verify->add_option("--k", req.k);
  verify->add_option("--trials", req.trials);
  verify->add_option("--seed", req.seed);
  verify->add_option("--coord-bound", req.coord_bound);
  bind(verify, "severi verify", &Runner::SeveriVerify);

  auto* castelnuovo = app.add_subcommand("castelnuovo", "Castelnuovo's bound");
  castelnuovo->add_option("--degree", req.degree);
  castelnuovo->add_option("--ambient", req.ambient);
  bind(castelnuovo, "castelnuovo", &Runner::Castelnuovo);

  auto* oracle = app.add_subcommand("oracle", "exact plane interpolation rank");
  oracle->require_subcommand(1);
  auto* rank = oracle->add_subcommand("rank", "rank of the jet matrix");
  rank->add_option("--file", req.file, "point-list JSON");
  rank->add_option("--degree", req.degree);
  rank->add_option("--random", req.random, "number of random points");
  rank->add_option("--mult", req.mult);
  rank->add_option("--seed", req.seed);
  rank->add_option("--coord-bound", req.coord_bound);
  bind(rank, "oracle rank", &Runner::OracleRank);

  auto* worked = app.add_subcommand(
      "worked-examples", "reproduce the reference computations");
  worked->callback([&] {
    command = "worked-examples";
    action = [&] { return WorkedExamples(worked_examples_match); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    CommandResult result = action();
    Emit(out, req.json, command, result);
    if (command == "worked-examples" && !worked_examples_match) {
      return kExitInternalError;
    }
    return kExitOk;
  } catch (const InputError& e) {
    EmitError(out, err, req.json, command, "input", e.what());
    return kExitInputError;
  } catch (const Json::exception& e) {
    EmitError(out, err, req.json, command, "input", e.what());
    return kExitInputError;
  } catch (const InvariantViolation& e) {
    EmitError(out, err, req.json, command, "internal", e.what());
    return kExitInternalError;
  } catch (const std::exception& e) {
    EmitError(out, err, req.json, command, "internal", e.what());
    return kExitInternalError;
  }
}

}  // namespace gkn
