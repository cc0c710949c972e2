// Copyright 2026 The qdyn Authors.
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

#include "qdyn_cli/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ostream>

#include "qdyn/capacity.hpp"
#include "qdyn/criterion.hpp"
#include "qdyn/errors.hpp"
#include "qdyn/fekete.hpp"
#include "qdyn/padicdyn.hpp"
#include "qdyn/preper.hpp"
#include "qdyn/realdyn.hpp"
#include "qdyn_cli/surd_parser.hpp"

namespace qdyn::cli {

namespace {

struct Context {
  int digits;
  std::string dec(const HighFloat& v) const { return format_decimal(v, digits); }
  Json surd(const SurdSum& s) const { return {{"exact", s.str()}, {"decimal", dec(s.to_high())}}; }
  Json capacity(const CapacityValue& v) const { return {{"exact", v.str()}, {"decimal", v.decimal(digits)}}; }
  Json optional_dec(const std::optional<HighFloat>& v) const { return v ? Json(dec(*v)) : Json(nullptr); }
};

BigRational parse_c(const Command& cmd) {
  if (!cmd.c) throw InvalidInput(cmd.verb + " needs --c");
  return BigRational::parse(*cmd.c);
}

PAdicContext parse_p(const std::string& text) {
  BigInt p;
  if (text.empty() || p.set_str(text, 10) != 0) throw InvalidInput("--p must be an integer, got \"" + text + "\"");
  return PAdicContext(p);
}

FeketeConfig fekete_config(const Command& cmd) {
  FeketeConfig config;
  if (cmd.tol) {
    if (!(*cmd.tol > 0)) throw InvalidInput("--tol must be positive");
    config.tol = static_cast<long double>(*cmd.tol);
  }
  return config;
}

/// Interval half-length from --s, else the model interval of --c.
std::optional<SurdSum> half_length(const Command& cmd) {
  if (cmd.s) {
    SurdSum s = parse_surd(*cmd.s);
    if (s.sign() <= 0) throw InvalidInput("--s must be positive");
    return s;
  }
  if (cmd.c) return conjugated_model(parse_c(cmd)).half_length;
  return std::nullopt;
}

Json trichotomy_json(const TrichotomyReport& t, const Context& ctx) {
  Json j;
  j["tag"] = to_string(t.tag);
  j["setting"] = t.setting;
  j["witness"] = t.witness ? Json(*t.witness) : Json(nullptr);
  j["capacity"] = t.capacity ? ctx.capacity(*t.capacity) : Json(nullptr);
  j["note"] = t.note;
  return j;
}

Json do_classify(const Command& cmd, const Context& ctx) {
  const BigRational c = parse_c(cmd);
  Json r;
  r["c"] = c.str();
  r["totally_real"] = trichotomy_json(classify_totally_real(c), ctx);
  const RealJuliaShape shape = classify_real_filled_julia(c);
  r["real_julia"] = {{"shape", to_string(shape.tag)},
                     {"radius", shape.radius ? Json(shape.radius->str()) : Json(nullptr)}};
  if (cmd.p) {
    const PAdicContext pctx = parse_p(*cmd.p);
    r["p"] = to_string(pctx.p());
    r["totally_p_adic"] = trichotomy_json(classify_totally_padic(c, pctx), ctx);
    const PAdicShape pshape = classify_nonarch_filled_julia(c, pctx);
    r["p_adic_julia"] = {{"shape", to_string(pshape.tag)},
                         {"sphere_radius", pshape.sphere_radius ? Json(pshape.sphere_radius->str()) : Json(nullptr)}};
  }
  return r;
}

Json do_capacity(const Command& cmd, const Context& ctx) {
  const BigRational c = parse_c(cmd);
  Json r;
  r["c"] = c.str();
  AdelicSetDescriptor set;
  if (cmd.p) {
    const PAdicContext pctx = parse_p(*cmd.p);
    r["p"] = to_string(pctx.p());
    r["setting"] = "totally " + to_string(pctx.p()) + "-adic";
    set = totally_padic_adelic_set(c, pctx);
  } else {
    r["setting"] = "totally real";
    set = totally_real_adelic_set(c);
  }
  r["archimedean"] = ctx.capacity(set.archimedean_factor);
  r["finite"] = Json::array();
  for (const auto& [p, v] : set.finite_factors) {
    r["finite"].push_back({{"p", to_string(p)}, {"capacity", ctx.capacity(v)}});
  }
  r["total"] = ctx.capacity(set.total());
  return r;
}

Json do_fekete(const Command& cmd, const Context& ctx) {
  if (!cmd.n) throw InvalidInput("fekete needs --n");
  const SurdSum s = half_length(cmd).value_or(SurdSum(BigRational(BigInt(1), BigInt(2))));
  const FeketeResult f = fekete_points(*cmd.n, s, fekete_config(cmd));
  Json r;
  r["n"] = f.n;
  r["half_length"] = ctx.surd(s);
  r["points"] = Json::array();
  for (long double x : f.points) r["points"].push_back(ctx.dec(HighFloat(x)));
  r["n_diameter"] = ctx.dec(f.n_diameter);
  r["discriminant"] = ctx.dec(boost::multiprecision::exp(f.log_product));
  const HighFloat log_scale = HighFloat(f.n * (f.n - 1)) * boost::multiprecision::log(HighFloat(2) * s.to_high());
  r["unit_discriminant"] = ctx.dec(boost::multiprecision::exp(f.log_product - log_scale));
  r["iterations"] = f.iterations;
  r["max_gradient"] = format_decimal(HighFloat(f.max_gradient), 6);
  return r;
}

Json do_degree_bound(const Command& cmd, const Context& ctx) {
  const auto s = half_length(cmd);
  if (!s) throw InvalidInput("degree-bound needs --c or --s");
  const DegreeBound bound = degree_bound(*s, cmd.n_max.value_or(PreperOptions{}.criterion_n_max), fekete_config(cmd));
  Json r;
  r["half_length"] = ctx.surd(*s);
  r["n0"] = bound.n0;
  r["max_degree"] = bound.max_degree();
  r["trace"] = Json::array();
  for (const auto& row : bound.trace.rows) {
    r["trace"].push_back({{"n", row.n},
                          {"a_n", ctx.dec(row.a_n)},
                          {"b_n", ctx.dec(row.b_n)},
                          {"b_exact", row.b_exact.str()},
                          {"a_ratio", ctx.optional_dec(row.a_ratio)},
                          {"b_ratio", ctx.optional_dec(row.b_ratio)}});
  }
  return r;
}

Json outcome_json(const OrbitOutcome& o) {
  Json j;
  switch (o.kind) {
    case OrbitOutcome::Kind::Preperiodic:
      j["kind"] = "Preperiodic";
      j["tail_length"] = o.tail_length;
      j["period"] = o.period;
      break;
    case OrbitOutcome::Kind::Rejected:
      j["kind"] = "Rejected";
      j["reason"] = to_string(o.reason);
      j["step"] = o.steps_used;
      break;
    case OrbitOutcome::Kind::Unresolved:
      j["kind"] = "Unresolved";
      j["step"] = o.steps_used;
      break;
  }
  return j;
}

Json do_preper(const Command& cmd, const Context& ctx) {
  const BigRational c = parse_c(cmd);
  PreperOptions options;
  if (cmd.n_max) options.criterion_n_max = *cmd.n_max;
  options.fekete = fekete_config(cmd);
  const int budget = cmd.max_degree.value_or(8);
  const PreperSet set = totally_real_preper_set(c, budget, options);
  Json r;
  r["c"] = c.str();
  r["map_rule"] = set.model.map_rule();
  r["half_length"] = ctx.surd(set.model.half_length);
  r["n0"] = set.bound.n0;
  r["degree_bound"] = set.search_degree;
  r["degree_budget"] = budget;
  r["candidates"] = Json::array();
  for (const auto& p : set.candidates) r["candidates"].push_back(p.str());
  r["elements"] = Json::array();
  for (const auto& e : set.elements) {
    r["elements"].push_back({{"value", e.value.str()},
                             {"decimal", ctx.dec(e.value.value().to_high())},
                             {"min_poly", e.min_poly.str("x")},
                             {"model_min_poly", e.model_min_poly.str()},
                             {"model_orbit", outcome_json(e.model_orbit)},
                             {"certificate", {{"m", e.certificate.m}, {"n", e.certificate.n}}}});
  }
  r["rejected"] = Json::array();
  for (const auto& o : set.classified) {
    if (o.outcome.preperiodic()) continue;
    r["rejected"].push_back(
        {{"candidate", o.candidate.str()}, {"root", o.root.str()}, {"outcome", outcome_json(o.outcome)}});
  }
  r["unresolved"] = set.has_unresolved();
  return r;
}

Json do_verify(const Command& cmd, const Context& /*ctx*/) {
  const BigRational c = parse_c(cmd);
  if (!cmd.x) throw InvalidInput("verify needs --x");
  const SurdSum value = parse_surd(*cmd.x);
  std::set<BigInt> radicands;
  for (const auto& [m, q] : value.terms()) {
    if (m != 1) radicands.insert(m);
  }
  const AlgebraicElement x = AlgebraicElement::from_surd(algebra_for_radicands(radicands), value);
  const PreperCertificate cert = verify_preperiodic(x, c);
  Json r;
  r["c"] = c.str();
  r["x"] = value.str();
  r["preperiodic"] = cert.preperiodic;
  r["unresolved"] = cert.unresolved;
  r["certificate"] = cert.preperiodic ? Json{{"m", cert.m}, {"n", cert.n}} : Json(nullptr);
  r["reason"] = cert.reason;
  return r;
}

Json inputs_json(const Command& cmd) {
  Json j = Json::object();
  if (cmd.c) j["c"] = *cmd.c;
  if (cmd.p) j["p"] = *cmd.p;
  if (cmd.x) j["x"] = *cmd.x;
  if (cmd.s) j["s"] = *cmd.s;
  if (cmd.max_degree) j["max_degree"] = std::to_string(*cmd.max_degree);
  if (cmd.n) j["n"] = std::to_string(*cmd.n);
  if (cmd.n_max) j["n_max"] = std::to_string(*cmd.n_max);
  if (cmd.tol) j["tol"] = CLI::detail::to_string(*cmd.tol);
  j["digits"] = std::to_string(cmd.digits);
  return j;
}

}  // namespace

int default_digits() {
  const char* env = std::getenv("QDYN_DIGITS");
  if (env == nullptr || *env == '\0') return 30;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 45) throw InvalidInput("QDYN_DIGITS must be an integer in [1, 45]");
  return static_cast<int>(v);
}

Report execute(const Command& cmd) {
  const Context ctx{cmd.digits};
  const auto start = std::chrono::steady_clock::now();
  Report report;
  report.verb = cmd.verb;
  report.inputs = inputs_json(cmd);
  if (cmd.verb == "classify") {
    report.result = do_classify(cmd, ctx);
  } else if (cmd.verb == "capacity") {
    report.result = do_capacity(cmd, ctx);
  } else if (cmd.verb == "fekete") {
    report.result = do_fekete(cmd, ctx);
  } else if (cmd.verb == "degree-bound") {
    report.result = do_degree_bound(cmd, ctx);
  } else if (cmd.verb == "preper") {
    report.result = do_preper(cmd, ctx);
  } else if (cmd.verb == "verify") {
    report.result = do_verify(cmd, ctx);
  } else {
    throw InvalidInput("unknown verb \"" + cmd.verb + "\"");
  }
  if (cmd.timing) {
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return report;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command cmd;
  CLI::App app{"Preperiodic points of x^2 + c under local rationality conditions", "qdyn"};
  app.require_subcommand(1);
  std::string format = "text";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--timing", cmd.timing, "Include wall-clock time in the report");
  };
  auto add_c = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--c", cmd.c, "Parameter c as an integer, A/B or decimal literal");
    if (required) opt->required();
  };
  auto add_tol = [&](CLI::App* sub) { sub->add_option("--tol", cmd.tol, "Fekete gradient tolerance"); };

  auto* classify = app.add_subcommand("classify", "Trichotomy for the totally real and totally p-adic sets");
  add_c(classify, true);
  classify->add_option("--p", cmd.p, "Odd prime");
  add_common(classify);

  auto* capacity = app.add_subcommand("capacity", "Adelic capacity of the totally real or totally p-adic set");
  add_c(capacity, true);
  capacity->add_option("--p", cmd.p, "Odd prime; omit for the totally real setting");
  add_common(capacity);

  auto* fekete = app.add_subcommand("fekete", "Fekete points and n-diameter of [-s, s]");
  fekete->add_option("--n", cmd.n, "Number of points")->required();
  add_c(fekete, false);
  fekete->add_option("--s", cmd.s, "Half-length, e.g. (1+sqrt(5))/2; defaults to 1/2");
  add_tol(fekete);
  add_common(fekete);

  auto* bound = app.add_subcommand("degree-bound", "Smallest n_0 of the a_n/b_n criterion");
  add_c(bound, false);
  bound->add_option("--s", cmd.s, "Half-length instead of the model interval of --c");
  bound->add_option("--n-max", cmd.n_max, "Largest n examined");
  add_tol(bound);
  add_common(bound);

  auto* preper = app.add_subcommand("preper", "Totally real preperiodic points, exactly");
  add_c(preper, true);
  preper->add_option("--max-degree", cmd.max_degree, "Degree budget for the candidate search (default 8)");
  preper->add_option("--n-max", cmd.n_max, "Largest n examined by the degree criterion");
  add_tol(preper);
  add_common(preper);

  auto* verify = app.add_subcommand("verify", "Check one point by direct iteration");
  add_c(verify, true);
  verify->add_option("--x", cmd.x, "Point, e.g. (1+sqrt(5))/2")->required();
  add_common(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qdyn: " << e.what() << "\n";
    return kExitUsage;
  }

  for (const auto* sub : app.get_subcommands()) cmd.verb = sub->get_name();
  cmd.format = format == "json" ? Format::Json : Format::Text;
  try {
    cmd.digits = default_digits();
    const Report report = execute(cmd);
    out << render_report(report, cmd.format);
    return kExitOk;
  } catch (const MathRangeError& e) {
    err << "qdyn: " << e.what() << "\n";
    return kExitMathRange;
  } catch (const InvalidInput& e) {
    err << "qdyn: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "qdyn: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace qdyn::cli
