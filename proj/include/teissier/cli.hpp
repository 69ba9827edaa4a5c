/*
   Copyright 2026 The Teissier Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
 * Command-line driver.
 *
 *   teissier <classify|kappa|polyhedron|discriminant|deform> [flags] POLY
 *   teissier <command> [flags] --batch FILE
 *
 * Exit codes: 0 decided, 1 input error, 2 inconclusive, 3 deform without an
 * overweight presentation.  Every report is built as a JSON object first;
 * the text form is rendered from that object.
 */
#pragma once

#include "teissier/deform.hpp"
#include "teissier/quasiord.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace teissier::cli {

using Json = nlohmann::ordered_json;

enum ExitCode { kDecided = 0, kInputError = 1, kInconclusive = 2, kNoPresentation = 3 };

struct RunConfig {
  std::string command;
  std::uint32_t characteristic = 0;
  unsigned extension = 1;
  std::string modulus;
  std::optional<std::size_t> vars;
  std::uint32_t truncation = kDefaultTruncation;
  std::size_t budget = 256;
  unsigned depth = 3;
  std::string lambda;
  bool json = false;
  std::string batch;
  std::string polynomial;
};

struct Outcome {
  int code = kDecided;
  Json report;
};

inline Field make_field(const RunConfig& cfg) {
  if (cfg.characteristic == 0) {
    if (cfg.extension != 1 || !cfg.modulus.empty()) throw ConfigError("--ext needs a positive characteristic");
    return Field::rationals();
  }
  if (cfg.extension == 1 && cfg.modulus.empty()) return Field::prime(cfg.characteristic);
  if (cfg.modulus.empty()) throw ConfigError("--ext needs --modulus");
  const Field base = Field::prime(cfg.characteristic);
  const Poly<Field> m = parse_polynomial(cfg.modulus, VarContext::standard(0), base);
  std::vector<std::uint32_t> digits(m.degree_in(0) + 1, 0);
  for (const auto& [mono, c] : m.terms()) digits[mono[0]] = std::get<std::uint32_t>(c);
  return Field::extension(cfg.characteristic, cfg.extension, digits);
}

/// Largest xN index mentioned in the text, at least 1.
inline std::size_t infer_vars(const std::string& text) {
  std::size_t d = 1;
  static const std::regex xvar("x([0-9]+)");
  for (std::sregex_iterator it(text.begin(), text.end(), xvar), end; it != end; ++it)
    d = std::max<std::size_t>(d, std::stoul((*it)[1].str()));
  return d;
}

inline std::vector<Rational> parse_lambda(const std::string& text, std::size_t d) {
  if (text.empty()) return std::vector<Rational>(d, Rational(1));
  std::vector<Rational> out;
  static const std::regex item(R"(\s*([0-9]+)(?:\s*/\s*([0-9]+))?\s*)");
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::smatch m;
    if (!std::regex_match(part, m, item)) throw ConfigError("malformed --lambda component '" + part + "'");
    const BigInt num(m[1].str());
    const BigInt den(m[2].matched ? m[2].str() : std::string("1"));
    if (den == 0) throw ConfigError("zero denominator in --lambda");
    out.emplace_back(num, den);
  }
  return out;
}

inline Json point_json(const QPoint& p) {
  Json a = Json::array();
  for (const auto& c : p.coords) a.push_back(c.str());
  return a;
}

inline Json kappa_json(const KappaInvariant& k) {
  Json v = Json::array();
  for (const auto& p : k.vertices) v.push_back(point_json(p));
  return Json{{"vertices", v}, {"terminal", to_string(k.terminal)}};
}

inline Json truncation_json(Truncation t) { return t ? Json(*t) : Json(nullptr); }

inline Json verdict_json(Verdict v) {
  if (v == Verdict::inconclusive) return "inconclusive";
  return v == Verdict::yes;
}

inline Json monomial_unit_json(const MonomialUnit& mu) {
  switch (mu.verdict) {
    case UnitTest::no: return "no";
    case UnitTest::inconclusive: return "inconclusive";
    case UnitTest::yes: break;
  }
  Json a = Json::array();
  for (auto e : mu.exponent) a.push_back(std::to_string(e));
  return Json{{"yes", a}};
}

inline Json discriminant_json(const DiscriminantReport& d) {
  return Json{{"value", format(d.disc)}, {"exact", d.exact}, {"monomial_unit", monomial_unit_json(d.monomial_unit)}};
}

inline Json presentation_json(const std::optional<OverweightPresentation>& p) {
  if (!p) return nullptr;
  Json a = Json::array();
  for (const auto& s : format_presentation(*p)) a.push_back(s);
  return a;
}

inline Json strings_json(const std::vector<std::string>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

inline KappaConfig kappa_config(const RunConfig& cfg) {
  if (cfg.truncation < 1) throw ConfigError("--trunc must be at least 1");
  if (cfg.budget < 1) throw ConfigError("--budget must be at least 1");
  return {cfg.truncation, cfg.budget, cfg.depth};
}

inline Outcome run_one(const RunConfig& cfg, const std::string& text) {
  const Field field = make_field(cfg);
  const std::size_t d = cfg.vars ? *cfg.vars : infer_vars(text);
  if (d < 1 || d > kMaxDimension) throw ConfigError("--vars must be between 1 and " + std::to_string(kMaxDimension));
  const WeierstrassPoly f = weierstrass_validate(parse_polynomial(text, VarContext::standard(d), field));
  const KappaConfig kc = kappa_config(cfg);
  Outcome out;
  Json& r = out.report;
  r["input"] = format(f.poly);
  r["field"] = field.name();

  if (cfg.command == "polyhedron") {
    const auto poly = projected_polyhedron(f);
    Json v = Json::array();
    for (const auto& p : poly.vertices()) v.push_back(point_json(p));
    r["polyhedron"] = Json{{"vertices", v}};
    return out;
  }
  if (cfg.command == "discriminant") {
    const DiscriminantReport disc = discriminant_z(f);
    r["discriminant"] = discriminant_json(disc);
    if (disc.monomial_unit.verdict == UnitTest::inconclusive) out.code = kInconclusive;
    return out;
  }
  if (cfg.command == "classify") {
    const ClassificationReport c = classify(f, kc);
    r["kappa"] = kappa_json(c.kappa.kappa);
    r["teissier"] = verdict_json(c.teissier);
    r["quasi_ordinary"] = verdict_json(c.quasi_ordinary);
    r["discriminant"] = discriminant_json(c.discriminant);
    r["presentation"] = presentation_json(c.kappa.presentation);
    r["certified_truncation"] = truncation_json(c.kappa.kappa.certified_truncation);
    r["diagnostics"] = strings_json(c.kappa.diagnostics);
    if (!c.decided()) out.code = kInconclusive;
    return out;
  }

  const KappaResult k = compute_kappa(f, kc);
  r["kappa"] = kappa_json(k.kappa);
  r["presentation"] = presentation_json(k.presentation);
  if (cfg.command == "kappa") {
    r["certified_truncation"] = truncation_json(k.kappa.certified_truncation);
    r["diagnostics"] = strings_json(k.diagnostics);
    if (k.kappa.terminal == Terminal::inconclusive) out.code = kInconclusive;
    return out;
  }

  // deform
  if (k.kappa.terminal == Terminal::inconclusive) {
    r["certified_truncation"] = truncation_json(k.kappa.certified_truncation);
    r["diagnostics"] = strings_json(k.diagnostics);
    out.code = kInconclusive;
    return out;
  }
  if (k.kappa.terminal != Terminal::infinity || !k.presentation) {
    std::vector<std::string> diag = k.diagnostics;
    diag.push_back("no overweight presentation");
    r["certified_truncation"] = truncation_json(k.kappa.certified_truncation);
    r["diagnostics"] = strings_json(diag);
    out.code = kNoPresentation;
    return out;
  }
  const IntegerLift lift = lift_presentation(*k.presentation);
  Json lifted = Json::array();
  for (const auto& rel : lift.relations) lifted.push_back(format_relation(rel));
  lifted.push_back(format(lift.final_equation));
  r["lift"] = lifted;
  const GhostReport ghosts = ghost_monomials(lift);
  r["hypersurface"] = format(ghosts.hypersurface);
  Json g = Json::array();
  for (const auto& gh : ghosts.ghosts)
    g.push_back(Json{{"monomial", format_monomial(gh.monomial, lift.nx())}, {"coeff", gh.coeff.str()}});
  r["ghosts"] = g;
  const WeightVectorOmega omega = default_tropical_weight(lift, parse_lambda(cfg.lambda, d));
  const InitialIdealReport ideal = initial_forms_weighted(lift, omega);
  Json w = Json::array();
  for (const auto& c : omega.omega) w.push_back(c.str());
  Json gens = Json::array();
  for (const auto& p : ideal.generators) gens.push_back(format(p));
  r["initial_ideal"] = Json{{"weights", w},
                            {"weights_label", "kappa-derived weights"},
                            {"generators", gens},
                            {"fiber_independent", ideal.fiber_independent},
                            {"witness", ideal.witness ? Json(ideal.witness->str()) : Json(nullptr)}};
  r["certified_truncation"] = truncation_json(k.kappa.certified_truncation);
  r["diagnostics"] = strings_json(k.diagnostics);
  return out;
}

// ---- text rendering -------------------------------------------------------

inline std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

inline std::string point_text(const Json& p) {
  if (p.size() == 1) return p[0].get<std::string>();
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + p[i].get<std::string>();
  return out + ")";
}

inline std::string kappa_text(const Json& k) {
  std::string out = "(";
  for (const auto& v : k["vertices"]) out += point_text(v) + ", ";
  return out + k["terminal"].get<std::string>() + ")";
}

inline std::string unit_text(const Json& mu) {
  if (mu.is_string()) return mu.get<std::string>();
  return "yes " + point_text(mu["yes"]);
}

inline void render_text(const Json& r, std::ostream& os) {
  for (const auto& [key, value] : r.items()) {
    if (key == "kappa") {
      os << "kappa: " << kappa_text(value) << "\n";
    } else if (key == "polyhedron") {
      os << "polyhedron:";
      for (const auto& v : value["vertices"]) os << " " << point_text(v);
      os << "\n";
    } else if (key == "discriminant") {
      os << "discriminant: " << value["value"].get<std::string>() << "\n";
      os << "discriminant_exact: " << scalar_text(value["exact"]) << "\n";
      os << "monomial_unit: " << unit_text(value["monomial_unit"]) << "\n";
    } else if (key == "ghosts") {
      os << "ghosts:" << (value.empty() ? " none" : "") << "\n";
      for (const auto& g : value)
        os << "  " << g["coeff"].get<std::string>() << " * " << g["monomial"].get<std::string>() << "\n";
    } else if (key == "initial_ideal") {
      os << "initial_ideal_weights:";
      for (const auto& w : value["weights"]) os << " " << w.get<std::string>();
      os << " (" << value["weights_label"].get<std::string>() << ")\n";
      os << "initial_ideal:\n";
      for (const auto& g : value["generators"]) os << "  " << g.get<std::string>() << "\n";
      os << "fiber_independent: " << scalar_text(value["fiber_independent"]) << "\n";
      os << "witness: " << scalar_text(value["witness"]) << "\n";
    } else if (value.is_array()) {
      os << key << ":" << (value.empty() ? " none" : "") << "\n";
      for (const auto& s : value) os << "  " << scalar_text(s) << "\n";
    } else {
      os << key << ": " << scalar_text(value) << "\n";
    }
  }
}

inline void emit(const Json& r, bool json, std::ostream& os) {
  if (json) os << r.dump() << "\n";
  else render_text(r, os);
}

inline Outcome run_guarded(const RunConfig& cfg, const std::string& text) {
  try {
    return run_one(cfg, text);
  } catch (const UnsupportedLift& e) {
    return {kInputError, Json{{"error", e.what()}}};
  } catch (const ParseError& e) {
    return {kInputError, Json{{"error", e.what()}}};
  } catch (const ValidationError& e) {
    return {kInputError, Json{{"error", e.what()}}};
  } catch (const ConfigError& e) {
    return {kInputError, Json{{"error", e.what()}}};
  } catch (const FieldError& e) {
    return {kInputError, Json{{"error", e.what()}}};
  } catch (const Error& e) {
    return {kInputError, Json{{"error", std::string("internal: ") + e.what()}}};
  }
}

// Input errors dominate, then a missing presentation, then inconclusive.
inline int combine(int a, int b) {
  auto rank = [](int c) { return c == kInputError ? 3 : c == kNoPresentation ? 2 : c == kInconclusive ? 1 : 0; };
  return rank(a) >= rank(b) ? a : b;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Kappa invariant, Teissier and quasi-ordinary classification of Weierstrass polynomials"};
  app.add_option("command", cfg.command, "classify | kappa | polyhedron | discriminant | deform")
      ->required()
      ->check(CLI::IsMember({"classify", "kappa", "polyhedron", "discriminant", "deform"}));
  app.add_option("polynomial", cfg.polynomial, "polynomial in x1..xd and z");
  app.add_option("--char", cfg.characteristic, "characteristic: 0 or a prime");
  app.add_option("--ext", cfg.extension, "extension degree k of GF(p^k)");
  app.add_option("--modulus", cfg.modulus, "monic irreducible modulus, written in z");
  app.add_option("--vars", cfg.vars, "number of x variables (inferred when absent)");
  app.add_option("--trunc", cfg.truncation, "truncation degree")->capture_default_str();
  app.add_option("--budget", cfg.budget, "eliminations per stage")->capture_default_str();
  app.add_option("--depth", cfg.depth, "rewrite depth of the binomial search")->capture_default_str();
  app.add_option("--lambda", cfg.lambda, "positive rationals Q1,Q2,... for the deform weights");
  app.add_flag("--json", cfg.json, "JSON output");
  app.add_option("--batch", cfg.batch, "file with one polynomial per line");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kDecided;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (cfg.batch.empty()) {
    if (cfg.polynomial.empty()) {
      err << "error: a polynomial or --batch FILE is required\n";
      return kInputError;
    }
    const Outcome o = run_guarded(cfg, cfg.polynomial);
    if (o.code == kInputError) {
      err << "error: " << o.report["error"].get<std::string>() << "\n";
      return kInputError;
    }
    emit(o.report, cfg.json, out);
    if (o.code == kNoPresentation) err << "no overweight presentation\n";
    return o.code;
  }

  if (!cfg.polynomial.empty()) {
    err << "error: give either a polynomial or --batch, not both\n";
    return kInputError;
  }
  std::ifstream in(cfg.batch);
  if (!in) {
    err << "error: cannot read " << cfg.batch << "\n";
    return kInputError;
  }
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);)
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
  std::vector<Outcome> results(lines.size());
  for (std::size_t start = 0; start < lines.size(); start += width) {
    std::vector<std::future<Outcome>> jobs;
    for (std::size_t i = start; i < std::min(lines.size(), start + width); ++i)
      jobs.push_back(std::async(std::launch::async, run_guarded, std::cref(cfg), std::cref(lines[i])));
    for (std::size_t i = 0; i < jobs.size(); ++i) results[start + i] = jobs[i].get();
  }
  int code = kDecided;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const Outcome& o = results[i];
    code = combine(code, o.code);
    Json r{{"line", i + 1}, {"exit", o.code}};
    for (const auto& [key, value] : o.report.items()) r[key] = value;
    if (!cfg.json && i) out << "\n";
    emit(r, cfg.json, out);
  }
  return code;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace teissier::cli
