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

#include "qdyn_cli/report.hpp"

#include <sstream>
#include <stdexcept>

namespace qdyn::cli {

namespace {

std::string str_or(const Json& j, const char* key, const std::string& fallback = "-") {
  if (!j.contains(key) || j[key].is_null()) return fallback;
  if (j[key].is_string()) return j[key].get<std::string>();
  return j[key].dump();
}

std::string exact_and_decimal(const Json& v) {
  if (v.is_null()) return "-";
  const std::string exact = str_or(v, "exact");
  const std::string dec = str_or(v, "decimal");
  return exact == dec ? exact : exact + " ~ " + dec;
}

void text_trichotomy(std::ostream& os, const std::string& label, const Json& t) {
  os << "  " << label << ":\n";
  os << "    tag      " << str_or(t, "tag") << "\n";
  if (t.contains("witness") && !t["witness"].is_null()) os << "    witness  " << str_or(t, "witness") << "\n";
  if (t.contains("capacity") && !t["capacity"].is_null()) {
    os << "    capacity " << exact_and_decimal(t["capacity"]) << "\n";
  }
  if (!str_or(t, "note", "").empty()) os << "    note     " << str_or(t, "note") << "\n";
}

void text_classify(std::ostream& os, const Json& r) {
  os << "totally real = " << str_or(r["totally_real"], "tag");
  if (r.contains("totally_p_adic")) {
    os << ", totally " << str_or(r, "p") << "-adic = " << str_or(r["totally_p_adic"], "tag");
  }
  os << "\n";
  text_trichotomy(os, "totally real", r["totally_real"]);
  os << "    real filled Julia set " << str_or(r["real_julia"], "shape");
  if (!r["real_julia"]["radius"].is_null()) os << " (a_c = " << str_or(r["real_julia"], "radius") << ")";
  os << "\n";
  if (r.contains("totally_p_adic")) {
    text_trichotomy(os, "totally " + str_or(r, "p") + "-adic", r["totally_p_adic"]);
    os << "    " << str_or(r, "p") << "-adic filled Julia set " << str_or(r["p_adic_julia"], "shape");
    if (!r["p_adic_julia"]["sphere_radius"].is_null()) {
      os << " on |x|^2 = " << str_or(r["p_adic_julia"], "sphere_radius");
    }
    os << "\n";
  }
}

void text_capacity(std::ostream& os, const Json& r) {
  os << "adelic capacity (" << str_or(r, "setting") << ") = " << exact_and_decimal(r["total"]) << "\n";
  os << "  archimedean factor " << exact_and_decimal(r["archimedean"]) << "\n";
  for (const auto& f : r["finite"]) {
    os << "  factor at p = " << str_or(f, "p") << " " << exact_and_decimal(f["capacity"]) << "\n";
  }
}

void text_fekete(std::ostream& os, const Json& r) {
  os << "Fekete points, n = " << str_or(r, "n") << ", interval [-s, s] with s = " << exact_and_decimal(r["half_length"])
     << "\n";
  for (const auto& p : r["points"]) os << "  " << p.get<std::string>() << "\n";
  os << "  n-diameter      " << str_or(r, "n_diameter") << "\n";
  os << "  discriminant    " << str_or(r, "discriminant") << "\n";
  os << "  D_n (unit length) " << str_or(r, "unit_discriminant") << "\n";
  os << "  newton steps " << str_or(r, "iterations") << ", max gradient " << str_or(r, "max_gradient") << "\n";
}

void text_degree_bound(std::ostream& os, const Json& r) {
  os << "n_0 = " << str_or(r, "n0") << " for s = " << exact_and_decimal(r["half_length"])
     << " (degree <= " << str_or(r, "max_degree") << ")\n";
  os << "  n  a_n  b_n  a_n/a_(n-1)  b_n/b_(n-1)\n";
  for (const auto& row : r["trace"]) {
    os << "  " << str_or(row, "n") << "  " << str_or(row, "a_n") << "  " << str_or(row, "b_n") << "  "
       << str_or(row, "a_ratio") << "  " << str_or(row, "b_ratio") << "\n";
  }
}

void text_preper(std::ostream& os, const Json& r) {
  os << "PrePer(x^2 + c) among totally real numbers, c = " << str_or(r, "c") << ": " << r["elements"].size()
     << " elements\n";
  os << "  model g(x) = " << str_or(r, "map_rule") << " on [-s, s], s = " << exact_and_decimal(r["half_length"])
     << "\n";
  os << "  n_0 = " << str_or(r, "n0") << ", candidates searched to degree " << str_or(r, "degree_bound") << "\n";
  for (const auto& e : r["elements"]) {
    os << "  " << str_or(e, "value") << "  min poly " << str_or(e, "min_poly") << "  f^" << str_or(e["certificate"], "n")
       << " = f^" << str_or(e["certificate"], "m") << "  (tail " << str_or(e["model_orbit"], "tail_length")
       << ", period " << str_or(e["model_orbit"], "period") << ")\n";
  }
  for (const auto& j : r["rejected"]) {
    os << "  rejected " << str_or(j, "root") << " (root of " << str_or(j, "candidate") << "): "
       << str_or(j["outcome"], "kind");
    if (j["outcome"].contains("reason")) os << " " << str_or(j["outcome"], "reason");
    os << " at step " << str_or(j["outcome"], "step") << "\n";
  }
}

std::string map_of(const std::string& c) {
  if (c == "0") return "x^2";
  if (!c.empty() && c[0] == '-') return "x^2 - " + c.substr(1);
  return "x^2 + " + c;
}

void text_verify(std::ostream& os, const Json& r) {
  const bool yes = r["preperiodic"].get<bool>();
  os << str_or(r, "x") << (yes ? " is" : " is not") << " preperiodic for " << map_of(str_or(r, "c"));
  if (yes) {
    os << ": f^" << str_or(r["certificate"], "n") << "(x) = f^" << str_or(r["certificate"], "m") << "(x)\n";
    return;
  }
  if (r["unresolved"].get<bool>()) os << " (unresolved)";
  os << "\n  " << str_or(r, "reason") << "\n";
}

}  // namespace

Json to_json(const Report& r) {
  Json j;
  j["verb"] = r.verb;
  j["inputs"] = r.inputs;
  j["result"] = r.result;
  if (r.elapsed_ms) j["timing"] = {{"elapsed_ms", *r.elapsed_ms}};
  return j;
}

Report report_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("report must be an object");
  if (!j.contains("verb") || !j["verb"].is_string()) throw std::invalid_argument("report.verb must be a string");
  if (!j.contains("inputs") || !j["inputs"].is_object()) throw std::invalid_argument("report.inputs must be an object");
  if (!j.contains("result") || !j["result"].is_object()) throw std::invalid_argument("report.result must be an object");
  Report r;
  r.verb = j["verb"].get<std::string>();
  r.inputs = j["inputs"];
  r.result = j["result"];
  if (j.contains("timing")) {
    const Json& t = j["timing"];
    if (!t.is_object() || !t.contains("elapsed_ms") || !t["elapsed_ms"].is_number()) {
      throw std::invalid_argument("report.timing.elapsed_ms must be a number");
    }
    r.elapsed_ms = t["elapsed_ms"].get<double>();
  }
  return r;
}

std::string render_report(const Report& r, Format format) {
  if (format == Format::Json) return to_json(r).dump(2) + "\n";
  std::ostringstream os;
  if (r.verb == "classify") {
    text_classify(os, r.result);
  } else if (r.verb == "capacity") {
    text_capacity(os, r.result);
  } else if (r.verb == "fekete") {
    text_fekete(os, r.result);
  } else if (r.verb == "degree-bound") {
    text_degree_bound(os, r.result);
  } else if (r.verb == "preper") {
    text_preper(os, r.result);
  } else if (r.verb == "verify") {
    text_verify(os, r.result);
  } else {
    os << r.result.dump(2) << "\n";
  }
  if (r.elapsed_ms) os << "elapsed " << *r.elapsed_ms << " ms\n";
  return os.str();
}

}  // namespace qdyn::cli
