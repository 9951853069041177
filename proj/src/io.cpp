#include "pong/io.hpp"

#include <cmath>
#include <limits>
#include <set>

#include "pong/errors.hpp"

namespace pong {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InvalidArgument("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InvalidArgument(std::string("missing key \"") + key + "\"");
  return *it;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidArgument(std::string(what) + " must be an integer");
  const auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw InvalidArgument(std::string(what) + " out of range");
  }
  return static_cast<int>(v);
}

std::int64_t as_int64(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidArgument(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) throw InvalidArgument(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<int> as_int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InvalidArgument(std::string(what) + " must be a list");
  std::vector<int> out;
  out.reserve(j.size());
  for (const Json& x : j) out.push_back(as_int(x, what));
  return out;
}

void reject_unknown_keys(const Json& j, std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* a : allowed) known = known || it.key() == a;
    if (!known) throw InvalidArgument("unexpected key \"" + it.key() + "\"");
  }
}

template <class Gen>
Json element_json(const Element<Gen>& a) {
  Json terms = Json::array();
  for (const auto& [g, p] : a.terms()) {
    Json monomials = Json::array();
    for (const Monomial& mono : p.monomials()) monomials.push_back(mono.exponents());
    terms.push_back(Json{{"generator", to_json(to_record(g))}, {"monomials", std::move(monomials)}});
  }
  return Json{{"terms", std::move(terms)}};
}

template <class Gen, class Convert>
Element<Gen> element_from(const Json& j, const std::string& algebra, Convert convert) {
  Element<Gen> out;
  if (!j.is_object()) throw InvalidArgument("expected a JSON object");
  if (!j.contains("terms")) {
    out.add(convert(generator_record_from_json(j, algebra)), Monomial::one(as_int(field(j, "m"), "m")));
    return out;
  }
  reject_unknown_keys(j, {"terms"});
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw InvalidArgument("terms must be a list");
  std::set<Gen> seen;
  std::optional<Context> ctx;
  for (const Json& t : terms) {
    if (!t.is_object()) throw InvalidArgument("each term must be an object");
    reject_unknown_keys(t, {"generator", "monomials"});
    const Gen g = convert(generator_record_from_json(field(t, "generator"), algebra));
    if (ctx && *ctx != g.context()) throw InvalidArgument("terms from different algebras");
    ctx = g.context();
    if (!seen.insert(g).second) throw InvalidArgument("duplicate generator " + g.to_string());
    const Json& monos = field(t, "monomials");
    if (!monos.is_array()) throw InvalidArgument("monomials must be a list");
    if (monos.empty()) throw InvalidArgument("term with no monomials for " + g.to_string());
    std::set<Monomial> seen_monos;
    for (const Json& mj : monos) {
      Monomial mono(as_int_list(mj, "exponent"));
      if (mono.size() != g.context().m) throw InvalidArgument("monomial length differs from m");
      if (!seen_monos.insert(mono).second) throw InvalidArgument("duplicate monomial " + mono.to_string());
      out.add(g, mono);
    }
  }
  return out;
}

}  // namespace

GeneratorRecord to_record(const LiftedPermutation& f) {
  return {"pong", f.context().m, f.context().k, f.domain(), f.values()};
}

GeneratorRecord to_record(const CyclicLiftedPermutation& f) {
  return {"asteroids", f.context().m, f.context().k, f.domain(), f.values()};
}

LiftedPermutation to_pong(const GeneratorRecord& r) {
  if (r.algebra != "pong") throw InvalidArgument("expected a pong generator, got \"" + r.algebra + "\"");
  if (static_cast<int>(r.domain.size()) != r.k) throw InvalidArgument("domain size differs from k");
  return LiftedPermutation({r.m, r.k}, r.domain, r.values);
}

CyclicLiftedPermutation to_asteroids(const GeneratorRecord& r) {
  if (r.algebra != "asteroids") {
    throw InvalidArgument("expected an asteroids generator, got \"" + r.algebra + "\"");
  }
  if (static_cast<int>(r.domain.size()) != r.k) throw InvalidArgument("domain size differs from k");
  return CyclicLiftedPermutation({r.m, r.k}, r.domain, r.values);
}

Json to_json(const GeneratorRecord& r) {
  return Json{{"algebra", r.algebra}, {"m", r.m}, {"k", r.k}, {"domain", r.domain}, {"values", r.values}};
}

GeneratorRecord generator_record_from_json(const Json& j, const std::string& default_algebra) {
  if (!j.is_object()) throw InvalidArgument("generator must be a JSON object");
  reject_unknown_keys(j, {"algebra", "m", "k", "domain", "values"});
  GeneratorRecord r;
  if (j.contains("algebra")) {
    r.algebra = as_string(j["algebra"], "algebra");
  } else if (!default_algebra.empty()) {
    r.algebra = default_algebra;
  } else {
    throw InvalidArgument("missing key \"algebra\"");
  }
  if (r.algebra != "pong" && r.algebra != "asteroids") {
    throw InvalidArgument("unknown algebra \"" + r.algebra + "\"");
  }
  r.m = as_int(field(j, "m"), "m");
  r.k = as_int(field(j, "k"), "k");
  r.domain = as_int_list(field(j, "domain"), "domain");
  r.values = as_int_list(field(j, "values"), "values");
  return r;
}

Json to_json(const PongElement& a) { return element_json(a); }
Json to_json(const AsteroidsElement& a) { return element_json(a); }

PongElement pong_element_from_json(const Json& j) {
  return element_from<LiftedPermutation>(j, "pong", to_pong);
}

AsteroidsElement asteroids_element_from_json(const Json& j) {
  return element_from<CyclicLiftedPermutation>(j, "asteroids", to_asteroids);
}

std::string element_algebra(const Json& j, const std::string& default_algebra) {
  if (!j.is_object()) throw InvalidArgument("expected a JSON object");
  const Json* gen = &j;
  if (j.contains("terms")) {
    const Json& terms = j["terms"];
    if (!terms.is_array() || terms.empty() || !terms[0].is_object() || !terms[0].contains("generator")) {
      return default_algebra;
    }
    gen = &terms[0]["generator"];
  }
  if (gen->is_object() && gen->contains("algebra")) return as_string((*gen)["algebra"], "algebra");
  return default_algebra;
}

Json to_json(const VerificationReport& r, bool include_timing) {
  Json checks = Json::array();
  for (const CheckTally& t : r.checks) checks.push_back(Json{{"name", t.name}, {"run", t.run}, {"failed", t.failed}});
  Json failures = Json::array();
  for (const Failure& f : r.failures) {
    Json operands = Json::array();
    for (const OperandDump& o : f.operands) operands.push_back(Json{{"domain", o.domain}, {"values", o.values}});
    failures.push_back(Json{{"check", f.check}, {"operands", std::move(operands)}, {"detail", f.detail}});
  }
  Json out{{"suite", r.suite},
           {"algebra", r.algebra},
           {"m", r.m},
           {"k", r.k},
           {"max_disp", r.max_disp},
           {"passed", r.passed()},
           {"checks_run", r.total_checks()},
           {"checks", std::move(checks)},
           {"failures", std::move(failures)}};
  // Integer milliseconds: the interchange format carries no floats.
  if (include_timing) out["wall_time_ms"] = static_cast<std::int64_t>(std::llround(r.wall_time_ms));
  return out;
}

VerificationReport report_from_json(const Json& j) {
  VerificationReport r;
  r.suite = as_string(field(j, "suite"), "suite");
  r.algebra = as_string(field(j, "algebra"), "algebra");
  r.m = as_int(field(j, "m"), "m");
  r.k = as_int(field(j, "k"), "k");
  r.max_disp = as_int(field(j, "max_disp"), "max_disp");
  for (const Json& t : field(j, "checks")) {
    r.checks.push_back({as_string(field(t, "name"), "name"), as_int64(field(t, "run"), "run"),
                        as_int64(field(t, "failed"), "failed")});
  }
  for (const Json& f : field(j, "failures")) {
    Failure failure{as_string(field(f, "check"), "check"), {}, as_string(field(f, "detail"), "detail")};
    for (const Json& o : field(f, "operands")) {
      failure.operands.push_back({as_int_list(field(o, "domain"), "domain"), as_int_list(field(o, "values"), "values")});
    }
    r.failures.push_back(std::move(failure));
  }
  if (j.contains("wall_time_ms")) r.wall_time_ms = static_cast<double>(as_int64(j["wall_time_ms"], "wall_time_ms"));
  return r;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace pong
