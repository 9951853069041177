#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pong/cyclic_permutation.hpp"
#include "pong/lifted_permutation.hpp"
#include "pong/pong_algebra.hpp"
#include "pong/report.hpp"

namespace pong {

// Insertion-ordered so that dumps are byte-stable.
using Json = nlohmann::ordered_json;

struct GeneratorRecord {
  std::string algebra;  // "pong" or "asteroids"
  int m = 0;
  int k = 0;
  std::vector<int> domain;
  std::vector<int> values;

  friend bool operator==(const GeneratorRecord&, const GeneratorRecord&) = default;
};

GeneratorRecord to_record(const LiftedPermutation& f);
GeneratorRecord to_record(const CyclicLiftedPermutation& f);

// Throw InvalidArgument unless the record names a valid generator of the
// matching algebra.
LiftedPermutation to_pong(const GeneratorRecord& r);
CyclicLiftedPermutation to_asteroids(const GeneratorRecord& r);

Json to_json(const GeneratorRecord& r);
// A missing "algebra" key falls back to default_algebra (if nonempty).
GeneratorRecord generator_record_from_json(const Json& j, const std::string& default_algebra = "");

Json to_json(const PongElement& a);
Json to_json(const AsteroidsElement& a);

// Either {"terms": [...]} or a bare generator record (read as that
// generator with coefficient 1). Rejects duplicate generators or monomials,
// mixed algebras and exponent vectors of the wrong length.
PongElement pong_element_from_json(const Json& j);
AsteroidsElement asteroids_element_from_json(const Json& j);

// Algebra named by an element document: its first term's generator, or
// default_algebra for bare records without the key and for empty elements.
std::string element_algebra(const Json& j, const std::string& default_algebra);

Json to_json(const VerificationReport& r, bool include_timing = true);
VerificationReport report_from_json(const Json& j);

// Parses text, turning parser errors into InvalidArgument.
Json parse_json(const std::string& text);
// Canonical serialization: two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace pong
