#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "pong/io.hpp"
#include "pong/pong_algebra.hpp"

namespace pong {

// Export format: every generator with its doubled weight, Maslov grading
// and differential, then the nonzero products by generator index.
Json to_json(const PongTable& t);
Json to_json(const AsteroidsTable& t);
PongTable pong_table_from_json(const Json& j);
AsteroidsTable asteroids_table_from_json(const Json& j);

// Directory of structure tables, one file per (algebra, m, k, max_disp):
// "<algebra>-m<m>-k<k>-d<d>.json". Each file carries a format version and a
// CRC-32 of its table; a file that is unreadable, of another version, for
// other parameters, failing its checksum, or listing other generators than
// a fresh enumeration is reported on `warnings` and rebuilt. Writes go
// through a temporary file and a rename, so readers never see partial
// files. One writer per directory.
class TableCache {
 public:
  static constexpr int kFormatVersion = 1;

  explicit TableCache(std::filesystem::path dir, std::ostream* warnings = nullptr);

  PongTable pong(const Context& ctx, int max_disp);
  AsteroidsTable asteroids(const Context& ctx, int max_disp);

  std::filesystem::path path_for(const std::string& algebra, const Context& ctx, int max_disp) const;

  int hits() const { return hits_; }
  int rebuilds() const { return rebuilds_; }

 private:
  template <class Gen, class Parse>
  StructureTable<Gen> load_or_build(const std::string& algebra, const Context& ctx, int max_disp,
                                    std::vector<Gen> gens, Parse parse);

  std::filesystem::path dir_;
  std::ostream* warnings_;
  int hits_ = 0;
  int rebuilds_ = 0;
};

// CRC-32 of the canonical dump of j, as 8 lowercase hex digits.
std::string table_digest(const Json& j);

}  // namespace pong
