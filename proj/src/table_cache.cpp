#include "pong/table_cache.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <unistd.h>

#include <boost/crc.hpp>

#include "pong/errors.hpp"

namespace pong {
namespace {

template <class Gen>
Json table_json(const StructureTable<Gen>& t, const char* algebra) {
  Json gens = Json::array();
  for (std::size_t i = 0; i < t.generators.size(); ++i) {
    const Gen& g = t.generators[i];
    gens.push_back(Json{{"generator", to_json(to_record(g))},
                        {"weight_doubled", weight_vector(g).doubled},
                        {"maslov", maslov(g)},
                        {"differential", to_json(t.differentials[i])}});
  }
  Json products = Json::array();
  for (const auto& p : t.products) {
    products.push_back(Json{{"left", p.left},
                            {"right", p.right},
                            {"generator", to_json(to_record(p.generator))},
                            {"monomial", p.monomial.exponents()}});
  }
  return Json{{"algebra", algebra},
              {"m", t.context.m},
              {"k", t.context.k},
              {"max_disp", t.max_disp},
              {"generators", std::move(gens)},
              {"products", std::move(products)}};
}

template <class Gen, class ToGen, class ParseElement>
StructureTable<Gen> table_from(const Json& j, const char* algebra, ToGen to_gen, ParseElement parse_element) {
  try {
    if (j.at("algebra").get<std::string>() != algebra) throw InvalidArgument("table is for another algebra");
    StructureTable<Gen> t;
    t.context = {j.at("m").get<int>(), j.at("k").get<int>()};
    t.max_disp = j.at("max_disp").get<int>();
    for (const Json& e : j.at("generators")) {
      Gen g = to_gen(generator_record_from_json(e.at("generator")));
      if (g.context() != t.context) throw InvalidArgument("generator from another algebra in table");
      if (e.at("weight_doubled").get<std::vector<int>>() != weight_vector(g).doubled ||
          e.at("maslov").get<int>() != maslov(g)) {
        throw InvalidArgument("stored weight or grading of " + g.to_string() + " is wrong");
      }
      t.generators.push_back(std::move(g));
      t.differentials.push_back(parse_element(e.at("differential")));
    }
    const int n = static_cast<int>(t.generators.size());
    for (const Json& p : j.at("products")) {
      const int left = p.at("left").get<int>();
      const int right = p.at("right").get<int>();
      if (left < 0 || left >= n || right < 0 || right >= n) throw InvalidArgument("product index out of range");
      Gen g = to_gen(generator_record_from_json(p.at("generator")));
      Monomial mono(p.at("monomial").get<std::vector<int>>());
      if (mono.size() != t.context.m) throw InvalidArgument("monomial length differs from m");
      t.products.push_back({left, right, std::move(g), std::move(mono)});
    }
    return t;
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed table: ") + e.what());
  }
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomically(const std::filesystem::path& p, const std::string& text) {
  std::filesystem::path tmp = p;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    out.flush();
    if (!out) throw InvalidArgument("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, p);
}

}  // namespace

Json to_json(const PongTable& t) { return table_json(t, "pong"); }
Json to_json(const AsteroidsTable& t) { return table_json(t, "asteroids"); }

PongTable pong_table_from_json(const Json& j) {
  return table_from<LiftedPermutation>(j, "pong", to_pong, pong_element_from_json);
}

AsteroidsTable asteroids_table_from_json(const Json& j) {
  return table_from<CyclicLiftedPermutation>(j, "asteroids", to_asteroids, asteroids_element_from_json);
}

std::string table_digest(const Json& j) {
  const std::string text = j.dump();
  boost::crc_32_type crc;
  crc.process_bytes(text.data(), text.size());
  std::ostringstream ss;
  ss << std::hex << std::setw(8) << std::setfill('0') << crc.checksum();
  return ss.str();
}

TableCache::TableCache(std::filesystem::path dir, std::ostream* warnings)
    : dir_(std::move(dir)), warnings_(warnings) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path TableCache::path_for(const std::string& algebra, const Context& ctx, int max_disp) const {
  return dir_ / (algebra + "-m" + std::to_string(ctx.m) + "-k" + std::to_string(ctx.k) + "-d" +
                 std::to_string(max_disp) + ".json");
}

template <class Gen, class Parse>
StructureTable<Gen> TableCache::load_or_build(const std::string& algebra, const Context& ctx, int max_disp,
                                              std::vector<Gen> gens, Parse parse) {
  const std::filesystem::path path = path_for(algebra, ctx, max_disp);
  if (std::filesystem::exists(path)) {
    try {
      const Json file = parse_json(slurp(path));
      if (!file.is_object() || !file.contains("format_version") || file["format_version"] != kFormatVersion) {
        throw InvalidArgument("format version differs from " + std::to_string(kFormatVersion));
      }
      const Json& body = file.at("table");
      if (file.at("digest") != table_digest(body)) throw InvalidArgument("checksum mismatch");
      StructureTable<Gen> t = parse(body);
      if (t.context != ctx || t.max_disp != max_disp) throw InvalidArgument("table is for other parameters");
      if (t.generators != gens) throw InvalidArgument("generators differ from a fresh enumeration");
      ++hits_;
      return t;
    } catch (const std::exception& e) {
      if (warnings_) *warnings_ << "warning: ignoring cache file " << path.string() << ": " << e.what() << "\n";
    }
  }
  ++rebuilds_;
  StructureTable<Gen> t = build_structure_table(ctx, max_disp, std::move(gens));
  Json body = to_json(t);
  Json file{{"format_version", kFormatVersion}, {"digest", table_digest(body)}, {"table", std::move(body)}};
  write_atomically(path, dump(file));
  return t;
}

PongTable TableCache::pong(const Context& ctx, int max_disp) {
  const Context c = make_pong_context(ctx.m, ctx.k);
  return load_or_build("pong", c, max_disp, enumerate_generators(c, max_disp), pong_table_from_json);
}

AsteroidsTable TableCache::asteroids(const Context& ctx, int max_disp) {
  const Context c = make_asteroids_context(ctx.m, ctx.k);
  return load_or_build("asteroids", c, max_disp, a_enumerate_generators(c, max_disp),
                       asteroids_table_from_json);
}

}  // namespace pong
