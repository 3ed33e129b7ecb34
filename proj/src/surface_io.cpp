#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "goldman/surface.hpp"
#include "json.hpp"

namespace goldman {

namespace {

std::string fmt17(real v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", static_cast<double>(v));
  return buf;
}

void expect_keys(const nlohmann::json& j, const std::set<std::string>& allowed,
                 const char* where) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      raise(Errc::invalid_argument,
            std::string("unknown key '") + it.key() + "' in " + where);
}

SurfaceRep surface_from_json_checked(const std::string& text);

}  // namespace

std::string surface_to_json(const SurfaceRep& rep) {
  // Written by hand so that floats are emitted at exactly 17 significant
  // digits; %.17g round-trips IEEE doubles bit for bit.
  std::ostringstream os;
  os << "{\n  \"kind\": \"" << to_string(rep.kind) << "\",\n  \"params\": ";
  if (rep.kind == SurfaceKind::pants) {
    os << "{\"lengths\": [" << fmt17(rep.params[0]) << ", " << fmt17(rep.params[1]) << ", "
       << fmt17(rep.params[2]) << "]}";
  } else {
    os << "{\"length\": " << fmt17(rep.params[0]) << ", \"twist\": " << fmt17(rep.params[1])
       << "}";
  }
  os << ",\n  \"generators\": [\n";
  for (std::size_t i = 0; i < rep.generators.size(); ++i) {
    const MoebiusMap& g = rep.generators[i];
    os << "    [" << fmt17(g.a) << ", " << fmt17(g.b) << ", " << fmt17(g.c) << ", "
       << fmt17(g.d) << "]" << (i + 1 < rep.generators.size() ? "," : "") << "\n";
  }
  os << "  ],\n  \"distinguished_simple\": ";
  if (rep.distinguished_simple)
    os << *rep.distinguished_simple;
  else
    os << "null";
  os << "\n}\n";
  return os.str();
}

SurfaceRep surface_from_json(const std::string& text) {
  try {
    return surface_from_json_checked(text);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    raise(Errc::invalid_argument, std::string("malformed surface file: ") + e.what());
  }
}

namespace {

SurfaceRep surface_from_json_checked(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  expect_keys(j, {"kind", "params", "generators", "distinguished_simple"}, "surface file");
  SurfaceRep rep;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "pants")
    rep.kind = SurfaceKind::pants;
  else if (kind == "holed-torus")
    rep.kind = SurfaceKind::holed_torus;
  else
    raise(Errc::invalid_argument, "kind must be 'pants' or 'holed-torus'");

  const nlohmann::json& params = j.at("params");
  if (rep.kind == SurfaceKind::pants) {
    expect_keys(params, {"lengths"}, "params");
    for (const auto& v : params.at("lengths")) rep.params.push_back(v.get<double>());
  } else {
    expect_keys(params, {"length", "twist"}, "params");
    rep.params = {params.at("length").get<double>(), params.at("twist").get<double>()};
  }

  for (const auto& row : j.at("generators")) {
    if (!row.is_array() || row.size() != 4)
      raise(Errc::invalid_argument, "each generator must be a 4-entry row");
    rep.generators.push_back(MoebiusMap{row[0].get<double>(), row[1].get<double>(),
                                        row[2].get<double>(), row[3].get<double>(), 0});
  }

  const nlohmann::json& ds = j.at("distinguished_simple");
  if (ds.is_null())
    rep.distinguished_simple = std::nullopt;
  else
    rep.distinguished_simple = ds.get<int>();

  validate_surface(rep);
  return rep;
}

}  // namespace

void save_surface(const SurfaceRep& rep, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::invalid_argument, "cannot open '" + path + "' for writing");
  out << surface_to_json(rep);
}

SurfaceRep load_surface(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::invalid_argument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return surface_from_json(ss.str());
}

}  // namespace goldman
