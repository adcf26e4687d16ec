#include "ud4/config.hpp"

#include <fstream>
#include <sstream>

namespace ud4 {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint32_t parse_uint(const std::string& s, int line) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9) {
    throw ConfigError("line " + std::to_string(line) + ": expected a non-negative integer, got '" + s + "'");
  }
  return static_cast<std::uint32_t>(std::stoul(s));
}

}  // namespace

Config Config::parse(std::istream& in) {
  Config cfg;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(line) + ": expected key = value");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));

    std::vector<std::string> parts;
    std::stringstream ks(key);
    for (std::string part; std::getline(ks, part, '.');) parts.push_back(part);
    if (parts.size() != 3 || parts[0] != "poly") {
      throw ConfigError("line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
    const std::uint32_t p = parse_uint(parts[1], line);
    const std::uint32_t a = parse_uint(parts[2], line);
    std::vector<std::uint32_t> poly;
    std::stringstream vs(value);
    for (std::string tok; vs >> tok;) poly.push_back(parse_uint(tok, line));
    if (poly.empty()) throw ConfigError("line " + std::to_string(line) + ": empty polynomial");
    cfg.set_poly(p, a, std::move(poly));
  }
  return cfg;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse(in);
}

void Config::set_poly(std::uint32_t p, std::uint32_t a, std::vector<std::uint32_t> poly) {
  polys_[{p, a}] = std::move(poly);
}

std::optional<std::vector<std::uint32_t>> Config::poly_for(std::uint32_t p, std::uint32_t a) const {
  auto it = polys_.find({p, a});
  if (it == polys_.end()) return std::nullopt;
  return it->second;
}

FieldPtr Config::make_field(std::uint32_t p, std::uint32_t a) const { return FieldCtx::make(p, a, poly_for(p, a)); }

}  // namespace ud4
