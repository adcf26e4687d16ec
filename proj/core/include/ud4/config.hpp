#pragma once

// Plain-text key/value configuration.
//
//   # comment
//   poly.2.4 = 1 1 0 0 1      # x^4 + x + 1, constant term first
//
// Each `poly.<p>.<a>` entry pins the defining polynomial used for F_{p^a}.
// Unknown keys are rejected so typos do not pass silently.

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ud4/ffield.hpp"

namespace ud4 {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Config {
 public:
  static Config parse(std::istream& in);
  static Config load(const std::string& path);

  void set_poly(std::uint32_t p, std::uint32_t a, std::vector<std::uint32_t> poly);
  std::optional<std::vector<std::uint32_t>> poly_for(std::uint32_t p, std::uint32_t a) const;

  /// FieldCtx::make with the pinned polynomial, if any.
  FieldPtr make_field(std::uint32_t p, std::uint32_t a) const;

 private:
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> polys_;
};

}  // namespace ud4
