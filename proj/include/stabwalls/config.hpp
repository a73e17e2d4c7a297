#pragma once

#include "stabwalls/rational.hpp"

#include <optional>
#include <string>

namespace stabwalls {

/// Defaults shared by the CLI subcommands; command-line flags override them.
struct Config {
  Rational s{1, 3};
  Rational tolerance{1, 1024};
  long rank_bound = 3;
};

/// Reads the flat TOML subset used for config files: `key = value` lines,
/// '#' comments, values as bare integers or quoted rationals ("1/3").
/// Unknown keys and malformed lines raise ParseError.
Config parse_config(const std::string& text, Config base = {});
Config load_config_file(const std::string& path, Config base = {});

/// The file named by STABWALLS_CONFIG, or defaults when unset.
Config config_from_env();

}  // namespace stabwalls
