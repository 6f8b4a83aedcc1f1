#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qrs {

/// Run configuration shared by the CLI and the verification suites.
/// Precedence: command-line flags > config file > these defaults.
struct Config {
    std::string type = "A1";
    int height = 3;
    int depth = 4;
    std::optional<std::vector<int>> lambda;  // highest weight, root coordinates
    unsigned long seed = 12345;
    bool json = false;
};

/// key=value lines; keys: type, height, depth, lambda (comma ints), seed.
/// '#' starts a comment.  ConfigError on unknown keys or bad values.
Config load_config_file(const std::string& path, Config base = {});

std::vector<int> parse_lambda(const std::string& text);  // "1,-2,0"

}  // namespace qrs
