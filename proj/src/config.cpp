#include "qrs/config.hpp"

#include <fstream>
#include <sstream>

#include "qrs/errors.hpp"

namespace qrs {

std::vector<int> parse_lambda(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoi(item, &used));
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
                ++used;
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ConfigError("bad lambda coordinate '" + item + "'");
        }
    }
    if (out.empty()) throw ConfigError("empty lambda");
    return out;
}

Config load_config_file(const std::string& path, Config base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::string stripped;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) stripped += c;
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
        const std::string key = stripped.substr(0, eq);
        const std::string val = stripped.substr(eq + 1);
        try {
            if (key == "type")
                base.type = val;
            else if (key == "height")
                base.height = std::stoi(val);
            else if (key == "depth")
                base.depth = std::stoi(val);
            else if (key == "lambda")
                base.lambda = parse_lambda(val);
            else if (key == "seed")
                base.seed = std::stoul(val);
            else
                throw ConfigError(path + ":" + std::to_string(lineno) + ": unknown key '" +
                                  key + "'");
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception&) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": bad value for '" +
                              key + "'");
        }
    }
    return base;
}

}  // namespace qrs
