#include "qrs/report.hpp"

#include <sstream>

#include "json.hpp"

namespace qrs {

std::string Report::to_text() const {
    std::ostringstream os;
    size_t idw = 4, instw = 8;
    for (const auto& e : entries) {
        idw = std::max(idw, e.id.size());
        instw = std::max(instw, e.instance.size());
    }
    os << "suite: " << suite << "\n";
    for (const auto& e : entries) {
        os << (e.pass ? "  ok   " : "  FAIL ");
        os << e.id;
        os << std::string(idw - e.id.size() + 2, ' ');
        os << e.instance;
        if (!e.pass && !e.witness.empty()) {
            os << std::string(instw - e.instance.size() + 2, ' ');
            os << "witness: " << e.witness;
        }
        os << "\n";
    }
    os << (ok() ? "PASS" : "FAIL") << " (" << entries.size() << " checks)\n";
    return os.str();
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["pass"] = ok();
    j["checks"] = entries.size();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        nlohmann::ordered_json je;
        je["id"] = e.id;
        je["instance"] = e.instance;
        je["pass"] = e.pass;
        if (!e.pass) je["witness"] = e.witness;
        arr.push_back(std::move(je));
    }
    j["entries"] = std::move(arr);
    return j.dump(2);
}

}  // namespace qrs
