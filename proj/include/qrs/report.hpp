#pragma once

#include <string>
#include <vector>

namespace qrs {

/// One verified identity instance.  A failing entry always carries a witness
/// string that re-evaluates to a nonzero object.
struct Entry {
    std::string id;        // identity name, e.g. "projector.annihilate.left"
    std::string instance;  // parameters, e.g. "beta=(1,1) i=2"
    bool pass = false;
    std::string witness;   // empty on pass
};

struct Report {
    std::string suite;
    std::vector<Entry> entries;

    bool ok() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
    void add(std::string id, std::string instance, bool pass, std::string witness = "") {
        entries.push_back({std::move(id), std::move(instance), pass,
                           pass ? std::string() : std::move(witness)});
    }
    void merge(const Report& o) {
        for (const auto& e : o.entries) entries.push_back(e);
    }

    std::string to_text() const;
    std::string to_json() const;
};

}  // namespace qrs
