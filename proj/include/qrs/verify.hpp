#pragma once

#include "qrs/config.hpp"
#include "qrs/report.hpp"

namespace qrs {

/// Suite names accepted by run_suite, in canonical execution order.
std::vector<std::string> suite_names();

/// Run one verification suite ("all" concatenates every suite in canonical
/// order).  ConfigError for unknown names or broken configs.
Report run_suite(const std::string& name, const Config& cfg);

}  // namespace qrs
