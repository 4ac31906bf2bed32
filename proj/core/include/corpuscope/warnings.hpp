#pragma once

#include <string>
#include <vector>

namespace corpuscope {

// Non-fatal diagnostics, collected into the run report.
struct WarningLog {
    std::vector<std::string> messages;
    void add(std::string msg) { messages.push_back(std::move(msg)); }
};

inline void warn(WarningLog* log, std::string msg) {
    if (log) log->add(std::move(msg));
}

}  // namespace corpuscope
