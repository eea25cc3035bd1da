#pragma once

#include <string>

namespace qgl21 {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;
};

}  // namespace qgl21
