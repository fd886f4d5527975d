#pragma once

#include <string>

#include "config.hpp"
#include "output.hpp"

namespace cli {

RunOutput run_command(const std::string& command, const Resolved& cfg);

}  // namespace cli
