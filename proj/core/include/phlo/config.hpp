#pragma once

#include <stdexcept>
#include <string>

#include "phlo/solutions.hpp"

// key = value configuration with '#' comments. Unknown keys are rejected so
// typos surface as errors instead of silently running defaults.

namespace phlo {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SolutionConfig parse_config_text(const std::string& text, const std::string& origin);
SolutionConfig parse_config_file(const std::string& path);

// The accepted keys, one per line, for --help style output.
std::string config_key_reference();

}  // namespace phlo
