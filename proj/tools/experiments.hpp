#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "config.hpp"
#include "report.hpp"

namespace mfunc::cli {

struct Experiment {
  std::string name;
  std::string summary;
  json defaults;  // every accepted key with its default value and JSON type
  std::function<void(const ExperimentConfig&, const std::filesystem::path& out, Report&)> run;
};

const std::vector<Experiment>& experiments();

}  // namespace mfunc::cli
