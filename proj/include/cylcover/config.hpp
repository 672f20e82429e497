#ifndef CYLCOVER_CONFIG_HPP_
#define CYLCOVER_CONFIG_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cylcover/processes.hpp"

namespace cylcover {

enum class ModelKind { kLinesBall, kLinesDisk, kBrownian };

std::string model_name(ModelKind model);
ModelKind parse_model(std::string_view text);

// Directional law descriptors: "uniform", "cone:+1,-1" (d-1 signs) and
// "fixed:0,0,1" (d components, normalized).
DirectionalLaw parse_law(std::string_view text, std::size_t d);
std::string format_law(const DirectionalLaw& law);

// One sweep experiment. The file format is one `key = value` pair per line;
// blank lines and lines starting with '#' are skipped. Accepted keys: d,
// model, law, rho_list, replications, tol, n_steps, master_seed,
// output_path. Any other key is an error.
struct ExperimentConfig {
  std::size_t d = 2;
  ModelKind model = ModelKind::kLinesBall;
  std::optional<std::string> law;  // descriptor, lines models only
  std::vector<double> rho_list;
  std::size_t replications = 1;
  double tol = 1e-4;
  std::optional<std::size_t> n_steps;  // brownian only
  std::uint64_t master_seed = 0;
  std::string output_path;

  DirectionalLaw directional_law() const;
  std::size_t brownian_steps() const { return n_steps.value_or(kDefaultBrownianSteps); }
};

// Parses and validates; throws ConfigError with the offending line.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);
void validate(const ExperimentConfig& config);

}  // namespace cylcover

#endif  // CYLCOVER_CONFIG_HPP_
