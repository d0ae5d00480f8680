#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "compnet/model_spec.hpp"

namespace compnet {

struct SweepConfig {
  std::vector<std::uint64_t> n_values;
  std::vector<std::uint64_t> s_values;  // S, and Nei for small-world
  std::vector<double> alpha_values;
  std::vector<double> p_values;
  std::uint64_t samples = 1;
  std::uint64_t base_seed = 0;
  std::vector<Model> models{Model::kRandom, Model::kScaleFree, Model::kSmallWorld};

  bool uses(Model model) const;

  // Throws ParameterError naming every offending field or (n, S) pair.
  void validate() const;

  friend bool operator==(const SweepConfig&, const SweepConfig&) = default;
};

// Flat key=value text, one key per line, list values comma-separated, '#'
// starts a comment. Keys: n_values, s_values, alpha_values, p_values, samples,
// base_seed, models. Throws ParseError with the line number on malformed input.
SweepConfig parse_sweep_config(std::istream& in);
SweepConfig load_sweep_config(const std::string& path);

// The same key=value lines parse_sweep_config reads.
std::string format_sweep_config(const SweepConfig& config);

// Scale-free: n x S x alpha. Small-world: n x S x p. Random: one per (n, S).
// Sorted by (model, n, S, alpha, p); duplicate list entries collapse.
std::vector<ModelSpec> build_design(const SweepConfig& config);

}  // namespace compnet
