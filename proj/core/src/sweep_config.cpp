#include "compnet/sweep_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <string_view>

#include "compnet/errors.hpp"

namespace compnet {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view value) {
  std::vector<std::string_view> items;
  std::size_t start = 0;
  for (;;) {
    const auto comma = value.find(',', start);
    items.push_back(trim(value.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return items;
}

std::uint64_t parse_u64(std::string_view text, std::string_view key, std::size_t line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError(std::string(key) + ": expected a non-negative integer, got '" +
                         std::string(text) + "'",
                     line);
  }
  return value;
}

double parse_double(std::string_view text, std::string_view key, std::size_t line) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    throw ParseError(std::string(key) + ": expected a number, got '" + std::string(text) + "'",
                     line);
  }
  return value;
}

template <typename T>
std::vector<T> sorted_unique(std::vector<T> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

}  // namespace

bool SweepConfig::uses(Model model) const {
  return std::find(models.begin(), models.end(), model) != models.end();
}

void SweepConfig::validate() const {
  std::vector<std::string> problems;
  if (samples < 1) problems.push_back("samples must be at least 1");
  if (models.empty()) problems.push_back("no models selected");
  if (n_values.empty()) problems.push_back("n_values is empty");
  if (s_values.empty()) problems.push_back("s_values is empty");
  if (uses(Model::kScaleFree) && alpha_values.empty()) {
    problems.push_back("alpha_values is empty but scale_free is selected");
  }
  if (uses(Model::kSmallWorld) && p_values.empty()) {
    problems.push_back("p_values is empty but small_world is selected");
  }
  for (double a : alpha_values) {
    if (!(a > 0.0)) problems.push_back("alpha " + format_real(a) + " is not positive");
  }
  for (double p : p_values) {
    if (!(p >= 0.0 && p <= 1.0)) problems.push_back("p " + format_real(p) + " is outside [0, 1]");
  }
  std::string bad_pairs;
  for (std::uint64_t s : s_values) {
    if (s == 0) {
      problems.push_back("S must be at least 1");
      continue;
    }
    for (std::uint64_t n : n_values) {
      if (n < 2 * s + 1) {
        if (!bad_pairs.empty()) bad_pairs += ", ";
        bad_pairs += "(n=" + std::to_string(n) + ", S=" + std::to_string(s) + ")";
      }
    }
  }
  if (!bad_pairs.empty()) problems.push_back("pairs violating n >= 2S+1: " + bad_pairs);

  if (!problems.empty()) {
    std::string message = "invalid sweep config:";
    for (const auto& p : problems) message += "\n  " + p;
    throw ParameterError(message);
  }
}

SweepConfig parse_sweep_config(std::istream& in) {
  SweepConfig config;
  std::set<std::string, std::less<>> seen;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key=value", line_no);
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!seen.emplace(key).second) {
      throw ParseError("duplicate key '" + std::string(key) + "'", line_no);
    }

    if (key == "n_values" || key == "s_values") {
      auto& target = key == "n_values" ? config.n_values : config.s_values;
      target.clear();
      for (auto item : split_list(value)) target.push_back(parse_u64(item, key, line_no));
    } else if (key == "alpha_values" || key == "p_values") {
      auto& target = key == "alpha_values" ? config.alpha_values : config.p_values;
      target.clear();
      if (value.empty()) continue;
      for (auto item : split_list(value)) target.push_back(parse_double(item, key, line_no));
    } else if (key == "samples") {
      config.samples = parse_u64(value, key, line_no);
    } else if (key == "base_seed") {
      config.base_seed = parse_u64(value, key, line_no);
    } else if (key == "models") {
      config.models.clear();
      for (auto item : split_list(value)) {
        const auto model = parse_model(item);
        if (!model) throw ParseError("unknown model '" + std::string(item) + "'", line_no);
        config.models.push_back(*model);
      }
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", line_no);
    }
  }
  config.validate();
  return config;
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file " + path, 0);
  return parse_sweep_config(in);
}

std::string format_sweep_config(const SweepConfig& config) {
  auto join = [](const auto& values, auto fmt) {
    std::string out;
    for (const auto& v : values) {
      if (!out.empty()) out += ',';
      out += fmt(v);
    }
    return out;
  };
  auto integer = [](std::uint64_t v) { return std::to_string(v); };
  auto name = [](Model m) { return std::string(model_name(m)); };

  std::ostringstream out;
  out << "n_values=" << join(config.n_values, integer) << '\n'
      << "s_values=" << join(config.s_values, integer) << '\n'
      << "alpha_values=" << join(config.alpha_values, format_real) << '\n'
      << "p_values=" << join(config.p_values, format_real) << '\n'
      << "samples=" << config.samples << '\n'
      << "base_seed=" << config.base_seed << '\n'
      << "models=" << join(config.models, name) << '\n';
  return out.str();
}

std::vector<ModelSpec> build_design(const SweepConfig& config) {
  config.validate();
  const auto ns = sorted_unique(config.n_values);
  const auto ss = sorted_unique(config.s_values);
  const auto alphas = sorted_unique(config.alpha_values);
  const auto ps = sorted_unique(config.p_values);

  std::vector<ModelSpec> design;
  for (std::uint64_t n : ns) {
    for (std::uint64_t s : ss) {
      if (config.uses(Model::kRandom)) design.push_back(ModelSpec::random(n, s));
      if (config.uses(Model::kScaleFree)) {
        for (double a : alphas) design.push_back(ModelSpec::scale_free(n, s, a));
      }
      if (config.uses(Model::kSmallWorld)) {
        for (double p : ps) design.push_back(ModelSpec::small_world(n, s, p));
      }
    }
  }
  std::sort(design.begin(), design.end(), spec_less);
  return design;
}

}  // namespace compnet
