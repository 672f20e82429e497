#include "cylcover/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "cylcover/errors.hpp"

namespace cylcover {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(std::string_view s, std::string_view what) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ConfigError("invalid number for " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  s = trim(s);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ConfigError("invalid unsigned integer for " + std::string(what) + ": '" +
                      std::string(s) + "'");
  }
  return v;
}

const std::set<std::string, std::less<>> kKeys = {
    "d", "model", "law", "rho_list", "replications", "tol", "n_steps", "master_seed",
    "output_path"};
const std::set<std::string, std::less<>> kRequired = {"d",   "model",      "rho_list",
                                                      "replications", "tol", "master_seed"};

}  // namespace

std::string model_name(ModelKind model) {
  switch (model) {
    case ModelKind::kLinesBall: return "lines-ball";
    case ModelKind::kLinesDisk: return "lines-disk";
    case ModelKind::kBrownian: return "brownian";
  }
  return "unknown";
}

ModelKind parse_model(std::string_view text) {
  text = trim(text);
  if (text == "lines-ball") return ModelKind::kLinesBall;
  if (text == "lines-disk") return ModelKind::kLinesDisk;
  if (text == "brownian") return ModelKind::kBrownian;
  throw ConfigError("unknown model '" + std::string(text) +
                    "' (expected lines-ball, lines-disk or brownian)");
}

DirectionalLaw parse_law(std::string_view text, std::size_t d) {
  text = trim(text);
  if (text == "uniform") return UniformHemisphere{};
  const std::size_t colon = text.find(':');
  const std::string_view head = trim(text.substr(0, colon));
  if (colon == std::string_view::npos) {
    throw ConfigError("unknown directional law '" + std::string(text) + "'");
  }
  const auto parts = split(text.substr(colon + 1), ',');
  try {
    if (head == "cone") {
      if (parts.size() != d - 1) throw ConfigError("cone law needs d-1 signs");
      std::vector<int> z;
      for (std::string_view p : parts) {
        const double v = parse_double(p, "cone sign");
        if (v != 1.0 && v != -1.0) throw ConfigError("cone signs must be +1 or -1");
        z.push_back(static_cast<int>(v));
      }
      return ConeRestricted{OrthantCone(std::move(z))};
    }
    if (head == "fixed") {
      if (parts.size() != d) throw ConfigError("fixed law needs d components");
      std::vector<double> s;
      for (std::string_view p : parts) s.push_back(parse_double(p, "direction component"));
      return FixedDirection{Direction(std::move(s))};
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid directional law: ") + e.what());
  }
  throw ConfigError("unknown directional law '" + std::string(text) + "'");
}

std::string format_law(const DirectionalLaw& law) {
  std::ostringstream os;
  std::visit(
      [&](const auto& l) {
        using L = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<L, UniformHemisphere>) {
          os << "uniform";
        } else if constexpr (std::is_same_v<L, ConeRestricted>) {
          os << "cone:";
          for (std::size_t i = 0; i < l.cone.signs().size(); ++i) {
            os << (i ? "," : "") << (l.cone[i] > 0 ? "+1" : "-1");
          }
        } else {
          os.precision(17);
          os << "fixed:";
          for (std::size_t i = 0; i < l.dir.dim(); ++i) os << (i ? "," : "") << l.dir[i];
        }
      },
      law);
  return os.str();
}

DirectionalLaw ExperimentConfig::directional_law() const {
  return law ? parse_law(*law, d) : DirectionalLaw{UniformHemisphere{}};
}

void validate(const ExperimentConfig& c) {
  if (c.d < 2) throw ConfigError("d must be >= 2");
  if (c.rho_list.empty()) throw ConfigError("rho_list must not be empty");
  for (std::size_t i = 0; i < c.rho_list.size(); ++i) {
    const double rho = c.rho_list[i];
    if (!(rho > 1.0) || !std::isfinite(rho)) {
      throw ConfigError("rho_list entries must be finite and > 1 (normalization uses log rho)");
    }
    if (i > 0 && !(rho > c.rho_list[i - 1])) {
      throw ConfigError("rho_list must be strictly increasing");
    }
  }
  if (c.replications < 1) throw ConfigError("replications must be >= 1");
  if (!(c.tol > 0.0) || !std::isfinite(c.tol)) throw ConfigError("tol must be positive");
  if (c.model == ModelKind::kBrownian) {
    if (c.law) throw ConfigError("model=brownian does not accept a law");
    if (c.n_steps && *c.n_steps < 1) throw ConfigError("n_steps must be >= 1");
  } else {
    if (c.n_steps) throw ConfigError("n_steps applies to model=brownian only");
    if (c.law) (void)parse_law(*c.law, c.d);
  }
}

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig c;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!kKeys.contains(key)) {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    if (!seen.insert(key).second) {
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
    if (key == "d") {
      c.d = parse_uint(value, key);
    } else if (key == "model") {
      c.model = parse_model(value);
    } else if (key == "law") {
      c.law = std::string(value);
    } else if (key == "rho_list") {
      for (std::string_view p : split(value, ',')) c.rho_list.push_back(parse_double(p, key));
    } else if (key == "replications") {
      c.replications = parse_uint(value, key);
    } else if (key == "tol") {
      c.tol = parse_double(value, key);
    } else if (key == "n_steps") {
      c.n_steps = parse_uint(value, key);
    } else if (key == "master_seed") {
      c.master_seed = parse_uint(value, key);
    } else if (key == "output_path") {
      c.output_path = std::string(value);
    }
  }
  for (const std::string& key : kRequired) {
    if (!seen.contains(key)) throw ConfigError("missing required key '" + key + "'");
  }
  validate(c);
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IOFailure("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace cylcover
