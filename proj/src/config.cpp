#include "percolab/config.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "double_text.hpp"
#include "percolab/version.hpp"

namespace percolab {

namespace {

std::string trim(const std::string& s) {
  const size_t begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const size_t end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw std::invalid_argument("config line " + std::to_string(line_no) + ": " + what);
}

int64_t to_int(const std::string& value, int line_no) {
  size_t used = 0;
  int64_t v = 0;
  try {
    v = std::stoll(value, &used);
  } catch (const std::exception&) {
    fail(line_no, "expected an integer, got '" + value + "'");
  }
  if (used != value.size()) fail(line_no, "trailing characters after integer '" + value + "'");
  return v;
}

uint64_t to_uint(const std::string& value, int line_no) {
  if (!value.empty() && value[0] == '-') fail(line_no, "expected a nonnegative integer");
  size_t used = 0;
  uint64_t v = 0;
  try {
    v = std::stoull(value, &used);
  } catch (const std::exception&) {
    fail(line_no, "expected an integer, got '" + value + "'");
  }
  if (used != value.size()) fail(line_no, "trailing characters after integer '" + value + "'");
  return v;
}

double to_double(const std::string& value, int line_no) {
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    fail(line_no, "expected a number, got '" + value + "'");
  }
  if (used != value.size()) fail(line_no, "trailing characters after number '" + value + "'");
  return v;
}

BoundaryMode to_mode(const std::string& value, int line_no) {
  if (value == "full-perimeter" || value == "full") return BoundaryMode::kFullPerimeter;
  if (value == "bottom-edge" || value == "bottom") return BoundaryMode::kBottomEdge;
  fail(line_no, "boundary_mode must be full-perimeter or bottom-edge, got '" + value + "'");
}

const char* mode_name(BoundaryMode mode) {
  return mode == BoundaryMode::kBottomEdge ? "bottom-edge" : "full-perimeter";
}

}  // namespace

LatticeSpec RunConfig::lattice() const {
  LatticeSpec spec{width, height, p, anchor1_col, anchor2_col};
  validate(spec);
  return spec;
}

RunConfig parse_config(std::istream& in) {
  RunConfig config;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const size_t eq = stripped.find('=');
    if (eq == std::string::npos) fail(line_no, "expected key = value");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) fail(line_no, "empty key");
    if (value.empty()) fail(line_no, "empty value for key '" + key + "'");

    if (key == "width") {
      config.width = static_cast<int>(to_int(value, line_no));
    } else if (key == "height") {
      config.height = static_cast<int>(to_int(value, line_no));
    } else if (key == "p") {
      config.p = to_double(value, line_no);
    } else if (key == "anchor1_col") {
      config.anchor1_col = static_cast<int>(to_int(value, line_no));
    } else if (key == "anchor2_col") {
      config.anchor2_col = static_cast<int>(to_int(value, line_no));
    } else if (key == "samples") {
      config.samples = to_uint(value, line_no);
    } else if (key == "seed") {
      config.seed = to_uint(value, line_no);
    } else if (key == "threads") {
      config.threads = static_cast<int>(to_int(value, line_no));
    } else if (key == "batches") {
      config.batches = static_cast<int>(to_int(value, line_no));
    } else if (key == "mask_radius") {
      config.mask_radius = static_cast<int>(to_int(value, line_no));
    } else if (key == "alt_mask_radius") {
      config.alt_mask_radius = static_cast<int>(to_int(value, line_no));
    } else if (key == "sigma_threshold") {
      config.sigma_threshold = to_double(value, line_no);
    } else if (key == "abs_tolerance") {
      config.abs_tolerance = to_double(value, line_no);
    } else if (key == "boundary_mode") {
      config.boundary_mode = to_mode(value, line_no);
    } else if (key == "out_dir") {
      config.out_dir = value;
    } else if (key == "version") {
      // Accepted so manifests load back; the value is informational.
    } else {
      fail(line_no, "unknown key '" + key + "'");
    }
  }
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  return parse_config(in);
}

uint64_t resolved_seed(const RunConfig& config) {
  if (config.seed) return *config.seed;
  if (const char* env = std::getenv("PERCOLAB_SEED")) {
    const std::string value(env);
    if (value.empty() || value[0] == '-') {
      throw std::invalid_argument("PERCOLAB_SEED must be a nonnegative integer");
    }
    size_t used = 0;
    uint64_t v = 0;
    try {
      v = std::stoull(value, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("PERCOLAB_SEED must be a nonnegative integer");
    }
    if (used != value.size()) {
      throw std::invalid_argument("PERCOLAB_SEED must be a nonnegative integer");
    }
    return v;
  }
  return 1;
}

void write_manifest(std::ostream& out, const RunConfig& config, uint64_t seed_used) {
  out << "# percolab run manifest; loadable as a config for an identical rerun\n";
  out << "version = " << kVersion << '\n';
  out << "width = " << config.width << '\n';
  out << "height = " << config.height << '\n';
  out << "p = " << double_text(config.p) << '\n';
  out << "anchor1_col = " << config.anchor1_col << '\n';
  out << "anchor2_col = " << config.anchor2_col << '\n';
  out << "samples = " << config.samples << '\n';
  out << "seed = " << seed_used << '\n';
  out << "threads = " << config.threads << '\n';
  out << "batches = " << config.batches << '\n';
  out << "mask_radius = " << config.mask_radius << '\n';
  out << "alt_mask_radius = " << config.alt_mask_radius << '\n';
  out << "sigma_threshold = " << double_text(config.sigma_threshold) << '\n';
  out << "abs_tolerance = " << double_text(config.abs_tolerance) << '\n';
  out << "boundary_mode = " << mode_name(config.boundary_mode) << '\n';
  out << "out_dir = " << config.out_dir << '\n';
}

void write_manifest(const std::string& path, const RunConfig& config, uint64_t seed_used) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_manifest(out, config, seed_used);
}

}  // namespace percolab
