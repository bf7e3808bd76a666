#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dunkl/errors.hpp"
#include "dunkl/geometry.hpp"
#include "dunkl/radial.hpp"

namespace dunkl {

class ConfigError : public ArgumentError {
 public:
  explicit ConfigError(const std::string& what) : ArgumentError(what) {}
};

/// Initial data for propagate: gaussian (sigma), bump (radius), zero, or csv (path).
struct DataSpec {
  std::string kind = "zero";
  double sigma = 1.0;
  double radius = 3.0;
  std::string path;
};

struct SweepSpec {
  std::string kind = "wave";  // s_alpha | wave | wave_rank1
  double alpha = 0.0;
  std::string case_label = "c-i";
  std::vector<double> p{2.0};
  double q = 0.0;  // s_alpha only
  std::string line = "q1";
  std::vector<double> t{1.0};
  bool expect_growth = false;
};

struct RunConfig {
  int version = 1;
  int n = 3;
  double gamma = 0.0;
  double r_max = 64.0;
  int grid_n = 4096;
  Grading grading = Grading::uniform;
  double quad_tol = 1e-12;
  int max_panels = 4096;
  double psi_a = 1.0;
  double psi_b = 2.0;
  std::string suite = "identities";
  std::string output_dir = ".";
  std::string transform_input;
  DataSpec f;
  DataSpec g;
  std::vector<double> t_list{0.0};
  std::optional<SweepSpec> sweep;
  std::optional<double> tolerance_override;

  DunklGeometry geometry() const { return DunklGeometry(n, gamma); }
  GridPtr grid() const;
};

inline constexpr int kConfigVersion = 1;

/// Parses and validates a JSON config. Unknown keys, a missing or unsupported "version",
/// and out-of-range values throw ConfigError.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

}  // namespace dunkl
