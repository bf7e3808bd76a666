#pragma once

#include <string>
#include <vector>

#include "dunkl/harness.hpp"
#include "dunkl/radial.hpp"
#include "dunkl/rank1.hpp"

namespace dunkl {

/// Writes content to path.tmp and renames it over path.
void write_file_atomic(const std::string& path, const std::string& content);

/// %.15g in the C locale.
std::string format_number(double x);

/// Columns r,re,im on the grid's unique nodes.
std::string profile_csv(const RadialProfile& f);
/// Columns x,re,im on [-r_max, r_max], ascending.
std::string rank1_csv(const Rank1Function& f);
/// Columns p,q,family,lambda,t,ratio.
std::string sweep_csv(const SweepResult& s);

struct ProfileSamples {
  std::vector<double> r;
  std::vector<cplx> values;
};

/// Parses an r,re,im CSV. Throws ArgumentError on an empty file, a bad header or row,
/// non-finite values, negative r, or r that is not strictly increasing.
ProfileSamples parse_profile_csv(const std::string& text);
ProfileSamples read_profile_csv(const std::string& path);

/// Samples onto grid: exact copy when the rows are the grid's unique nodes, otherwise
/// 4-point Lagrange interpolation, zero beyond the last row.
RadialProfile profile_from_samples(const ProfileSamples& s, const GridPtr& grid);

}  // namespace dunkl
