#pragma once

// A scalar graph function u sampled on a uniform axis-aligned grid inside one
// of the conformal models, with CSV / JSON readers and writers.
//
// Layout: values are row-major with the last axis fastest, i.e.
//   flat = ((i_0 * counts[1] + i_1) * counts[2] + i_2) ...

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "core/ambient.hpp"
#include "core/smallmat.hpp"

namespace hrsurf {

struct GraphSample {
  ambient::AmbientSpec spec;
  Vec origin;               // coordinate of index (0,...,0)
  Vec spacing;              // grid step per axis, all > 0
  std::vector<int> counts;  // nodes per axis
  Vec values;               // u at every node, row-major

  std::size_t total() const;
  std::size_t flat_index(const std::vector<int>& idx) const;
  std::vector<int> multi_index(std::size_t flat) const;
  Vec point(const std::vector<int>& idx) const;

  // Validates shape consistency and that every node lies in the model domain.
  void validate() const;

  static GraphSample from_function(const ambient::AmbientSpec& spec, const Vec& origin,
                                   const Vec& spacing, const std::vector<int>& counts,
                                   const std::function<double(const Vec&)>& u);
};

void write_sample_csv(const GraphSample& s, std::ostream& out);
void write_sample_json(const GraphSample& s, std::ostream& out);
void write_sample(const GraphSample& s, const std::string& path);  // picks format by extension

GraphSample read_sample_csv(std::istream& in);
GraphSample read_sample_json(std::istream& in);
GraphSample read_sample(const std::string& path);

}  // namespace hrsurf
