#pragma once

// Hot loops with an OpenMP variant and a serial reference. Both produce identical output;
// the serial one exists for testing and for the benchmark comparison.

#include <cstdint>
#include <vector>

namespace wfk::kernels {

enum class Exec { serial, parallel };

struct ClassView {
  const std::uint32_t* mult;  // order × order
  const std::uint32_t* inverse;
  std::size_t order;
  const int* class_of;
  const std::uint32_t* reps;
  std::size_t num_classes;
};

// N[(a*k + b)*k + c] = #{(x, y) in C_a × C_b : xy = rep_c}.
std::vector<std::int64_t> class_structure_constants(const ClassView& g, Exec exec = Exec::parallel);

// Σ over class reps g of |C_g| · Σ_{h in C(g)} #{points fixed by g and h}.
// action is order × points, action[x*points + p] = x·p.
std::int64_t commuting_fixed_point_sum(const ClassView& g, const std::uint32_t* action,
                                       std::size_t points, const std::int64_t* class_sizes,
                                       Exec exec = Exec::parallel);

// Conjugacy class index of every element, by orbit enumeration; classes are numbered in
// order of their smallest element index.
std::vector<int> conjugacy_orbits(const std::uint32_t* mult, const std::uint32_t* inverse,
                                  std::size_t order, Exec exec = Exec::parallel);

}  // namespace wfk::kernels
