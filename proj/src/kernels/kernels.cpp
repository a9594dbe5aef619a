#include "wfk/kernels/kernels.hpp"

#include <omp.h>

namespace wfk::kernels {

namespace {

void structure_row(const ClassView& g, std::size_t c, std::int64_t* out) {
  const std::size_t k = g.num_classes;
  const std::uint32_t z = g.reps[c];
  for (std::size_t x = 0; x < g.order; ++x) {
    std::uint32_t y = g.mult[g.inverse[x] * g.order + z];
    std::size_t a = g.class_of[x];
    std::size_t b = g.class_of[y];
    out[(a * k + b) * k + c] += 1;
  }
}

std::int64_t fixed_sum_for_class(const ClassView& g, const std::uint32_t* action, std::size_t points,
                                 std::size_t c) {
  const std::uint32_t x = g.reps[c];
  std::int64_t total = 0;
  for (std::size_t h = 0; h < g.order; ++h) {
    if (g.mult[x * g.order + h] != g.mult[h * g.order + x]) continue;
    for (std::size_t p = 0; p < points; ++p) {
      if (action[x * points + p] == p && action[h * points + p] == p) ++total;
    }
  }
  return total;
}

}  // namespace

std::vector<std::int64_t> class_structure_constants(const ClassView& g, Exec exec) {
  const std::size_t k = g.num_classes;
  std::vector<std::int64_t> n(k * k * k, 0);
  if (exec == Exec::serial) {
    for (std::size_t c = 0; c < k; ++c) structure_row(g, c, n.data());
    return n;
  }
  // Each c writes a disjoint set of entries.
#pragma omp parallel for schedule(dynamic)
  for (std::size_t c = 0; c < k; ++c) {
    structure_row(g, c, n.data());
  }
  return n;
}

std::int64_t commuting_fixed_point_sum(const ClassView& g, const std::uint32_t* action,
                                       std::size_t points, const std::int64_t* class_sizes,
                                       Exec exec) {
  const std::size_t k = g.num_classes;
  std::vector<std::int64_t> per(k, 0);
  if (exec == Exec::serial) {
    for (std::size_t c = 0; c < k; ++c) per[c] = fixed_sum_for_class(g, action, points, c);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t c = 0; c < k; ++c) {
      per[c] = fixed_sum_for_class(g, action, points, c);
    }
  }
  std::int64_t total = 0;
  for (std::size_t c = 0; c < k; ++c) total += class_sizes[c] * per[c];
  return total;
}

std::vector<int> conjugacy_orbits(const std::uint32_t* mult, const std::uint32_t* inverse,
                                  std::size_t order, Exec exec) {
  // Smallest element of each orbit labels it; computed independently per element.
  std::vector<std::uint32_t> least(order);
  auto orbit_min = [&](std::size_t x) {
    std::uint32_t best = static_cast<std::uint32_t>(x);
    for (std::size_t h = 0; h < order; ++h) {
      std::uint32_t y = mult[mult[h * order + x] * order + inverse[h]];
      if (y < best) best = y;
    }
    return best;
  };
  if (exec == Exec::serial) {
    for (std::size_t x = 0; x < order; ++x) least[x] = orbit_min(x);
  } else {
#pragma omp parallel for schedule(static)
    for (std::size_t x = 0; x < order; ++x) {
      least[x] = orbit_min(x);
    }
  }
  std::vector<int> label(order, -1);
  std::vector<int> cls(order);
  int next = 0;
  for (std::size_t x = 0; x < order; ++x) {
    if (label[least[x]] < 0) label[least[x]] = next++;
    cls[x] = label[least[x]];
  }
  return cls;
}

}  // namespace wfk::kernels
