#pragma once

#include "slant/immersion.hpp"

#include <exception>
#include <mutex>
#include <string>
#include <vector>

namespace slant {

// Node grid with nu x nv points including the domain edges.
struct GridSpec {
  int nu = 64;
  int nv = 64;

  static GridSpec parse(const std::string& text);  // "64x64"
  std::string str() const;
  int size() const { return nu * nv; }
};

enum class Exec { Serial, Parallel };

inline double grid_u(const Domain& d, const GridSpec& g, int i) {
  return g.nu == 1 ? 0.5 * (d.u0 + d.u1) : d.u0 + d.width() * i / (g.nu - 1);
}
inline double grid_v(const Domain& d, const GridSpec& g, int j) {
  return g.nv == 1 ? 0.5 * (d.v0 + d.v1) : d.v0 + d.height() * j / (g.nv - 1);
}

// Finite-difference base step: capped grid spacing.
double difference_step(const Domain& d, const GridSpec& g);

// Evaluate fn(i, j, u, v) at every node; result index is i * nv + j.
// Serial is the reference path; Parallel splits rows across OpenMP threads
// and produces identical, position-indexed output.
template <class T, class Fn>
std::vector<T> map_grid(const Domain& d, const GridSpec& g, Fn&& fn,
                        Exec exec = Exec::Parallel) {
  std::vector<T> out(static_cast<size_t>(g.size()));
  if (exec == Exec::Serial) {
    for (int i = 0; i < g.nu; ++i)
      for (int j = 0; j < g.nv; ++j)
        out[static_cast<size_t>(i) * g.nv + j] =
            fn(i, j, grid_u(d, g, i), grid_v(d, g, j));
    return out;
  }
  std::exception_ptr err;
  std::mutex m;
#pragma omp parallel for collapse(2) schedule(static)
  for (int i = 0; i < g.nu; ++i) {
    for (int j = 0; j < g.nv; ++j) {
      try {
        out[static_cast<size_t>(i) * g.nv + j] =
            fn(i, j, grid_u(d, g, i), grid_v(d, g, j));
      } catch (...) {
        std::lock_guard<std::mutex> lock(m);
        if (!err) err = std::current_exception();
      }
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace slant
