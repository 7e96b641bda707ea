#include <exception>

#include "cvq/experiments.hpp"

namespace cvq {

namespace {

SweepRecord evaluate_point(const Scenario& scenario, std::size_t flat) {
  try {
    return run_point(scenario.resolve(flat));
  } catch (const std::exception& e) {
    SweepRecord r;
    r.family = scenario.base.family;
    r.error = e.what();
    return r;
  }
}

}  // namespace

std::vector<SweepRecord> evaluate_grid_serial(const Scenario& scenario) {
  const std::size_t n = scenario.point_count();
  std::vector<SweepRecord> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = evaluate_point(scenario, i);
  return out;
}

std::vector<SweepRecord> evaluate_grid_parallel(const Scenario& scenario) {
  const long n = static_cast<long>(scenario.point_count());
  std::vector<SweepRecord> out(static_cast<std::size_t>(n));
  // Points differ in cost (Fock cutoff grows with <N>), hence dynamic chunks.
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = evaluate_point(scenario, static_cast<std::size_t>(i));
  }
  return out;
}

}  // namespace cvq
