// Wall-time comparison of the OpenMP grid scan against the single-thread
// reference, over a few grid sizes. Results must match exactly; the table
// reports the speedup.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

#include "gatetime/search.hpp"

using namespace gatetime;

namespace {

double seconds_of(const std::function<SearchResult()>& fn,
                  SearchResult& out) {
  const auto start = std::chrono::steady_clock::now();
  out = fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

void bench_case(const std::string& name, const SearchConfig& cfg,
                bool rotation) {
  SearchResult serial = rotation ? search_min_rotation_time_serial(cfg)
                                 : search_min_gate_time_serial(cfg);
  SearchResult parallel = serial;
  const double t_serial = seconds_of(
      [&] {
        return rotation ? search_min_rotation_time_serial(cfg)
                        : search_min_gate_time_serial(cfg);
      },
      serial);
  const double t_parallel = seconds_of(
      [&] {
        return rotation ? search_min_rotation_time(cfg)
                        : search_min_gate_time(cfg);
      },
      parallel);
  const bool identical =
      serial.found == parallel.found &&
      serial.min_time_found == parallel.min_time_found &&
      serial.evaluations == parallel.evaluations &&
      serial.best_params.e1() == parallel.best_params.e1() &&
      serial.best_params.e2() == parallel.best_params.e2() &&
      serial.best_params.phi1() == parallel.best_params.phi1() &&
      serial.best_params.phi2() == parallel.best_params.phi2();
  std::printf("%-32s %12lld %9.3fs %9.3fs %7.2fx   %s\n", name.c_str(),
              parallel.evaluations, t_serial, t_parallel,
              t_serial / t_parallel, identical ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
  const double pi = std::numbers::pi;
  std::printf("%-32s %12s %10s %10s %8s\n", "case", "evals", "serial",
              "parallel", "speedup");

  {
    SearchConfig cfg =
        SearchConfig::for_gate(GatePhase(pi / 2.0), EnergyBudget(1.0));
    cfg.grid_e = 32;
    cfg.grid_phi1 = 17;
    cfg.grid_phi2 = 16;
    bench_case("gate theta=pi/2 (32/17/16)", cfg, false);
  }
  {
    SearchConfig cfg =
        SearchConfig::for_gate(GatePhase(pi / 2.0), EnergyBudget(1.0));
    bench_case("gate theta=pi/2 (64/32/32)", cfg, false);
  }
  {
    SearchConfig cfg =
        SearchConfig::for_gate(GatePhase(0.3), EnergyBudget(1.0));
    bench_case("gate theta=0.3 (64/32/32)", cfg, false);
  }
  {
    SearchConfig cfg = SearchConfig::for_rotation(
        pi / 4.0, QubitState::basis1(), EnergyBudget(1.0));
    cfg.grid_e = 32;
    cfg.grid_phi1 = 17;
    cfg.grid_phi2 = 16;
    bench_case("rotation alpha=pi/4 (32/17/16)", cfg, true);
  }
  {
    SearchConfig cfg = SearchConfig::for_rotation(
        pi / 8.0, QubitState::basis1(), EnergyBudget(1.0));
    bench_case("rotation alpha=pi/8 (64/32/32)", cfg, true);
  }
  return 0;
}
