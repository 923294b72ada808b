// Copyright (c) 2026 the nilspec authors.
// SPDX-License-Identifier: MIT
//
// Timing harness for the three parallel kernels against their serial
// references: character-lattice enumeration, windowed spectrum assembly,
// and the constant-eta family sweep.  Results are checked for equality
// before the timings are reported, so a speedup is never bought with a
// wrong answer.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "nilspec/eta.hpp"
#include "nilspec/exec.hpp"
#include "nilspec/manifold.hpp"
#include "nilspec/orbits.hpp"
#include "nilspec/spectrum.hpp"

namespace {

double time_ms(const std::function<void()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms,
            std::size_t items, bool equal) {
  std::printf("%-18s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   items %8zu   results %s\n",
              name, serial_ms, parallel_ms,
              parallel_ms > 0.0 ? serial_ms / parallel_ms : 0.0, items,
              equal ? "equal" : "DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial-vs-parallel benchmark for the enumeration kernels"};
  double scale = 1.0;
  app.add_option("--scale", scale, "work multiplier (default 1)")
      ->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  std::printf("worker threads: %d (cap with NILSPEC_THREADS)\n\n",
              nilspec::worker_count());

  nilspec::Heisenberg3 h;  // defaults: unit rectangular data, trivial spin
  h = nilspec::validate(h);

  {
    const double bound = 160.0 * scale;
    std::vector<nilspec::ToroidalOrbit> serial, parallel;
    const double ts = time_ms([&] {
      serial = nilspec::toroidal_orbits(h, bound, false, nilspec::Exec::Serial);
    });
    const double tp = time_ms([&] {
      parallel = nilspec::toroidal_orbits(h, bound, false, nilspec::Exec::Parallel);
    });
    bool equal = serial.size() == parallel.size();
    for (std::size_t i = 0; equal && i < serial.size(); ++i) {
      equal = serial[i].j1 == parallel[i].j1 && serial[i].j2 == parallel[i].j2;
    }
    report("characters", ts, tp, serial.size(), equal);
  }

  {
    const double window = 60.0 * scale;
    std::vector<nilspec::SpectrumSlice> serial, parallel;
    const double ts = time_ms([&] {
      serial = nilspec::assemble_spectrum(h, window, 1000000, nilspec::Exec::Serial);
    });
    const double tp = time_ms([&] {
      parallel =
          nilspec::assemble_spectrum(h, window, 1000000, nilspec::Exec::Parallel);
    });
    const auto fs = nilspec::flatten_spectrum(serial);
    const auto fp = nilspec::flatten_spectrum(parallel);
    report("spectrum", ts, tp, fs.size(), fs == fp);
  }

  {
    std::vector<double> r_values;
    const int count = static_cast<int>(256 * scale);
    for (int i = 0; i < count; ++i) {
      r_values.push_back(0.5 + 3.5 * static_cast<double>(i) / count);
    }
    nilspec::SpinStructure spin;
    spin.eps1 = -1;  // nontrivial pattern valid for odd lattice multiplicity
    std::vector<nilspec::EtaReport> serial, parallel;
    const double ts = time_ms([&] {
      serial = nilspec::constant_eta_family(1.0, 1.0, 1, 0, spin, r_values,
                                            nilspec::Exec::Serial);
    });
    const double tp = time_ms([&] {
      parallel = nilspec::constant_eta_family(1.0, 1.0, 1, 0, spin, r_values,
                                              nilspec::Exec::Parallel);
    });
    bool equal = serial.size() == parallel.size();
    for (std::size_t i = 0; equal && i < serial.size(); ++i) {
      equal = serial[i].eta0 == parallel[i].eta0 && serial[i].N == parallel[i].N;
    }
    report("family", ts, tp, serial.size(), equal);
  }

  return 0;
}
