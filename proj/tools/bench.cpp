// Compares the serial and OpenMP state-sum bracket kernels on braid-closure
// diagrams of increasing size and checks that the results agree exactly.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "qaknots/braid.hpp"
#include "qaknots/diagram.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double run_ms(const std::function<void()>& f, int reps) {
  const auto start = Clock::now();
  for (int i = 0; i < reps; ++i) f();
  const auto stop = Clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

qak::BraidWord random_word(std::mt19937& rng, int length) {
  qak::BraidWord w;
  w.strands = 3;
  std::uniform_int_distribution<int> gen(0, 3);
  static const int kLetters[4] = {1, -1, 2, -2};
  for (int i = 0; i < length; ++i) w.letters.push_back(kLetters[gen(rng)]);
  return w;
}

}  // namespace

int main() {
  std::mt19937 rng(20240817);
  std::cout << "crossings  serial_ms  parallel_ms  speedup\n";
  for (int length : {8, 10, 12, 14, 16, 18}) {
    const qak::PlanarDiagram d = qak::closure(random_word(rng, length));
    const std::size_t c = d.crossings.size();
    qak::LaurentPoly serial, parallel;
    const int reps = c <= 12 ? 20 : (c <= 16 ? 5 : 1);
    const double t_serial =
        run_ms([&] { serial = qak::bracket_state_sum_serial(d, c).poly; }, reps);
    const double t_parallel =
        run_ms([&] { parallel = qak::bracket_state_sum(d, c).poly; }, reps);
    if (serial != parallel) {
      std::cerr << "MISMATCH at " << c << " crossings\n";
      return 1;
    }
    std::printf("%9zu  %9.3f  %11.3f  %7.2fx\n", c, t_serial, t_parallel,
                t_parallel > 0 ? t_serial / t_parallel : 0.0);
  }
  std::cout << "all results exactly equal\n";
  return 0;
}
