// Compares the per-point operator-sandwich reference against the precomputed
// 8x8 matrix + OpenMP batch kernel on a large random point cloud.
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "paravec/batch.hpp"

int main(int argc, char** argv) {
  size_t n = argc > 1 ? std::stoul(argv[1]) : 200000;
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);

  std::vector<pv::Multivector> pts(n);
  for (auto& p : pts) {
    p = pv::Multivector::scalar(1.0) +
        pv::Multivector::vector({dist(rng), dist(rng), dist(rng)});
  }

  pv::Transform t = pv::compose(pv::rotation({1, 0, 0}, {0, 1, 0}, 0.7),
                                pv::translation({0.5, -1.0, 2.0}));

  auto serial = pts;
  auto t0 = std::chrono::steady_clock::now();
  pv::transform_points_serial(t, serial);
  auto t1 = std::chrono::steady_clock::now();

  auto parallel = pts;
  auto t2 = std::chrono::steady_clock::now();
  pv::transform_points_parallel(t, parallel);
  auto t3 = std::chrono::steady_clock::now();

  double max_dev = 0.0;
  for (size_t i = 0; i < n; ++i)
    for (int b = 0; b < 8; ++b)
      max_dev = std::max(max_dev, std::abs(serial[i][b] - parallel[i][b]));

  auto ms = [](auto a, auto b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
  };
  std::printf("points:            %zu\n", n);
  std::printf("serial sandwich:   %.2f ms\n", ms(t0, t1));
  std::printf("parallel matrix:   %.2f ms\n", ms(t2, t3));
  std::printf("max deviation:     %.3e\n", max_dev);
  return max_dev < 1e-9 ? 0 : 1;
}
