#include <cmath>
#include <vector>

#include "chaoslab/rng.hpp"
#include "chaoslab/summation.hpp"
#include "chaoslab/threading.hpp"
#include "chaoslab/torus.hpp"
#include "doctest.h"

using namespace chaoslab;

TEST_SUITE("util") {

TEST_CASE("torus wrapping") {
  CHECK(wrap01(1.25) == doctest::Approx(0.25));
  CHECK(wrap01(-0.25) == doctest::Approx(0.75));
  CHECK(wrap01(0.0) == 0.0);
  CHECK(wrap01(-1e-17) < 1.0);  // never returns the right endpoint

  CHECK(wrap_disp(0.75) == doctest::Approx(-0.25));
  CHECK(wrap_disp(-0.75) == doctest::Approx(0.25));
  CHECK(wrap_disp(0.5) == 0.5);   // convention: (-1/2, 1/2]
  CHECK(wrap_disp(-0.5) == 0.5);
  CHECK(wrap_disp(3.25) == doctest::Approx(0.25));

  CHECK(sign0(0.0) == 0.0);
  CHECK(sign0(2.5) == 1.0);
  CHECK(sign0(-0.1) == -1.0);
}

TEST_CASE("compensated summation survives cancellation") {
  CompensatedSum s;
  s.add(1e16);
  s.add(1.0);
  s.add(-1e16);
  CHECK(s.value() == 1.0);

  std::vector<double> xs(1000, 0.1);
  CHECK(compensated_sum(xs) == doctest::Approx(100.0).epsilon(1e-15));
}

TEST_CASE("parallel reduce is identical for every thread budget") {
  auto term = [](std::size_t i) {
    double t = static_cast<double>(i % 997) - 498.0;
    return std::sin(t) * 1e-3 + t;
  };
  set_thread_budget(1);
  double one = parallel_reduce(100000, 1024, term);
  set_thread_budget(8);
  double eight = parallel_reduce(100000, 1024, term);
  set_thread_budget(3);
  double three = parallel_reduce(100000, 1024, term);
  set_thread_budget(0);
  CHECK(one == eight);  // bitwise
  CHECK(one == three);
}

TEST_CASE("parallel_for_chunks covers the range exactly once") {
  std::vector<int> hits(5000, 0);
  set_thread_budget(7);
  parallel_for_chunks(hits.size(), 64, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) hits[i] += 1;
  });
  set_thread_budget(0);
  for (int h : hits) CHECK(h == 1);
}

TEST_CASE("rng determinism and transforms") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.uniform01() == b.uniform01());

  Rng g(20240817);
  double acc = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    double u = g.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    acc += u;
  }
  CHECK(acc / n == doctest::Approx(0.5).epsilon(5e-3));

  Rng e(7);
  double mean = 0.0;
  for (int i = 0; i < n; ++i) mean += e.exponential();
  mean /= n;
  CHECK(mean == doctest::Approx(1.0).epsilon(1.5e-2));  // ~3 sigma CLT band

  Rng t(9);
  for (int i = 0; i < 1000; ++i) CHECK(t.exponential_truncated(2.0) < 2.0);

  Rng idx(3);
  for (int i = 0; i < 1000; ++i) CHECK(idx.integer(17) < 17);

  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
}

}  // TEST_SUITE
