#include <doctest.h>

#include <cmath>

#include "egostat/errors.hpp"
#include "egostat/generators.hpp"
#include "egostat/theory.hpp"
#include "egostat/triangles.hpp"

using namespace egostat;

TEST_CASE("er edge cases") {
  Graph empty = generate_er(5, 0.0, 7);
  CHECK(empty.n == 5);
  CHECK(empty.m == 0);

  Graph k5 = generate_er(5, 1.0, 7);
  CHECK(k5.n == 5);
  CHECK(k5.m == 10);

  CHECK_THROWS_AS(generate_er(5, 1.5, 7), argument_error);
  CHECK_THROWS_AS(generate_er(5, -0.1, 7), argument_error);
}

TEST_CASE("er clustering matches the edge probability") {
  Graph g = generate_er(2000, 0.01, 1);
  VertexStats vs = vertex_stats(g);
  double mean_c = global_clustering(vs);
  // Aggregate neighbor-pair count drives the standard error of mean C_v.
  double pairs = 0;
  for (auto d : vs.degree)
    if (d >= 2) pairs += double(d) * double(d - 1) / 2.0;
  double se = std::sqrt(0.01 * 0.99 / pairs);
  CHECK(std::abs(mean_c - 0.01) < 3.0 * se);
}

TEST_CASE("er expected edge count over 20 seeds") {
  const std::uint64_t n = 400;
  const double p = 0.02;
  const double per_seed_mean = p * double(n) * double(n - 1) / 2.0;
  double total = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    total += static_cast<double>(generate_er(n, p, seed).m);
  double expect = 20.0 * per_seed_mean;
  double sd = std::sqrt(20.0 * per_seed_mean * (1.0 - p));
  CHECK(std::abs(total - expect) < 4.0 * sd);
}

TEST_CASE("configuration model determinism and edge cases") {
  Graph a = generate_powerlaw_cm(10, 2.5, 1, 1);
  Graph b = generate_powerlaw_cm(10, 2.5, 1, 1);
  CHECK(a.offsets == b.offsets);
  CHECK(a.neighbors == b.neighbors);

  Graph empty = generate_powerlaw_cm(0, 2.5, 1, 1);
  CHECK(empty.n == 0);

  CHECK_THROWS_AS(generate_powerlaw_cm(10, 1.0, 1, 1), argument_error);
  CHECK_THROWS_AS(generate_powerlaw_cm(10, 0.5, 1, 1), argument_error);
}

TEST_CASE("configuration model degrees recover the exponent") {
  Graph g = generate_powerlaw_cm(100000, 2.5, 2, 3);
  VertexStats vs = vertex_stats(g);
  std::vector<double> degs;
  for (auto d : vs.degree)
    if (d > 0) degs.push_back(static_cast<double>(d));
  FitOptions fo;
  fo.mode = XminMode::Fixed;
  fo.fixed_xmin = 2.0;
  PowerLawFit fit = fit_degree_exponent(degs, fo);
  CHECK(fit.exponent > 2.4);
  CHECK(fit.exponent < 2.6);
}

TEST_CASE("triangle closure limits") {
  Graph k4 = generate_triangle_closure(4, 3, 1.0, 1);
  CHECK(k4.n == 4);
  CHECK(k4.m == 6);

  Graph flat = generate_triangle_closure(10000, 3, 0.0, 5);
  double c0 = global_clustering(vertex_stats(flat));
  CHECK(c0 < 0.05);

  Graph closed = generate_triangle_closure(10000, 3, 1.0, 5);
  double c1 = global_clustering(vertex_stats(closed));
  CHECK(c1 > c0);

  CHECK_THROWS_AS(generate_triangle_closure(3, 3, 0.5, 1), argument_error);
  CHECK_THROWS_AS(generate_triangle_closure(10, 3, 1.5, 1), argument_error);
}
