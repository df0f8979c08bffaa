#include <catch2/catch_amalgamated.hpp>

#include "zalg/hnf.hpp"
#include "zalg/rng.hpp"
#include "zalg/snf.hpp"

using namespace zalg;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<std::vector<Int>> r;
  std::size_t cols = 0;
  for (auto& row : rows) {
    r.emplace_back();
    for (auto x : row) r.back().push_back(x);
    cols = r.back().size();
  }
  return IntMatrix::from_rows(r, cols);
}

IntMatrix random_matrix(RandomSource& rng, std::size_t r, std::size_t c, long long bound) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.next_range(-bound, bound);
  return m;
}

// independent HNF oracle: plain textbook column sweep with no pivot
// heuristics and no transform tracking
IntMatrix hnf_oracle(IntMatrix h) {
  std::size_t m = h.rows(), n = h.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    bool again = true;
    while (again) {
      again = false;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        if (h(r, c) == 0) {
          h.swap_rows(r, i);
          continue;
        }
        Int s, t;
        Int g = ext_gcd(h(r, c), h(i, c), s, t);
        Int a = h(r, c) / g, b = h(i, c) / g;
        for (std::size_t j = 0; j < n; ++j) {
          Int x = h(r, j), y = h(i, j);
          h(r, j) = s * x + t * y;
          h(i, j) = -b * x + a * y;
        }
        again = true;
      }
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) h.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      Int q = fdiv_q(h(i, c), h(r, c));
      h.add_multiple_row(i, r, -q);
    }
    ++r;
  }
  return h;
}

bool is_canonical_hnf(const IntMatrix& h) {
  long long last_pivot = -1;
  bool seen_zero_row = false;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t pc = 0;
    while (pc < h.cols() && h(i, pc) == 0) ++pc;
    if (pc == h.cols()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    if (static_cast<long long>(pc) <= last_pivot) return false;
    last_pivot = static_cast<long long>(pc);
    if (h(i, pc) <= 0) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (h(k, pc) < 0 || h(k, pc) >= h(i, pc)) return false;
  }
  return true;
}

// gcd of all i x i minors, brute force (matrices up to 5x5)
Int minor_gcd(const IntMatrix& a, std::size_t k) {
  std::vector<std::size_t> ri(k), ci(k);
  Int g = 0;
  std::vector<std::size_t> rsel, csel;
  std::function<void(std::size_t, std::size_t)> pick_cols = [&](std::size_t from, std::size_t left) {
    if (left == 0) {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(rsel[i], csel[j]);
      g = gcd_int(g, det_bareiss(sub));
      return;
    }
    for (std::size_t c = from; c + left <= a.cols(); ++c) {
      csel.push_back(c);
      pick_cols(c + 1, left - 1);
      csel.pop_back();
    }
  };
  std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t from, std::size_t left) {
    if (left == 0) {
      pick_cols(0, k);
      return;
    }
    for (std::size_t r = from; r + left <= a.rows(); ++r) {
      rsel.push_back(r);
      pick_rows(r + 1, left - 1);
      rsel.pop_back();
    }
  };
  pick_rows(0, k);
  return g;
}

}  // namespace

TEST_CASE("hnf identity and simple cases") {
  auto d = hnf(IntMatrix::identity(2));
  CHECK(d.H == IntMatrix::identity(2));
  CHECK(d.U == IntMatrix::identity(2));

  auto d2 = hnf(mat({{2, 4}, {6, 8}}));
  CHECK(d2.H == mat({{2, 0}, {0, 4}}));
  CHECK(d2.U * mat({{2, 4}, {6, 8}}) == d2.H);

  // ALG2 syzygy rows: pivots 3 at column 1 and 2 at column 3
  auto d3 = hnf(mat({{0, 0, 0, 2}, {0, 3, 3, 0}}));
  CHECK(d3.H == mat({{0, 3, 3, 0}, {0, 0, 0, 2}}));
}

TEST_CASE("hnf properties on random matrices") {
  RandomSource rng(1);
  for (int iter = 0; iter < 200; ++iter) {
    std::size_t m = 1 + rng.next_below(5), n = 1 + rng.next_below(5);
    IntMatrix a = random_matrix(rng, m, n, 9);
    auto d = hnf(a);
    CHECK(d.U * a == d.H);
    CHECK(abs_int(det_bareiss(d.U)) == 1);
    CHECK(is_canonical_hnf(d.H));
    CHECK(d.H == hnf_oracle(a));
  }
}

TEST_CASE("hnf canonicality under unimodular row mixing") {
  RandomSource rng(2);
  for (int iter = 0; iter < 100; ++iter) {
    std::size_t m = 1 + rng.next_below(4), n = 1 + rng.next_below(4);
    IntMatrix a = random_matrix(rng, m, n, 6);
    IntMatrix p = IntMatrix::identity(m);
    for (int k = 0; k < 8; ++k) {
      std::size_t i = rng.next_below(m), j = rng.next_below(m);
      if (i == j) {
        if (rng.next_below(2)) p.negate_row(i);
      } else {
        p.add_multiple_row(i, j, Int(rng.next_range(-3, 3)));
      }
    }
    CHECK(hnf(a).H == hnf(p * a).H);
  }
}

TEST_CASE("snf simple cases") {
  auto z = snf(IntMatrix(2, 3));
  CHECK(z.invariant_factors.empty());
  CHECK(z.D.is_zero());

  auto d = snf(mat({{2, 4}, {6, 8}}));
  REQUIRE(d.invariant_factors.size() == 2);
  CHECK(d.invariant_factors[0] == 2);
  CHECK(d.invariant_factors[1] == 4);
  CHECK(d.S * mat({{2, 4}, {6, 8}}) * d.T == d.D);
}

TEST_CASE("snf properties and minor-gcd oracle") {
  RandomSource rng(3);
  for (int iter = 0; iter < 150; ++iter) {
    std::size_t m = 1 + rng.next_below(5), n = 1 + rng.next_below(5);
    IntMatrix a = random_matrix(rng, m, n, 8);
    auto d = snf(a);
    CHECK(d.S * a * d.T == d.D);
    CHECK(abs_int(det_bareiss(d.S)) == 1);
    CHECK(abs_int(det_bareiss(d.T)) == 1);
    for (std::size_t i = 0; i + 1 < d.invariant_factors.size(); ++i) {
      CHECK(d.invariant_factors[i] > 0);
      CHECK(d.invariant_factors[i + 1] % d.invariant_factors[i] == 0);
    }
    // off-diagonal must vanish
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) CHECK(d.D(i, j) == 0);
    // d1*...*dk = gcd of all k x k minors
    Int prod = 1;
    for (std::size_t k = 1; k <= d.invariant_factors.size(); ++k) {
      prod *= d.invariant_factors[k - 1];
      CHECK(minor_gcd(a, k) == prod);
    }
    if (d.invariant_factors.size() < std::min(m, n))
      CHECK(minor_gcd(a, d.invariant_factors.size() + 1) == 0);
  }
}

TEST_CASE("solve_diophantine basic") {
  std::vector<Int> b = {5, -3};
  auto s = solve_diophantine(IntMatrix::identity(2), b);
  REQUIRE(s.has_value());
  CHECK(s->particular == b);
  CHECK(s->homogeneous.rank() == 0);

  CHECK(!solve_diophantine(mat({{2}}), {Int(1)}).has_value());
}

TEST_CASE("solve_diophantine on the CRT preimage system") {
  // 4x7 system from the worked Chinese-remainder preimage computation
  IntMatrix a = mat({{1, 0, -1, 0, 0, 0, -1},
                     {0, 0, 1, 0, -1, 0, 0},
                     {1, 0, 0, -3, 0, 0, 0},
                     {0, 2, 0, 0, 0, -1, 0}});
  std::vector<Int> b = {1, 0, 0, 0};
  auto s = solve_diophantine(a, b);
  REQUIRE(s.has_value());
  CHECK(mat_vec(a, s->particular) == b);
  // the known solution (3,0,2,1,2,0), padded to 7 coordinates
  std::vector<Int> known = {3, 0, 2, 1, 2, 0, 0};
  CHECK(mat_vec(a, known) == b);
  std::vector<Int> diff(7);
  for (int i = 0; i < 7; ++i) diff[i] = known[i] - s->particular[i];
  CHECK(lattice_member(s->homogeneous, diff));
}

TEST_CASE("solve_diophantine randomized round trips") {
  RandomSource rng(4);
  for (int iter = 0; iter < 150; ++iter) {
    std::size_t m = 1 + rng.next_below(4), n = 1 + rng.next_below(4);
    IntMatrix a = random_matrix(rng, m, n, 7);
    std::vector<Int> x(n);
    for (auto& v : x) v = rng.next_range(-5, 5);
    std::vector<Int> b = mat_vec(a, x);
    auto s = solve_diophantine(a, b);
    REQUIRE(s.has_value());
    CHECK(mat_vec(a, s->particular) == b);
    for (std::size_t i = 0; i < s->homogeneous.basis.rows(); ++i) {
      std::vector<Int> h = s->homogeneous.basis.row(i);
      std::vector<Int> zero(m, 0);
      CHECK(mat_vec(a, h) == zero);
    }
    std::vector<Int> diff(n);
    for (std::size_t i = 0; i < n; ++i) diff[i] = x[i] - s->particular[i];
    CHECK(lattice_member(s->homogeneous, diff));
  }
}

TEST_CASE("kernel_lattice") {
  CHECK(kernel_lattice(IntMatrix::identity(3)).rank() == 0);
  auto k = kernel_lattice(mat({{1, 1}}));
  REQUIRE(k.rank() == 1);
  CHECK(k.basis == mat({{1, -1}}));

  RandomSource rng(5);
  for (int iter = 0; iter < 100; ++iter) {
    std::size_t m = 1 + rng.next_below(4), n = 1 + rng.next_below(5);
    IntMatrix a = random_matrix(rng, m, n, 6);
    Lattice k2 = kernel_lattice(a);
    std::vector<Int> zero(m, 0);
    for (std::size_t i = 0; i < k2.basis.rows(); ++i)
      CHECK(mat_vec(a, k2.basis.row(i)) == zero);
    // random combinations stay in the kernel
    for (int t = 0; t < 5; ++t) {
      std::vector<Int> v(n, 0);
      for (std::size_t i = 0; i < k2.basis.rows(); ++i) {
        Int c = rng.next_range(-4, 4);
        for (std::size_t j = 0; j < n; ++j) v[j] += c * k2.basis(i, j);
      }
      CHECK(mat_vec(a, v) == zero);
    }
  }
}

TEST_CASE("lattice membership") {
  Lattice any = lattice_from_rows(mat({{3, 1}, {0, 5}}), 2);
  CHECK(lattice_member(any, {Int(0), Int(0)}));

  Lattice alg1_raw = lattice_from_rows(mat({{3, 0, 0}, {-1, 0, 4}}), 3);
  CHECK(!lattice_member(alg1_raw, {Int(0), Int(-2), Int(0)}));
  CHECK(lattice_member(alg1_raw, {Int(2), Int(0), Int(4)}));
}

TEST_CASE("intersect_lattices") {
  Lattice u = lattice_from_rows(mat({{2, 0}, {0, 1}}), 2);
  Lattice v = lattice_from_rows(mat({{1, 0}, {0, 3}}), 2);
  Lattice w = intersect_lattices(u, v);
  CHECK(w.basis == mat({{2, 0}, {0, 3}}));
  CHECK(intersect_lattices(u, u) == u);

  RandomSource rng(6);
  for (int iter = 0; iter < 60; ++iter) {
    std::size_t n = 2 + rng.next_below(3);
    Lattice a = lattice_from_rows(random_matrix(rng, 1 + rng.next_below(3), n, 5), n);
    Lattice b = lattice_from_rows(random_matrix(rng, 1 + rng.next_below(3), n, 5), n);
    Lattice c = lattice_from_rows(random_matrix(rng, 1 + rng.next_below(3), n, 5), n);
    Lattice ab = intersect_lattices(a, b);
    CHECK(ab == intersect_lattices(b, a));
    CHECK(intersect_lattices(ab, c) == intersect_lattices(a, intersect_lattices(b, c)));
    CHECK(lattice_contains(a, ab));
    CHECK(lattice_contains(b, ab));
    // members of one input that happen to lie in the other must be in the result
    for (int t = 0; t < 5; ++t) {
      std::vector<Int> x(n, 0);
      for (std::size_t i = 0; i < a.basis.rows(); ++i) {
        Int cmul = rng.next_range(-3, 3);
        for (std::size_t j = 0; j < n; ++j) x[j] += cmul * a.basis(i, j);
      }
      if (lattice_member(b, x)) CHECK(lattice_member(ab, x));
    }
  }
}

TEST_CASE("rational_kernel_lattice") {
  CHECK(rational_kernel_lattice({{Rat(1, 2)}}, 1).rank() == 0);
  auto k = rational_kernel_lattice({{Rat(1, 3), Rat(-1, 3)}}, 2);
  CHECK(k.basis == mat({{1, 1}}));
  auto k2 = rational_kernel_lattice({{Rat(1, 2), Rat(1), Rat(0)}}, 3);
  CHECK(k2.basis == mat({{2, -1, 0}, {0, 0, 1}}));
}

TEST_CASE("inverse_unimodular") {
  RandomSource rng(7);
  for (int iter = 0; iter < 50; ++iter) {
    std::size_t n = 1 + rng.next_below(4);
    IntMatrix p = IntMatrix::identity(n);
    for (int k = 0; k < 10; ++k) {
      std::size_t i = rng.next_below(n), j = rng.next_below(n);
      if (i == j)
        p.negate_row(i);
      else
        p.add_multiple_row(i, j, Int(rng.next_range(-3, 3)));
    }
    IntMatrix q = inverse_unimodular(p);
    CHECK(q * p == IntMatrix::identity(n));
    CHECK(p * q == IntMatrix::identity(n));
  }
}

TEST_CASE("degenerate shapes") {
  CHECK(hnf(IntMatrix(0, 3)).H.rows() == 0);
  CHECK(snf(IntMatrix(3, 0)).invariant_factors.empty());
  CHECK(kernel_lattice(IntMatrix(0, 3)).rank() == 3);
  auto s = solve_diophantine(IntMatrix(0, 2), {});
  REQUIRE(s.has_value());
  CHECK(s->homogeneous.rank() == 2);
}
