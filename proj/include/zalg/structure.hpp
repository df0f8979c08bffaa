#pragma once

#include <algorithm>
#include <functional>

#include "intfactor.hpp"
#include "zalgebra.hpp"

namespace zalg {

// associated prime of a finite Z-algebra: either of height n (contains no
// nonzero integer) or maximal with recorded residue characteristic
struct PrimeIdeal {
  RIdeal ideal;
  bool maximal = false;
  Int characteristic = 0;  // 0 for height-n primes
  Lattice presentation;    // canonical: quotient presentation lattice
};

inline bool same_prime(const PrimeIdeal& a, const PrimeIdeal& b) {
  return a.characteristic == b.characteristic && a.presentation == b.presentation;
}

namespace detail {

inline bool prime_less(const PrimeIdeal& a, const PrimeIdeal& b) {
  if (a.characteristic != b.characteristic) return a.characteristic < b.characteristic;
  const IntMatrix& x = a.presentation.basis;
  const IntMatrix& y = b.presentation.basis;
  if (x.rows() != y.rows()) return x.rows() < y.rows();
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (x(i, j) != y(i, j)) return x(i, j) < y(i, j);
  return false;
}

}  // namespace detail

// minimal associated primes via the rank/torsion split: the Q-extension
// supplies the height-n primes, the F_p reductions of R + <tau> supply the
// maximal candidates, and candidates containing the intersection of the
// height-n primes are pruned
inline std::vector<PrimeIdeal> minimal_associated_primes(const ExplicitZAlgebra& R,
                                                         RandomSource& rng) {
  if (!R.unital)
    throw precondition_error("minimal_associated_primes: algebra must be unital");
  std::vector<PrimeIdeal> L, M;
  ModuleInvariants mi = module_invariants(R);
  Int tau = mi.torsion_exponent;
  if (mi.rank > 0) {
    QExtension ext = extend_to_Q(R);
    auto qmax = maximal_ideals(ext.alg, rng);
    for (const auto& m : qmax) {
      PrimeIdeal p;
      p.ideal = contract_from_Q(R, ext, m);
      p.maximal = false;
      p.presentation = quotient_presentation(R, p.ideal);
      L.push_back(std::move(p));
    }
    if (tau > 1) {
      // recurse on R + <tau>: same tensor, syzygies enlarged by tau
      std::vector<ZElem> rows;
      for (std::size_t r = 0; r < R.syzygies.basis.rows(); ++r)
        rows.push_back(R.syzygies.basis.row(r));
      rows.push_back(scale_elem(tau, R.one()));
      std::vector<std::vector<ZElem>> tensor = R.c;
      ExplicitZAlgebra Rt = make_algebra(R.n, R.unital, tensor, rows, R.labels);
      M = minimal_associated_primes(Rt, rng);
      // candidate lattices are the same whether computed in R or R + <tau>,
      // because every candidate contains a prime p dividing tau
      for (auto& p : M) p.presentation = quotient_presentation(R, p.ideal);
    }
    // prune the maximal candidates containing J = intersection of L
    if (!L.empty() && !M.empty()) {
      RIdeal J{{R.one()}};
      for (const auto& p : L) J = intersect_ideals_R(R, J, p.ideal);
      std::vector<PrimeIdeal> kept;
      for (auto& m : M)
        if (!ideal_contains(R, J, m.ideal)) kept.push_back(std::move(m));
      M = std::move(kept);
    }
    L.insert(L.end(), M.begin(), M.end());
  } else {
    if (tau == 1) return {};  // zero ring
    IntFactorList fl = factor_integer(tau, rng);
    for (const auto& [p, e] : fl.factors) {
      PReduction red = reduce_mod_p(R, p);
      auto pmax = maximal_ideals(red.quo.alg, rng);
      for (const auto& m : pmax) {
        PrimeIdeal pi;
        pi.maximal = true;
        pi.characteristic = p;
        for (const auto& g : m.gens)
          pi.ideal.gens.push_back(red.quo.lift(g, R.ambient(), red.ambient.field));
        pi.ideal.gens.push_back(scale_elem(p, R.one()));
        pi.presentation = quotient_presentation(R, pi.ideal);
        M.push_back(std::move(pi));
      }
    }
    L = std::move(M);
  }
  std::sort(L.begin(), L.end(), detail::prime_less);
  L.erase(std::unique(L.begin(), L.end(),
                      [](const PrimeIdeal& a, const PrimeIdeal& b) { return same_prime(a, b); }),
          L.end());
  return L;
}

// Rad(0) as the intersection of the minimal associated primes
inline RIdeal radical_zero(const ExplicitZAlgebra& R, const std::vector<PrimeIdeal>& primes) {
  RIdeal J{{R.one()}};
  for (const auto& p : primes) J = intersect_ideals_R(R, J, p.ideal);
  return J;
}

// partition of the prime list into connected components; blocks hold indices
// into the input list
struct ComponentSet {
  std::vector<std::vector<std::size_t>> blocks;
};

inline ComponentSet connected_components(const ExplicitZAlgebra& R,
                                         const std::vector<PrimeIdeal>& primes) {
  std::vector<std::size_t> parent(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (primes[i].maximal) continue;
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      if (primes[j].maximal) continue;
      RIdeal sum;
      sum.gens = primes[i].ideal.gens;
      sum.gens.insert(sum.gens.end(), primes[j].ideal.gens.begin(), primes[j].ideal.gens.end());
      if (!is_unit_ideal(R, sum)) parent[find(i)] = find(j);
    }
  }
  std::vector<std::vector<std::size_t>> by_root(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (!primes[i].maximal) by_root[find(i)].push_back(i);
  ComponentSet cs;
  for (auto& blk : by_root)
    if (!blk.empty()) cs.blocks.push_back(std::move(blk));
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (primes[i].maximal) cs.blocks.push_back({i});
  std::sort(cs.blocks.begin(), cs.blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return cs;
}

// Rad(0)^m = 0 for m = rank + length of the torsion subgroup
inline std::size_t nilpotency_bound(const ExplicitZAlgebra& R, RandomSource& rng) {
  ModuleInvariants mi = module_invariants(R);
  std::size_t m = mi.rank;
  for (const auto& d : mi.invariant_factors) {
    if (d == 1) continue;
    IntFactorList fl = factor_integer(d, rng);
    for (const auto& [p, e] : fl.factors) m += static_cast<std::size_t>(e);
  }
  return m;
}

struct Idempotent {
  ZElem e;
  std::size_t iterations = 0;  // lifting steps performed
};

// lift e, idempotent modulo Rad(0), to a true idempotent of R via
// f = h + r - 2hr with r = h^2 - h
inline Idempotent lift_idempotent(const ExplicitZAlgebra& R, const ZElem& e,
                                  RandomSource& rng) {
  std::size_t m = nilpotency_bound(R, rng);
  std::size_t bound = 1;
  while ((std::size_t(1) << bound) < (m > 0 ? m : 1)) ++bound;
  Idempotent out;
  ZElem h = e;
  for (std::size_t iter = 0;; ++iter) {
    ZElem r = sub_elems(multiply(R, h, h), h);
    if (is_zero_elem(R, r)) {
      out.e = h;
      out.iterations = iter;
      return out;
    }
    if (iter >= bound + 1)
      throw precondition_error(
          "lift_idempotent: iteration bound exceeded; input is not idempotent modulo the "
          "nilradical");
    ZElem hr = multiply(R, h, r);
    h = sub_elems(add_elems(h, r), scale_elem(2, hr));
  }
}

// primitive idempotents: CRT preimages per connected component in R/Rad(0),
// then lifting
inline std::vector<Idempotent> primitive_idempotents(const ExplicitZAlgebra& R,
                                                     RandomSource& rng) {
  if (!R.unital) throw precondition_error("primitive_idempotents: algebra must be unital");
  auto primes = minimal_associated_primes(R, rng);
  if (primes.empty()) return {};  // zero ring
  ComponentSet comps = connected_components(R, primes);
  RIdeal J = radical_zero(R, primes);
  // R/J with the same tensor and the enlarged syzygy lattice
  ExplicitZAlgebra RJ = R;
  RJ.syzygies = quotient_presentation(R, J);
  std::vector<RIdeal> Ji;
  for (const auto& blk : comps.blocks) {
    RIdeal JI{{R.one()}};
    for (auto idx : blk) JI = intersect_ideals_R(RJ, JI, primes[idx].ideal);
    Ji.push_back(std::move(JI));
  }
  std::vector<Idempotent> out;
  for (std::size_t i = 0; i < Ji.size(); ++i) {
    ZElem q = crt_preimage(RJ, Ji, i + 1);
    out.push_back(lift_idempotent(R, q, rng));
  }
  return out;
}

}  // namespace zalg
