#include "superhom/homology.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace superhom {

const HomologyRow* HomologyReport::row(int m) const {
  for (const auto& r : rows)
    if (r.m == m) return &r;
  return nullptr;
}

std::vector<long> HomologyReport::betti_numbers() const {
  std::vector<long> v;
  for (const auto& r : rows) v.push_back(r.betti);
  return v;
}

std::vector<std::size_t> HomologyReport::dims() const {
  std::vector<std::size_t> v;
  for (const auto& r : rows) v.push_back(r.dim);
  return v;
}

std::vector<std::size_t> HomologyReport::kernels() const {
  std::vector<std::size_t> v;
  for (const auto& r : rows) v.push_back(r.kernel);
  return v;
}

std::vector<std::size_t> HomologyReport::ranks() const {
  std::vector<std::size_t> v;
  for (const auto& r : rows) v.push_back(r.rank);
  return v;
}

namespace {

// Runs f(i) for i in [0, count) on up to `jobs` threads; rethrows the first failure.
template <class F>
void parallel_for(std::size_t count, unsigned jobs, F&& f) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        f(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, count); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

int default_max_degree(const GradedAlgebra& alg, int w, const EnumerationOptions& opt) {
  int even_zero = 0;
  for (GenId g = 0; g < alg.size(); ++g) {
    if (opt.allow && !opt.allow(g)) continue;
    if (alg.grade(g) == 0) ++even_zero;
  }
  return -w + even_zero;
}

}  // namespace

HomologyReport compute_homology(const GradedAlgebra& alg, int w, const ComplexOptions& opt) {
  HomologyReport rep;
  rep.algebra = alg.name();
  rep.w = w;
  rep.h = opt.enumeration.secondary;
  if (w > 0) return rep;
  const int top = opt.max_degree ? *opt.max_degree : default_max_degree(alg, w, opt.enumeration);

  std::vector<std::optional<ChainBasis>> bases(top + 2);
  parallel_for(bases.size(), opt.jobs,
               [&](std::size_t m) { bases[m] = enumerate_chain_basis(alg, static_cast<int>(m), w, opt.enumeration); });

  std::vector<std::size_t> ranks(top + 3, 0);
  std::vector<SparseRationalMatrix> mats(top + 2);
  parallel_for(top + 1, opt.jobs, [&](std::size_t i) {
    const std::size_t m = i + 1;
    if (bases[m]->size() == 0 || bases[m - 1]->size() == 0) return;
    mats[m] = boundary_matrix(alg, *bases[m], *bases[m - 1]);
    ranks[m] = rank(mats[m]);
  });
  if (bases[top + 1]->size() != 0)
    throw std::logic_error("chain space above the degree bound is not empty");

  if (opt.check_square_zero)
    for (int m = 2; m <= top; ++m) {
      if (mats[m].rows() == 0 || mats[m - 1].cols() == 0 || mats[m - 1].rows() == 0) continue;
      if (!multiply(mats[m - 1], mats[m]).is_zero())
        throw std::logic_error("boundary squares to a nonzero map at m = " + std::to_string(m));
    }

  int lo = bases[0]->size() ? 0 : 1;
  int hi = top;
  while (hi >= lo && bases[hi]->size() == 0) --hi;
  long betti_alternating = 0;
  for (int m = lo; m <= hi; ++m) {
    HomologyRow row;
    row.m = m;
    row.dim = bases[m]->size();
    row.rank = ranks[m];
    row.kernel = row.dim - row.rank;
    row.betti = static_cast<long>(row.dim) - static_cast<long>(ranks[m]) - static_cast<long>(ranks[m + 1]);
    if (row.betti < 0) throw std::logic_error("negative Betti number at m = " + std::to_string(m));
    if (opt.k_split) {
      for (const auto& mono : bases[m]->monomials()) {
        std::size_t k = 0;
        for (GenId g : mono.factors)
          if (alg.generator(g).kind == GeneratorKind::vector) ++k;
        if (row.k_split.size() <= k) row.k_split.resize(k + 1, 0);
        ++row.k_split[k];
      }
    }
    long sign = m % 2 ? -1 : 1;
    rep.euler += sign * static_cast<long>(row.dim);
    betti_alternating += sign * row.betti;
    rep.rows.push_back(std::move(row));
  }
  if (betti_alternating != rep.euler) throw std::logic_error("Euler characteristic mismatch");
  return rep;
}

HomologyReport betti_row(const LieAlgebraSpec& spec, int w, unsigned jobs) {
  ComplexOptions opt;
  opt.jobs = jobs;
  return compute_homology(FormAlgebra(spec), w, opt);
}

std::vector<HomologyReport> betti_table(const LieAlgebraSpec& spec, const std::vector<int>& ws, unsigned jobs) {
  FormAlgebra alg(spec);
  ComplexOptions opt;
  opt.jobs = jobs;
  std::vector<HomologyReport> out;
  for (int w : ws) out.push_back(compute_homology(alg, w, opt));
  return out;
}

long binom(long p, long q) {
  if (p < 0 || q < 0 || q > p) return 0;
  q = std::min(q, p - q);
  long r = 1;
  for (long i = 1; i <= q; ++i) r = r * (p - q + i) / i;
  return r;
}

namespace {

long ind(long p) { return p >= 0 ? 1 : 0; }

}  // namespace

long chain_dim_formula(int w, int m) {
  const long W = -w;
  if (W < 1 || m < 0 || m > W) return 0;
  if ((W - m) % 2 == 0) {
    const long K = (W - m) / 2;
    return ind(W - 3 * K) * (binom(K + 2, 2) + 3 * binom(K, K - 2)) +
           ind(W - 3 * K - 1) * (3 * binom(K + 1, K - 1) + binom(K - 1, K - 3));
  }
  const long L = (W - m - 1) / 2;
  return 3 * ind(W - 3 * L - 2) * (binom(L + 2, 2) + binom(L, L - 2)) +
         (ind(W - 3 * L - 3) + ind(W - 3 * L - 1)) * binom(L + 1, L - 1);
}

long chain_dim_formula_cases(int w, int m) {
  const long W = -w;
  if (W < 1 || m < 0 || m > W) return 0;
  const long eps = W % 3 == 0 ? 0 : (W % 3 == 1 ? 1 : -1);
  const long Om = (W - eps) / 3;
  if ((W - m) % 2 == 0) {
    const long K = (W - m) / 2;
    if (3 * K <= 3 * Om + eps - 1)
      return binom(K + 2, 2) + 3 * binom(K + 1, K - 1) + 3 * binom(K, K - 2) + binom(K - 1, K - 3);
    if (eps == 0 && K == Om) return binom(K + 2, 2) + 3 * binom(K, K - 2);
    return 0;
  }
  const long L = (W - m - 1) / 2;
  if (3 * L <= 3 * Om + eps - 3) return 3 * (binom(L + 2, 2) + binom(L, L - 2)) + 2 * binom(L + 1, L - 1);
  if (eps == -1 && L == Om - 1) return binom(L + 1, L - 1) + 3 * (binom(L + 2, 2) + binom(L, L - 2));
  if (eps == 1 && L == Om) return binom(L + 1, L - 1);
  return 0;
}

RankFamily rank_family(const LieAlgebraSpec& spec) {
  const auto& n = spec.name();
  if (spec == catalog("so3") || spec == catalog("sl2r")) return RankFamily::so3;
  if (spec == catalog("d1n")) return RankFamily::d1n;
  if (spec == catalog("d1y")) return RankFamily::d1y;
  if (spec.dim() == 3) {
    const Rational kappa = spec.constant(1, 2, 1) / 2;
    if (!is_zero(kappa) && spec == catalog_d2(kappa))
      return kappa == -1 ? RankFamily::d2_degenerate : RankFamily::d2_generic;
  }
  throw std::invalid_argument("no closed rank formula for '" + n + "'");
}

long rank_formula(RankFamily f, int w, int m) {
  const long W = -w;
  if (W < 1 || m < 1 || m > W) return 0;
  if ((W - m) % 2 == 0) {
    const long K = (W - m) / 2;
    const long t = W - 3 * K - 1;
    switch (f) {
      case RankFamily::so3:
        return 3 * ind(W - 3 * K - 2) * binom(2 + K - 1, K - 1) + 3 * ind(W - 3 * K - 1) * binom(2 + K - 2, K - 2) +
               ind(W - 3 * K - 2) * binom(2 + K - 3, K - 3);
      case RankFamily::d1y:
        return 2 * ind(W - 3 * K - 2) * binom(2 + K - 1, K - 1) + ind(W - 3 * K - 1) * binom(2 + K - 2, K - 2) +
               ind(W - 3 * K - 2) * binom(2 + K - 3, K - 3);
      case RankFamily::d1n:
        if (t > 0) return 3 * binom(2 + K - 1, K - 1) + binom(2 + K - 2, K - 2);
        return t == 0 ? binom(2 + K - 1, K - 1) : 0;
      case RankFamily::d2_degenerate:
        if (t < 0) return 0;
        if (t == 0) return 2 * binom(2 + K - 2, K - 2) - binom(2 + K - 3, K - 3);
        return 3 * binom(2 + K - 1, K - 1) + binom(2 + K - 2, K - 2);
      case RankFamily::d2_generic:
        if (t < 0) return 0;
        if (t == 0) return binom(2 + K - 1, K - 1);
        return 4 * binom(2 + K - 1, K - 1) - binom(1 + K - 2, K - 2) + binom(2 + K - 3, K - 3);
    }
  } else {
    const long L = (W - m - 1) / 2;
    const long t = W - 3 * L - 3;
    switch (f) {
      case RankFamily::so3:
        return 3 * ind(W - 3 * L - 3) * binom(2 + L, L) + ind(W - 3 * L - 4) * binom(2 + L - 1, L - 1) +
               3 * ind(W - 3 * L - 3) * binom(2 + L - 2, L - 2);
      case RankFamily::d1y:
        return ind(W - 3 * L - 3) * binom(2 + L, L) + ind(W - 3 * L - 4) * binom(2 + L - 1, L - 1) +
               2 * ind(W - 3 * L - 3) * binom(2 + L - 2, L - 2);
      case RankFamily::d1n: {
        const long s = W - 3 * L - 2;
        if (s > 1) return 3 * binom(2 + L - 1, L - 1) + binom(2 + L, L);
        return s == 1 ? 2 * binom(2 + L - 1, L - 1) + binom(2 + L, L) : 0;
      }
      case RankFamily::d2_degenerate:
        if (t < 0) return 0;
        if (t == 0)
          return 2 * binom(2 + L, L) - binom(2 + L - 1, L - 1) + 3 * binom(2 + L - 2, L - 2) -
                 binom(2 + L - 3, L - 3);
        return 2 * binom(2 + L, L) + 3 * binom(2 + L - 2, L - 2) - binom(2 + L - 3, L - 3);
      case RankFamily::d2_generic:
        if (t < 0) return 0;
        if (t == 0) return 2 * binom(2 + L, L) + binom(2 + L - 2, L - 2);
        return 2 * binom(2 + L, L) + binom(2 + L - 1, L - 1) + binom(2 + L - 2, L - 2);
    }
  }
  return 0;
}

bool RankFormulaReport::all_match() const {
  for (const auto& r : rows)
    if (!r.match) return false;
  return true;
}

RankFormulaReport rank_formula_check(const LieAlgebraSpec& spec, int w) {
  const RankFamily fam = rank_family(spec);
  HomologyReport rep = betti_row(spec, w);
  RankFormulaReport out{spec.name(), w, {}};
  for (int m = 1; m <= -w; ++m) {
    const HomologyRow* r = rep.row(m);
    std::size_t computed = r ? r->rank : 0;
    long f = rank_formula(fam, w, m);
    out.rows.push_back({m, f, computed, f >= 0 && static_cast<std::size_t>(f) == computed});
  }
  return out;
}

}  // namespace superhom
