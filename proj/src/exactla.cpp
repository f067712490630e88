#include "superhom/exactla.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace superhom {

void SparseRationalMatrix::check(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
}

Rational SparseRationalMatrix::get(std::size_t r, std::size_t c) const {
  check(r, c);
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Rational(0) : it->second;
}

void SparseRationalMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  check(r, c);
  if (::superhom::is_zero(v))
    entries_.erase({r, c});
  else
    entries_[{r, c}] = v;
}

void SparseRationalMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  check(r, c);
  if (::superhom::is_zero(v)) return;
  auto [it, fresh] = entries_.emplace(Index{r, c}, v);
  if (!fresh) {
    it->second += v;
    if (::superhom::is_zero(it->second)) entries_.erase(it);
  }
}

SparseRationalMatrix SparseRationalMatrix::transpose() const {
  SparseRationalMatrix t(cols_, rows_);
  for (const auto& [rc, v] : entries_) t.entries_.emplace(Index{rc.second, rc.first}, v);
  return t;
}

SparseRationalMatrix SparseRationalMatrix::permuted(const std::vector<std::size_t>& row_perm,
                                                    const std::vector<std::size_t>& col_perm) const {
  if (row_perm.size() != rows_ || col_perm.size() != cols_) throw std::invalid_argument("permutation size mismatch");
  SparseRationalMatrix p(rows_, cols_);
  for (const auto& [rc, v] : entries_) p.set(row_perm[rc.first], col_perm[rc.second], v);
  return p;
}

SparseRationalMatrix SparseRationalMatrix::scaled(const Rational& s) const {
  SparseRationalMatrix p(rows_, cols_);
  if (::superhom::is_zero(s)) return p;
  for (const auto& [rc, v] : entries_) p.entries_.emplace(rc, v * s);
  return p;
}

SparseRationalMatrix multiply(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  std::vector<std::vector<std::pair<std::size_t, const Rational*>>> brows(b.rows());
  for (const auto& [rc, v] : b.entries()) brows[rc.first].emplace_back(rc.second, &v);
  SparseRationalMatrix p(a.rows(), b.cols());
  for (const auto& [rc, v] : a.entries())
    for (const auto& [c, w] : brows[rc.second]) p.add(rc.first, c, v * *w);
  return p;
}

namespace {

using IntRow = std::vector<std::pair<std::size_t, Integer>>;

// Each row scaled by the lcm of its denominators; rank is unchanged.
std::vector<IntRow> integer_rows(const SparseRationalMatrix& m) {
  std::vector<IntRow> rows(m.rows());
  std::vector<Integer> lcm(m.rows(), 1);
  for (const auto& [rc, v] : m.entries()) mpz_lcm(lcm[rc.first].get_mpz_t(), lcm[rc.first].get_mpz_t(), v.get_den_mpz_t());
  for (const auto& [rc, v] : m.entries()) {
    Integer x = v.get_num() * (lcm[rc.first] / v.get_den());
    rows[rc.first].emplace_back(rc.second, std::move(x));
  }
  return rows;
}

std::size_t bits(const Integer& x) { return mpz_sizeinbase(x.get_mpz_t(), 2); }

void divide_by_content(IntRow& row) {
  Integer g = 0;
  for (const auto& [c, x] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [c, x] : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// row <- p * row - q * pivot, both sorted by column; the leading column cancels.
IntRow combine(const IntRow& row, const Integer& p, const IntRow& pivot, const Integer& q) {
  IntRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, p * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -q * pivot[j].second);
      ++j;
    } else {
      Integer x = p * row[i].second - q * pivot[j].second;
      if (x != 0) out.emplace_back(row[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::size_t dense_bareiss_rank(const SparseRationalMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  if (nr == 0 || nc == 0) return 0;
  std::vector<std::vector<Integer>> a(nr, std::vector<Integer>(nc, 0));
  auto irows = integer_rows(m);
  for (std::size_t r = 0; r < nr; ++r)
    for (auto& [c, x] : irows[r]) a[r][c] = std::move(x);

  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < nc && rank < nr; ++c) {
    std::size_t best = nr;
    for (std::size_t r = rank; r < nr; ++r)
      if (a[r][c] != 0 && (best == nr || bits(a[r][c]) < bits(a[best][c]))) best = r;
    if (best == nr) continue;
    std::swap(a[rank], a[best]);
    const Integer& p = a[rank][c];
    for (std::size_t r = rank + 1; r < nr; ++r) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        Integer x = p * a[r][j] - a[r][c] * a[rank][j];
        mpz_divexact(a[r][j].get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::size_t sparse_fraction_free_rank(const SparseRationalMatrix& m) {
  std::vector<IntRow> active;
  for (auto& row : integer_rows(m))
    if (!row.empty()) {
      divide_by_content(row);
      active.push_back(std::move(row));
    }
  std::size_t rank = 0;
  while (!active.empty()) {
    std::size_t lead = active[0][0].first;
    for (const auto& row : active) lead = std::min(lead, row[0].first);
    std::vector<std::size_t> rows_at;
    for (std::size_t i = 0; i < active.size(); ++i)
      if (active[i][0].first == lead) rows_at.push_back(i);
    std::size_t piv = rows_at[0];
    for (std::size_t i : rows_at)
      if (bits(active[i][0].second) < bits(active[piv][0].second)) piv = i;
    IntRow pivot = std::move(active[piv]);
    ++rank;
    std::vector<IntRow> next;
    next.reserve(active.size());
    for (std::size_t i = 0; i < active.size(); ++i) {
      if (i == piv) continue;
      if (active[i][0].first != lead) {
        next.push_back(std::move(active[i]));
        continue;
      }
      Integer g;
      mpz_gcd(g.get_mpz_t(), pivot[0].second.get_mpz_t(), active[i][0].second.get_mpz_t());
      Integer p = pivot[0].second / g, q = active[i][0].second / g;
      IntRow reduced = combine(active[i], p, pivot, q);
      if (reduced.empty()) continue;
      divide_by_content(reduced);
      next.push_back(std::move(reduced));
    }
    active = std::move(next);
  }
  return rank;
}

std::size_t rank(const SparseRationalMatrix& m) {
  if (m.is_zero()) return 0;
  if (m.rows() < kDenseThreshold && m.cols() < kDenseThreshold) return dense_bareiss_rank(m);
  return sparse_fraction_free_rank(m);
}

std::size_t kernel_dim(const SparseRationalMatrix& m) { return m.cols() - rank(m); }

void write_triplets(std::ostream& os, const SparseRationalMatrix& m) {
  os << "# " << m.rows() << ' ' << m.cols() << ' ' << m.nonzeros() << '\n';
  for (const auto& [rc, v] : m.entries()) os << rc.first << ' ' << rc.second << ' ' << to_string(v) << '\n';
}

SparseRationalMatrix read_triplets(std::istream& is) {
  std::string line;
  std::size_t nr = 0, nc = 0, nnz = 0;
  bool header = false;
  SparseRationalMatrix m;
  std::size_t seen = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (line[0] == '#') {
      char hash;
      if (header || !(ls >> hash >> nr >> nc >> nnz)) throw std::invalid_argument("bad triplet header");
      header = true;
      m = SparseRationalMatrix(nr, nc);
      continue;
    }
    if (!header) throw std::invalid_argument("triplet data before header");
    std::size_t r, c;
    std::string v;
    if (!(ls >> r >> c >> v)) throw std::invalid_argument("bad triplet line '" + line + "'");
    m.set(r, c, parse_rational(v));
    ++seen;
  }
  if (!header) throw std::invalid_argument("missing triplet header");
  if (seen != nnz) throw std::invalid_argument("triplet count differs from header");
  return m;
}

}  // namespace superhom
