#include "halphen/exact_rank.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace halphen {

namespace {

__extension__ typedef unsigned __int128 uint128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

void make_primitive(SparseRow& row) {
  Integer g = 0;
  for (const auto& [col, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& entry : row) mpz_divexact(entry.second.get_mpz_t(), entry.second.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

std::size_t rank_bareiss(IntegerMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  for (const auto& r : m)
    if (r.size() != cols) throw std::invalid_argument("rank_bareiss: ragged matrix");

  std::size_t rank = 0;
  Integer prev = 1;
  Integer t;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    const auto& pivot_row = m[rank];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      auto& row = m[i];
      for (std::size_t j = c + 1; j < cols; ++j) {
        // row[j] = (pivot * row[j] - row[c] * pivot_row[j]) / prev
        t = pivot_row[c] * row[j];
        t -= row[c] * pivot_row[j];
        mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      row[c] = 0;
    }
    prev = pivot_row[c];
    ++rank;
  }
  return rank;
}

std::size_t rank_bareiss(const RationalMatrix& matrix) {
  IntegerMatrix m;
  m.reserve(matrix.size());
  for (const auto& row : matrix) {
    Integer l = 1;
    for (const auto& v : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> out;
    out.reserve(row.size());
    for (const auto& v : row) out.push_back(Integer(v.get_num() * (l / v.get_den())));
    m.push_back(std::move(out));
  }
  return rank_bareiss(std::move(m));
}

bool SparseEchelon::insert(SparseRow row) {
  Integer g, a, b;
  while (!row.empty()) {
    const std::size_t lead = row.front().first;
    if (lead >= pivots_.size()) throw std::out_of_range("SparseEchelon: column out of range");
    const SparseRow& pivot = pivots_[lead];
    if (pivot.empty()) {
      make_primitive(row);
      pivots_[lead] = std::move(row);
      ++rank_;
      return true;
    }
    // row <- a*row - b*pivot with a = pivot_lead/g, b = row_lead/g.
    mpz_gcd(g.get_mpz_t(), pivot.front().second.get_mpz_t(), row.front().second.get_mpz_t());
    mpz_divexact(a.get_mpz_t(), pivot.front().second.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), row.front().second.get_mpz_t(), g.get_mpz_t());
    SparseRow next;
    next.reserve(row.size() + pivot.size());
    std::size_t i = 1, j = 1;
    while (i < row.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
        next.emplace_back(row[i].first, Integer(a * row[i].second));
        ++i;
      } else if (i == row.size() || pivot[j].first < row[i].first) {
        next.emplace_back(pivot[j].first, Integer(-b * pivot[j].second));
        ++j;
      } else {
        Integer v = a * row[i].second - b * pivot[j].second;
        if (v != 0) next.emplace_back(row[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    row = std::move(next);
    if (!row.empty()) make_primitive(row);
  }
  return false;
}

std::size_t rank_sparse(std::vector<SparseRow> rows, std::size_t n_cols) {
  SparseEchelon echelon(n_cols);
  for (auto& r : rows) echelon.insert(std::move(r));
  return echelon.rank();
}

std::size_t rank_modular(std::span<const SparseRow> rows, std::size_t n_cols, std::uint64_t p) {
  using ModRow = std::vector<std::pair<std::size_t, std::uint64_t>>;
  if (p < 3 || p >= (std::uint64_t{1} << 63)) throw std::invalid_argument("rank_modular: bad modulus");
  static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long required");
  const Integer modulus(static_cast<unsigned long>(p));
  std::vector<ModRow> pivots(n_cols);
  std::size_t rank = 0;
  Integer residue;
  for (const auto& src : rows) {
    ModRow row;
    row.reserve(src.size());
    for (const auto& [col, v] : src) {
      mpz_fdiv_r(residue.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
      const std::uint64_t r = residue.get_ui();
      if (r) row.emplace_back(col, r);
    }
    while (!row.empty()) {
      const std::size_t lead = row.front().first;
      const ModRow& pivot = pivots[lead];
      if (pivot.empty()) {
        const std::uint64_t inv = inv_mod(row.front().second, p);
        for (auto& e : row) e.second = mul_mod(e.second, inv, p);
        pivots[lead] = std::move(row);
        ++rank;
        break;
      }
      // Pivots are monic: row <- row - lead * pivot.
      const std::uint64_t factor = row.front().second;
      ModRow next;
      next.reserve(row.size() + pivot.size());
      std::size_t i = 1, j = 1;
      while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
          next.push_back(row[i++]);
        } else if (i == row.size() || pivot[j].first < row[i].first) {
          next.emplace_back(pivot[j].first, p - mul_mod(factor, pivot[j].second, p));
          ++j;
        } else {
          const std::uint64_t sub = mul_mod(factor, pivot[j].second, p);
          const std::uint64_t v = row[i].second >= sub ? row[i].second - sub : row[i].second + (p - sub);
          if (v) next.emplace_back(row[i].first, v);
          ++i;
          ++j;
        }
      }
      row = std::move(next);
    }
  }
  return rank;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for all 64-bit integers.
  for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    a %= n;
    if (a == 0) continue;
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t random_prime(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t low = std::uint64_t{1} << 61;
  std::uniform_int_distribution<std::uint64_t> dist(low, 2 * low - 1);
  for (;;) {
    const std::uint64_t candidate = dist(rng) | 1;
    if (is_prime(candidate)) return candidate;
  }
}

}  // namespace halphen
