#include "halphen/graded_dim.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>

#include "halphen/exact_rank.hpp"

namespace halphen {

namespace {

// Integer multiple of g with the same support: scale by the lcm of the
// denominators.
std::vector<std::pair<Monomial, Integer>> integer_terms(const Polynomial& g) {
  Integer l = 1;
  for (const auto& t : g.terms())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coefficient.get_den_mpz_t());
  std::vector<std::pair<Monomial, Integer>> out;
  out.reserve(g.size());
  for (const auto& t : g.terms())
    out.emplace_back(t.monomial, Integer(t.coefficient.get_num() * (l / t.coefficient.get_den())));
  return out;
}

std::vector<SparseRow> macaulay_rows(const IdealSpec& ideal, const GradedPieceBasis& basis) {
  const std::uint64_t m = basis.degree();
  std::vector<SparseRow> rows;
  for (const auto& g : ideal.generators()) {
    const std::uint64_t d = *g.total_degree();
    if (d > m) continue;
    const auto terms = integer_terms(g);
    for (const auto& u : enumerate_monomials(ideal.n_vars(), m - d)) {
      SparseRow row;
      row.reserve(terms.size());
      for (const auto& [mono, c] : terms) row.emplace_back(basis.index_of(u * mono), c);
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace

GradedPieceBasis::GradedPieceBasis(std::size_t n_vars, std::uint64_t degree)
    : degree_(degree), monomials_(enumerate_monomials(n_vars, degree)) {
  index_.reserve(monomials_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::size_t monomial_count(std::size_t n_vars, std::uint64_t degree) {
  const Integer c = binomial(static_cast<std::int64_t>(degree + n_vars) - 1,
                             static_cast<std::int64_t>(n_vars) - 1);
  return c.get_ui();
}

std::size_t ideal_piece_dimension(const IdealSpec& ideal, std::uint64_t m,
                                  const GradedDimOptions& options) {
  const bool any = std::any_of(ideal.generators().begin(), ideal.generators().end(),
                               [m](const Polynomial& g) { return *g.total_degree() <= m; });
  if (!any) return 0;
  const GradedPieceBasis basis(ideal.n_vars(), m);
  auto rows = macaulay_rows(ideal, basis);
  switch (options.engine) {
    case RankEngine::sparse_exact:
      return rank_sparse(std::move(rows), basis.size());
    case RankEngine::dense_bareiss: {
      IntegerMatrix dense(rows.size(), std::vector<Integer>(basis.size()));
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (auto& [col, v] : rows[i]) dense[i][col] = std::move(v);
      return rank_bareiss(std::move(dense));
    }
    case RankEngine::modular: {
      const std::uint64_t p = options.modulus ? options.modulus : random_prime(options.seed);
      return rank_modular(rows, basis.size(), p);
    }
  }
  return 0;
}

std::size_t hilbert_function(const IdealSpec& ideal, std::uint64_t m,
                             const GradedDimOptions& options) {
  return monomial_count(ideal.n_vars(), m) - ideal_piece_dimension(ideal, m, options);
}

std::vector<std::size_t> HilbertFunctionTable::as_vector() const {
  std::vector<std::size_t> out;
  out.reserve(values.size());
  for (const auto& [m, h] : values) out.push_back(h);
  return out;
}

unsigned worker_count(unsigned requested) {
  if (requested) return requested;
  if (const char* env = std::getenv("HALPHEN_THREADS")) {
    try {
      const long n = std::stol(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

HilbertFunctionTable hilbert_function_table(const IdealSpec& ideal, std::uint64_t m_max,
                                            const GradedDimOptions& options) {
  const std::size_t n_degrees = m_max + 1;
  std::vector<std::size_t> results(n_degrees);
  std::vector<std::exception_ptr> errors(n_degrees);
  // Higher degrees dominate the cost, so hand them out first.
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < n_degrees;) {
      const std::uint64_t m = m_max - k;
      try {
        results[m] = hilbert_function(ideal, m, options);
      } catch (...) {
        errors[m] = std::current_exception();
      }
    }
  };
  const unsigned n_workers =
      static_cast<unsigned>(std::min<std::size_t>(worker_count(options.threads), n_degrees));
  if (n_workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < n_workers; ++i) pool.emplace_back(work);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  HilbertFunctionTable table{ideal, {}};
  for (std::uint64_t m = 0; m < n_degrees; ++m) table.values.emplace(m, results[m]);
  return table;
}

}  // namespace halphen
