#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "polemono/exact_elim.hpp"
#include "polemono/mod_elim.hpp"
#include "polemono/modular.hpp"
#include "polemono/rank.hpp"
#include "polemono/sparse_matrix.hpp"

using namespace polemono;

namespace {

SparseMatrix identity(long n) {
  SparseMatrix m(n, n);
  for (long i = 0; i < n; ++i) m.add(i, i, Rational(1));
  m.finalize();
  return m;
}

// Random matrix with entries in {-5,...,5} at the given fill rate (per mille);
// deterministic in the seed.
SparseMatrix random_matrix(long rows, long cols, u64 seed, int fill_permille = 400) {
  SparseMatrix m(rows, cols);
  u64 state = splitmix64(seed ^ 0x9e3779b97f4a7c15ull);
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c) {
      state = splitmix64(state);
      if (state % 1000 >= static_cast<u64>(fill_permille)) continue;
      long v = static_cast<long>((state >> 32) % 11) - 5;
      if (v != 0) m.add(r, c, Rational(v));
    }
  m.finalize();
  return m;
}

// Rank-r matrix built as a product of an (rows x r) and an (r x cols) dense
// random integer matrix with an embedded identity, so the rank is exactly r.
SparseMatrix known_rank(long rows, long cols, long r, u64 seed) {
  std::vector<std::vector<long>> a(rows, std::vector<long>(r, 0));
  std::vector<std::vector<long>> b(r, std::vector<long>(cols, 0));
  u64 state = splitmix64(seed);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < r; ++j) {
      state = splitmix64(state);
      a[i][j] = static_cast<long>(state % 7) - 3;
    }
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < cols; ++j) {
      state = splitmix64(state);
      b[i][j] = static_cast<long>(state % 7) - 3;
    }
  // Identity blocks guarantee both factors have full rank r.
  for (long i = 0; i < r; ++i) {
    a[i][i] = 1;
    for (long j = 0; j < r; ++j)
      if (j != i) a[i][j] = 0;
    b[i][i] = 1;
  }
  SparseMatrix m(rows, cols);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) {
      long s = 0;
      for (long k = 0; k < r; ++k) s += a[i][k] * b[k][j];
      if (s != 0) m.add(i, j, Rational(s));
    }
  m.finalize();
  return m;
}

SparseMatrix permuted_scaled(const SparseMatrix& m, u64 seed) {
  std::vector<long> rperm(m.rows()), cperm(m.cols());
  for (long i = 0; i < m.rows(); ++i) rperm[i] = i;
  for (long i = 0; i < m.cols(); ++i) cperm[i] = i;
  u64 state = splitmix64(seed);
  for (long i = m.rows() - 1; i > 0; --i) {
    state = splitmix64(state);
    std::swap(rperm[i], rperm[static_cast<long>(state % static_cast<u64>(i + 1))]);
  }
  for (long i = m.cols() - 1; i > 0; --i) {
    state = splitmix64(state);
    std::swap(cperm[i], cperm[static_cast<long>(state % static_cast<u64>(i + 1))]);
  }
  std::vector<long> rscale(m.rows());
  for (long i = 0; i < m.rows(); ++i) {
    state = splitmix64(state);
    long s = static_cast<long>(state % 5) + 1;
    rscale[i] = (s == 3 ? -2 : s);  // nonzero, occasionally negative
  }
  SparseMatrix out(m.rows(), m.cols());
  for (const auto& e : m.entries())
    out.add(rperm[e.row], cperm[e.col], e.value * Rational(rscale[e.row]));
  out.finalize();
  return out;
}

}  // namespace

TEST_CASE("sparse matrix merges duplicates and drops zeros on finalize") {
  SparseMatrix m(3, 3);
  m.add(0, 0, Rational(2));
  m.add(0, 0, Rational(-2));       // cancels to zero
  m.add(1, 2, make_rational(1, 3));
  m.add(1, 2, make_rational(2, 3));  // merges to 1
  m.add(2, 1, Rational(0));          // silently ignored
  m.finalize();
  REQUIRE(m.nnz() == 1);
  REQUIRE(m.entries()[0].row == 1);
  REQUIRE(m.entries()[0].col == 2);
  REQUIRE(m.entries()[0].value == 1);
  REQUIRE_THROWS_AS(m.add(3, 0, Rational(1)), InternalError);
}

TEST_CASE("dump writes the canonical triplet format and load inverts it") {
  SparseMatrix m(2, 3);
  m.add(1, 2, make_rational(-7, 2));
  m.add(0, 0, Rational(4));
  m.finalize();

  std::ostringstream os;
  m.dump(os);
  REQUIRE(os.str() == "2 3 2\n0 0 4/1\n1 2 -7/2\n");

  std::istringstream is(os.str());
  SparseMatrix back = SparseMatrix::load(is);
  REQUIRE(back.rows() == 2);
  REQUIRE(back.cols() == 3);
  REQUIRE(back.nnz() == 2);
  REQUIRE(back.entries()[1].value == make_rational(-7, 2));

  std::istringstream junk("2 2 1\n0 0 1/0\n");
  REQUIRE_THROWS_AS(SparseMatrix::load(junk), IoError);
  std::istringstream truncated("2 2 1\n");
  REQUIRE_THROWS_AS(SparseMatrix::load(truncated), IoError);
}

TEST_CASE("modular rank on elementary matrices") {
  REQUIRE(rank_mod_p(identity(5), 1000003) == 5);
  REQUIRE(rank_mod_p(SparseMatrix(4, 7), 1000003) == 0);

  SparseMatrix m(3, 3);  // row 2 = row 0 + row 1
  m.add(0, 0, Rational(1));
  m.add(0, 1, Rational(2));
  m.add(1, 1, Rational(1));
  m.add(1, 2, Rational(5));
  m.add(2, 0, Rational(1));
  m.add(2, 1, Rational(3));
  m.add(2, 2, Rational(5));
  m.finalize();
  REQUIRE(rank_mod_p(m, 1000003) == 2);
  REQUIRE(rank_exact(m) == 2);
}

TEST_CASE("a prime dividing a denominator is rejected, not mangled") {
  SparseMatrix m(1, 1);
  m.add(0, 0, make_rational(1, 1000003));
  m.finalize();
  REQUIRE_THROWS_AS(rank_mod_p(m, 1000003), BadPrimeError);
  REQUIRE(rank_mod_p(m, 999983) == 1);

  // The certified path skips bad primes and still reaches agreement.
  RankPolicy policy;
  RankCertificate cert = rank_certified(m, policy);
  REQUIRE(cert.rank == 1);
  REQUIRE(cert.agreement == 2);
}

TEST_CASE("rank certificates record primes and agreement") {
  RankPolicy policy;
  policy.n_primes = 2;
  policy.seed = 42;
  RankCertificate cert = rank_certified(identity(5), policy);
  REQUIRE(cert.rank == 5);
  REQUIRE(cert.method == RankCertificate::Method::modular);
  REQUIRE(cert.primes_used.size() == 2);
  REQUIRE(cert.primes_used[0] != cert.primes_used[1]);
  REQUIRE(cert.agreement == 2);

  policy.exact = true;
  RankCertificate ex = rank_certified(identity(5), policy);
  REQUIRE(ex.rank == 5);
  REQUIRE(ex.method == RankCertificate::Method::exact);
  REQUIRE(ex.primes_used.empty());
}

TEST_CASE("kernel dimension complements the rank") {
  RankPolicy policy;
  for (u64 seed = 1; seed <= 8; ++seed) {
    SparseMatrix m = known_rank(12, 9, 4, seed);
    REQUIRE(rank_certified(m, policy).rank == 4);
    REQUIRE(kernel_dim(m, policy) == 5);
  }
}

TEST_CASE("modular and exact elimination agree on random matrices") {
  RankPolicy policy;
  for (u64 seed = 1; seed <= 200; ++seed) {
    long rows = 1 + static_cast<long>(splitmix64(seed) % 14);
    long cols = 1 + static_cast<long>(splitmix64(seed + 999) % 14);
    SparseMatrix m = random_matrix(rows, cols, seed);
    long exact = rank_exact(m);
    REQUIRE(rank_certified(m, policy).rank == exact);
    REQUIRE(rank_mod_p(m, 1000003) == exact);
  }
}

TEST_CASE("rank is invariant under row/column permutation and row scaling") {
  RankPolicy policy;
  for (u64 seed = 1; seed <= 10; ++seed) {
    SparseMatrix m = known_rank(10, 11, 6, seed);
    SparseMatrix p = permuted_scaled(m, seed * 77 + 1);
    REQUIRE(rank_exact(p) == 6);
    REQUIRE(rank_certified(p, policy).rank == 6);
  }
}

TEST_CASE("prime sequence is deterministic in the seed and produces primes") {
  PrimeSequence a(7), b(7), c(8);
  std::vector<u64> av, bv;
  bool differs = false;
  for (u64 i = 0; i < 5; ++i) {
    av.push_back(a.at(i));
    bv.push_back(b.at(i));
    if (a.at(i) != c.at(i)) differs = true;
  }
  REQUIRE(av == bv);
  REQUIRE(differs);
  for (u64 p : av) {
    REQUIRE(p > (1ull << 61));
    REQUIRE(p % 2 == 1);
  }
}
