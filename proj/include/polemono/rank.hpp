#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polemono/errors.hpp"
#include "polemono/exact_elim.hpp"
#include "polemono/mod_elim.hpp"
#include "polemono/modular.hpp"
#include "polemono/sparse_matrix.hpp"

namespace polemono {

struct RankPolicy {
  int n_primes = 2;      // independent primes that must agree
  bool exact = false;    // route everything through fraction-free elimination
  u64 seed = 1;          // drives the deterministic prime sequence
  int max_prime_retries = 32;
};

struct RankCertificate {
  long rank = 0;
  enum class Method { modular, exact } method = Method::modular;
  std::vector<u64> primes_used;
  int agreement = 0;  // how many primes reported the final rank
};

// Certified rank. Modular ranks can only underestimate (a prime may kill a
// nonzero minor), so the certified value is the maximum over the sampled
// primes; disagreement between primes is astronomically unlikely with
// random ~62-bit moduli but is still recorded in the certificate.
inline RankCertificate rank_certified(const SparseMatrix& m, const RankPolicy& policy) {
  RankCertificate cert;
  if (policy.exact) {
    cert.method = RankCertificate::Method::exact;
    cert.rank = rank_exact(m);
    cert.agreement = 1;
    return cert;
  }
  if (policy.n_primes < 1) throw InternalError("rank policy needs at least one prime");
  PrimeSequence primes(policy.seed);
  std::vector<long> ranks;
  u64 index = 0;
  int retries = 0;
  while (static_cast<int>(ranks.size()) < policy.n_primes) {
    u64 p = primes.at(index++);
    try {
      ranks.push_back(rank_mod_p(m, p));
      cert.primes_used.push_back(p);
    } catch (const BadPrimeError&) {
      if (++retries > policy.max_prime_retries)
        throw BadPrimeError("exhausted prime retries; denominators divide every sampled prime");
    }
  }
  cert.rank = *std::max_element(ranks.begin(), ranks.end());
  for (long r : ranks)
    if (r == cert.rank) ++cert.agreement;
  return cert;
}

inline long kernel_dim(const SparseMatrix& m, const RankPolicy& policy) {
  return m.cols() - rank_certified(m, policy).rank;
}

}  // namespace polemono
