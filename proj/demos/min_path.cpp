// Exact minimal path weight m_n for a few replicas, next to the first-moment
// bound on P(m_n <= 0.9).

#include <cstdio>

#include "hyperfpp/hyperfpp.hpp"

int main() {
  using namespace hyperfpp;
  const Seed seed{2024};
  for (int n : {8, 12, 16}) {
    std::printf("n=%d  P(m_n <= 0.9) <= %.4g\n", n, markov_upper(n, 0.9));
    for (std::uint64_t r = 0; r < 3; ++r) {
      const FppResult res = min_path(n, derive_replica(seed, r));
      std::printf("  replica %llu: m_n = %.6f  path = %s\n", static_cast<unsigned long long>(r), res.min_weight,
                  format_path(res.argmin).c_str());
    }
  }
}
