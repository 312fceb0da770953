// Exact overlap counts f(n,k) and f1(n,k) against the identity path.

#include <cstdio>

#include "hyperfpp/fnk.hpp"

int main() {
  using namespace hyperfpp;
  for (int n = 3; n <= 8; ++n) {
    const FnkTable t = count_fnk(n);
    std::printf("n=%d\n  f :", n);
    for (auto v : t.f) std::printf(" %llu", static_cast<unsigned long long>(v));
    std::printf("\n  f1:");
    for (auto v : t.f1) std::printf(" %llu", static_cast<unsigned long long>(v));
    std::printf("\n");
  }
}
