#ifndef CIST_CONDITION_HPP
#define CIST_CONDITION_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "cist/errors.hpp"
#include "cist/hypercube.hpp"

namespace cist {

// Necessary conditions for a k-regular, k-connected graph on nv vertices to
// contain floor(k/2) CISTs, and their consequences for Q_n with n even.

template <class Int>
Int ceil_div(const Int& a, const Int& b) {
  return (a + b - 1) / b;
}

template <class Int>
Int floor_div(const Int& a, const Int& b) {
  return a / b;
}

enum class ConditionVariant { regular, bipartite };

inline const char* to_string(ConditionVariant v) { return v == ConditionVariant::regular ? "regular" : "bipartite"; }

template <class Int = std::uint64_t>
struct ConditionReport {
  Int lhs{};
  Int rhs{};
  bool holds = false; // lhs <= rhs
  ConditionVariant variant = ConditionVariant::regular;
  Int k{};
  Int nv{};
};

/// ceil((nv - 2) / ceil(k/2)) <= floor(nv / floor(k/2)), any k-regular graph.
template <class Int = std::uint64_t>
ConditionReport<Int> condition_regular(Int k, Int nv) {
  if (k < 2) throw DomainError("condition needs k >= 2");
  if (nv < 2) throw DomainError("condition needs at least two vertices");
  const Int up = (k + 1) / 2;
  const Int down = k / 2;
  ConditionReport<Int> r;
  r.lhs = ceil_div<Int>(nv - 2, up);
  r.rhs = floor_div<Int>(nv, down);
  r.holds = r.lhs <= r.rhs;
  r.variant = ConditionVariant::regular;
  r.k = k;
  r.nv = nv;
  return r;
}

/// Bipartite refinement with m = nv/2 per side:
/// ceil((m - 1) / ceil(k/2)) <= floor(m / floor(k/2)).
template <class Int = std::uint64_t>
ConditionReport<Int> condition_bipartite(Int k, Int nv) {
  if (k < 2) throw DomainError("condition needs k >= 2");
  if (nv < 2 || nv % 2 != 0) throw DomainError("a regular bipartite graph has an even, positive vertex count");
  const Int m = nv / 2;
  const Int up = (k + 1) / 2;
  const Int down = k / 2;
  ConditionReport<Int> r;
  r.lhs = ceil_div<Int>(m - 1, up);
  r.rhs = floor_div<Int>(m, down);
  r.holds = r.lhs <= r.rhs;
  r.variant = ConditionVariant::bipartite;
  r.k = k;
  r.nv = nv;
  return r;
}

/// ceil((x-1)/k) > floor(x/k) whenever k divides neither x nor x-1. Throws
/// Inapplicable outside that case instead of answering.
inline bool lemma_strict(std::uint64_t x, std::uint64_t k) {
  if (x < 1 || k < 1) throw DomainError("x and k must be positive");
  if (x % k == 0 || (x - 1) % k == 0)
    throw Inapplicable("k = " + std::to_string(k) + " divides x or x - 1 for x = " + std::to_string(x));
  return ceil_div<std::uint64_t>(x - 1, k) > floor_div<std::uint64_t>(x, k);
}

/// base^exp mod `mod`, 128-bit intermediates.
inline std::uint64_t modpow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 0) throw DomainError("modulus must be positive");
  if (mod == 1) return 0;
  __extension__ using u128 = unsigned __int128;
  u128 result = 1;
  u128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

/// Whether m/2 divides 2^(m-1) - 1, for even m >= 4.
inline bool divides_exception(std::uint64_t m) {
  if (m < 4 || m % 2 != 0) throw DomainError("divides_exception needs even m >= 4, got " + std::to_string(m));
  const std::uint64_t d = m / 2;
  if (d % 2 == 0) return false; // 2^(m-1) - 1 is odd
  return modpow(2, m - 1, d) == 1;
}

/// Every even m in [4, limit] with divides_exception(m), ascending. Only
/// m = 2 (mod 4) can qualify, so only those are tested. The range is split
/// over `threads` workers (0 = hardware concurrency).
inline std::vector<std::uint64_t> search_exceptions(std::uint64_t limit, unsigned threads = 0) {
  if (limit < 6) return {};
  const std::uint64_t count = (limit - 6) / 4 + 1; // candidates 6, 10, 14, ...
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, count));

  std::vector<std::vector<std::uint64_t>> found(threads);
  auto scan = [&](unsigned t) {
    const std::uint64_t begin = count * t / threads;
    const std::uint64_t end = count * (t + 1) / threads;
    for (std::uint64_t i = begin; i < end; ++i) {
      const std::uint64_t m = 6 + 4 * i;
      if (modpow(2, m - 1, m / 2) == 1) found[t].push_back(m);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(scan, t);
  scan(0);
  for (auto& th : pool) th.join();

  std::vector<std::uint64_t> out;
  for (const auto& part : found) out.insert(out.end(), part.begin(), part.end());
  return out;
}

enum class VerdictClass { impossible, exception_power_of_two, exception_divisor, out_of_scope };

inline const char* to_string(VerdictClass c) {
  switch (c) {
  case VerdictClass::impossible: return "impossible";
  case VerdictClass::exception_power_of_two: return "exception-power-of-two";
  case VerdictClass::exception_divisor: return "exception-divisor";
  case VerdictClass::out_of_scope: return "out-of-scope";
  }
  return "unknown";
}

struct ConjectureVerdict {
  std::uint64_t n = 0;
  VerdictClass cls = VerdictClass::out_of_scope;
  std::string detail;
};

/// Whether Q_n can hold n/2 CISTs as far as the bipartite condition can
/// tell, for even n > 2. With k = n/2 and x = 2^(n-1) the condition holds
/// exactly when k divides x or x - 1; otherwise it fails and Q_n has no n/2
/// CISTs. Exceptional classes are not claims of existence.
inline ConjectureVerdict conjecture_verdict(std::uint64_t n) {
  if (n % 2 != 0 || n <= 2) return {n, VerdictClass::out_of_scope, "only even n > 2 are classified"};
  if (is_power_of_two(n)) return {n, VerdictClass::exception_power_of_two, "n/2 divides 2^(n-1)"};
  if (divides_exception(n)) return {n, VerdictClass::exception_divisor, "n/2 divides 2^(n-1) - 1"};
  return {n, VerdictClass::impossible, "n/2 divides neither 2^(n-1) nor 2^(n-1) - 1; bipartite condition fails"};
}

} // namespace cist

#endif // CIST_CONDITION_HPP
