#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bcgrass/rational.hpp"

namespace bcgrass {

/// H_k = 1 + 1/2 + ... + 1/k as an exact rational; H_0 = 0.
/// Backed by a shared write-once cache, safe for concurrent callers.
Rat harmonic(int k);

/// Precomputed table H_0..H_max_index, for callers that want a plain lookup.
class HarmonicTable {
public:
    explicit HarmonicTable(int max_index);
    const Rat& at(int k) const;
    int max_index() const { return static_cast<int>(cache_.size()) - 1; }

private:
    std::vector<Rat> cache_;
};

/// One verified identity instance. holds is true exactly when lhs == rhs.
struct IdentityReport {
    std::string identity;
    std::vector<std::pair<std::string, long long>> params;
    Rat lhs;
    Rat rhs;
    bool holds = false;

    static IdentityReport make(std::string identity,
                               std::vector<std::pair<std::string, long long>> params,
                               Rat lhs, Rat rhs);
};

/// sum_{i=q-s}^{n-p} C(n-i,p) C(s+i,q) H_{s+i}
///   == C(n+s+1,p+q+1) (H_{n+s+1} - H_{p+q+1} + H_q).
/// The final harmonic index is q: the printed form with H_p fails already at
/// (n,p,q,s) = (2,1,0,0), and the q-form is the one the Chern computation
/// consumes downstream. An empty summation range gives lhs = 0.
IdentityReport verify_identity_sum(int n, int p, int q, int s);

/// The same sum with the harmonic factors removed:
/// sum C(n-i,p) C(s+i,q) == C(n+s+1,p+q+1).
IdentityReport verify_identity_binomial(int n, int p, int q, int s);

/// sum_{i=0}^{s} (-1)^{i+1} C(n; i, s-i) H_{n-s+i} == 1/s for n >= s >= 1.
/// Throws std::invalid_argument when n < s.
IdentityReport verify_identity_trinomial(int n, int s);

/// Checks, as truncated formal series, that sum_k H_k t^k = log(1-t)/(t-1) up
/// to order N, and that t log(1+xt)/(1+xt) has t^{i+1}-coefficient
/// (-1)^{i+1} H_i x^i for i <= N. Reported lhs/rhs are the order-N
/// coefficients of the first series.
IdentityReport harmonic_gf_check(int N);

}  // namespace bcgrass
