#pragma once

#include <cstdint>
#include <vector>

#include "niho/distribution.hpp"
#include "niho/params.hpp"

namespace niho {

// N_k: the count entering the moment right-hand sides. N_0 = 1, N_1 = 0; for
// k >= 2 it is the partition sum
//   k! e^k sum over {lambda_j >= 0 : sum_{j>=2} j lambda_j = k} of
//     C((r+1)/e, L) L! prod_j (B_j/j!)^{lambda_j} / lambda_j!,  L = sum lambda_j,
// with B_j = ((r-1)^j + (-1)^j (r-1)) / r. Exact; requires e | r+1.
BigInt N_k(uint64_t r, uint64_t e, unsigned k);

// w_j = (q-1)/(q delta) (r^2 - (je-1) r) for j = 0..s-1 where s = 2t+1
// (family 1) or 2t (family 2). Strictly decreasing; integrality asserted.
std::vector<uint64_t> theoretical_weights(const CodeSpec& spec, const DerivedParams& d);

// The exact Vandermonde moment system: nodes x_j = jer - r - 1, matrix
// m_ij = x_j^i, right-hand side b_i = r^s N_i - (r^2-1)^i, solution mu.
struct MomentSystem {
    unsigned size = 0;
    std::vector<int64_t> nodes;
    std::vector<BigInt> b;
    std::vector<BigInt> mu;
};

MomentSystem solve_moment_system(const CodeSpec& spec, const DerivedParams& d);

// Closed-form weight distribution via the moment system. Pre: conditions
// pass. Throws std::logic_error if any solved frequency is negative or
// fractional.
WeightDistribution solve_distribution(const CodeSpec& spec, const DerivedParams& d);

// Independent closed forms for the small cases: family 1 t=1, family 2 t=1,
// family 2 t=2. Throws std::invalid_argument outside that domain.
WeightDistribution corollary_tables(const CodeSpec& spec, const DerivedParams& d);

// Griesmer bound: minimal length of any [n, k, d] code over GF(q).
uint64_t griesmer_bound(unsigned k, uint64_t d, uint64_t q);

struct GriesmerReport {
    uint64_t bound = 0;
    bool admissible = false;  // n >= bound
    bool meets = false;       // n == bound
};
GriesmerReport griesmer_check(uint64_t n, unsigned k, uint64_t d, uint64_t q);

}  // namespace niho
