#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace niho {

using BigInt = boost::multiprecision::cpp_int;

// Exact weight distribution of one code: weight -> frequency, including the
// zero codeword as {0: 1}. Frequencies are arbitrary precision.
struct WeightDistribution {
    uint64_t n = 0;
    unsigned k = 0;
    uint64_t q = 0;
    std::string method;  // "brute-force", "accelerated", "vandermonde", "corollary-table"
    std::map<uint64_t, BigInt> freq;
    // Weights the closed form allows but that occur zero times (diagnostic;
    // excluded from freq and from the enumerator polynomial).
    std::vector<uint64_t> zero_frequency_weights;

    uint64_t min_distance() const;  // least w > 0 with freq > 0
    BigInt total() const;
    // Ascending-weight polynomial, e.g. "1+2040Y^{60}+255Y^{64}+1800Y^{68}".
    std::string enumerator_string() const;
    // Equality of the code data (n, k, q, freq); ignores method and diagnostics.
    bool same_distribution(const WeightDistribution& other) const;
};

}  // namespace niho
