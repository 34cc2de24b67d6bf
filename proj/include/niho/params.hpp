#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "niho/fields.hpp"

namespace niho {

// Raw inputs selecting one code. h and f may be any integers (reduced
// internally); family is 1 or 2.
struct CodeSpec {
    int family = 1;
    uint64_t p = 2;
    unsigned l = 1;
    unsigned m = 1;
    long long h = 1;
    long long f = 1;
    unsigned t = 1;
};

// Everything computed from a CodeSpec.
struct DerivedParams {
    uint64_t q = 0, r = 0, r2 = 0;
    uint64_t e = 0;
    uint64_t delta = 0;
    uint64_t n = 0;
    std::vector<uint64_t> exponents;  // family 1: d_0..d_t; family 2: d_1..d_t
    unsigned dim = 0;                 // (2t+1)m or 2tm
    // family 2 only: the two gcd variants (single exponent vs chain); the
    // active one is `delta`. Zero for family 1.
    uint64_t delta_single = 0, delta_chain = 0;
    // false when family 2 with p odd and h !== f (mod 2): the exponents are
    // not defined. Reported as a condition failure, never fixed silently.
    bool exponents_valid = true;
};

struct ConditionCheck {
    std::string label;    // "a", "b", "c", "a'", "b'", "c1'", "c2'"
    bool applicable = false;
    bool pass = false;
    std::string detail;
};

struct ConditionReport {
    int family = 1;
    uint64_t p = 2;
    std::vector<ConditionCheck> checks;
    std::vector<std::string> notes;
    // Family 1: a && b && c. Family 2: a' && b' for p = 2,
    // a' && (c1' || c2') for p odd.
    bool pass() const;
};

DerivedParams derive(const CodeSpec& spec);
ConditionReport check_conditions(const CodeSpec& spec, const DerivedParams& d);

// Size of the orbit of d under multiplication by q mod (r^2 - 1); this is
// the degree of the minimal polynomial of gamma^(-d) over GF(q) and is the
// ground truth the closed form below is checked against.
unsigned minpoly_degree(uint64_t d, uint64_t q, uint64_t r2);
bool same_minpoly(uint64_t d1, uint64_t d2, uint64_t q, uint64_t r2);

// Closed form: write d = s(r-1) + D with D = d mod (r-1). When
// (D, (r-1)/(q-1)) = 1, or D is even and (D/2, (r-1)/(q-1)) = 1, the degree
// is m if D == 2s (mod r+1) and 2m otherwise. Returns nullopt when the
// hypothesis fails.
std::optional<unsigned> minpoly_degree_closed_form(uint64_t d, uint64_t q, uint64_t r,
                                                   unsigned m);

// Sum of minimal-polynomial degrees over the exponent list; asserts the sum
// matches the dimension formula and that the minimal polynomials are
// pairwise distinct (throws std::logic_error otherwise). Pre: conditions
// pass.
unsigned dimension(const CodeSpec& spec, const DerivedParams& d);

}  // namespace niho
