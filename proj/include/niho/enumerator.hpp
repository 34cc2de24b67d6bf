#pragma once

#include <cstdint>
#include <vector>

#include "niho/distribution.hpp"
#include "niho/fields.hpp"
#include "niho/params.hpp"

namespace niho {

// The message indexing one codeword: a0 in GF(r) (family 1 only) and
// a_1..a_t in GF(r^2).
struct CoefficientTuple {
    Elem a0{};
    std::vector<Elem> a;
};

struct EnumerationOptions {
    uint64_t budget = uint64_t(1) << 28;  // max tuple count without long_run
    bool long_run = false;
    unsigned workers = 1;
    uint64_t seed = 0x6e69686fu;  // family-2 accelerated cross-validation sampling
};

// Per-spec enumeration context: gamma-power tables for codeword generation,
// unit-circle power tables for the root-count path, and the GF(p)-linear
// increment vectors both exhaustive paths walk with. Read-only after
// construction; safe to share across worker threads.
class CodeContext {
public:
    CodeContext(const CodeSpec& spec, const DerivedParams& d, const FieldTower& tower);
    CodeContext(const CodeSpec& spec, const DerivedParams& d, const FieldTower& tower,
                Elem gamma);

    const CodeSpec& spec() const { return spec_; }
    const DerivedParams& derived() const { return derived_; }
    const FieldTower& tower() const { return tower_; }

    // Number of coefficient tuples = q^k; throws when it exceeds 2^63.
    uint64_t tuple_count() const { return tuple_count_; }
    unsigned tuple_digits() const { return digits_; }  // GF(p)-dimension of the tuple space

    // Tuples are indexed lexicographically: a0's coefficients are the most
    // significant base-p digits, a_t's coefficient of x^0 the least.
    CoefficientTuple tuple_from_index(uint64_t idx) const;

    // Codeword straight from the trace definition; symbol i is
    // Tr_{r/q}(a0 g^{d_0 i}) + sum_j Tr_{r^2/q}(a_j g^{d_j i}).
    std::vector<Elem> codeword(const CoefficientTuple& a) const;
    uint64_t codeword_weight(const CoefficientTuple& a) const;

    // Same weight through the precomputed GF(p)-linear increments (the path
    // the exhaustive enumeration uses); tuple given by index.
    uint64_t codeword_weight_by_index(uint64_t idx) const;

    // N = #{z in U : F(z) = 0} with the family/case form of F, and the
    // weight (q-1)(r^2 - (N-1)r)/(q delta) it implies. N is checked against
    // the admissible set {0, e, ..., s_max e} (plus r+1 for the zero tuple).
    uint64_t root_count(const CoefficientTuple& a) const;
    uint64_t weight_from_root_count(uint64_t N, bool zero_tuple) const;
    uint64_t fast_weight(const CoefficientTuple& a) const;
    uint64_t fast_weight_by_index(uint64_t idx) const;

    // Exhaustive distribution by walking all q^k tuples and counting nonzero
    // codeword symbols. Throws when the tuple count exceeds opts.budget and
    // long_run is not set.
    WeightDistribution brute_force_distribution(const EnumerationOptions& opts = {}) const;

    // Exhaustive distribution via the root-count state (|U| values instead
    // of n symbols per tuple). For family 2 the form is derived, not proved,
    // so it is cross-validated against direct codeword weights on a sample
    // before the run; any mismatch aborts.
    WeightDistribution accelerated_distribution(const EnumerationOptions& opts = {}) const;

private:
    CodeSpec spec_;
    DerivedParams derived_;
    const FieldTower& tower_;
    Elem gamma_;
    uint64_t tuple_count_ = 0;
    unsigned digits_ = 0;

    std::vector<Elem> gf_r_basis_;                  // eta^i, eta = gamma^{r+1}
    std::vector<std::vector<Elem>> gamma_pow_;      // [j][i] = gamma^{d_j i}
    std::vector<std::vector<Elem>> unit_pow_;       // [z][j] -> {z^{ea_j}, z^{eb_j}} flattened
    bool has_a0_ = false;
    unsigned max_root_multiple_ = 0;                // s_max: N in {0, e, .., s_max e}

    unsigned pad_ = 0;  // bytes per state element, multiple of 8
    std::vector<std::vector<uint64_t>> inc_direct_;  // per digit: n-symbol state delta
    std::vector<std::vector<uint64_t>> inc_fast_;    // per digit: |U|-value state delta

    CoefficientTuple basis_tuple(unsigned pos) const;
    std::vector<Elem> root_values(const CoefficientTuple& a) const;  // F(z) for z in U
    std::vector<uint64_t> state_to_words(const std::vector<Elem>& vals) const;
    std::vector<uint64_t> zero_count_histogram(const std::vector<std::vector<uint64_t>>& inc,
                                               unsigned nelems, uint64_t begin, uint64_t end) const;
    std::vector<uint64_t> run_kernel(const std::vector<std::vector<uint64_t>>& inc,
                                     unsigned nelems, const EnumerationOptions& opts) const;
    void check_budget(const EnumerationOptions& opts) const;
};

}  // namespace niho
