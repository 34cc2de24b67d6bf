#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace niho {

// Element of GF(r^2) in the flat representation GF(p)[x]/(modulus).
// Coefficients are packed into one 64-bit word, digit_bits bits per digit,
// digit i = coefficient of x^i. Plain data; freely copyable between threads.
struct Elem {
    uint64_t bits = 0;
    friend bool operator==(Elem a, Elem b) { return a.bits == b.bits; }
    friend bool operator!=(Elem a, Elem b) { return a.bits != b.bits; }
    friend bool operator<(Elem a, Elem b) { return a.bits < b.bits; }
};

// The chain GF(p) c GF(q=p^l) c GF(r=q^m) c GF(r^2), realized as one flat
// field GF(p)[x]/(modulus) of degree 2lm with subfields as Frobenius-fixed
// subsets. The modulus is the least monic irreducible polynomial in
// coefficient order, and gamma is the least element of multiplicative order
// r^2-1; both searches are deterministic, so two towers with the same
// (p, l, m) are identical. Immutable after construction.
class FieldTower {
public:
    // Rejects non-prime p and sizes with r^2 > 2^32.
    static FieldTower build(uint64_t p, unsigned l, unsigned m);

    uint64_t p() const { return p_; }
    unsigned l() const { return l_; }
    unsigned m() const { return m_; }
    uint64_t q() const { return q_; }
    uint64_t r() const { return r_; }
    uint64_t r2() const { return r2_; }
    unsigned deg() const { return deg_; }           // 2lm
    unsigned digit_bits() const { return digit_bits_; }

    Elem zero() const { return Elem{0}; }
    Elem one() const { return Elem{1}; }
    Elem gamma() const { return gamma_; }

    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const;
    Elem mul_scalar(Elem a, uint64_t c) const;      // c in [0, p)
    Elem pow(Elem a, uint64_t n) const;
    Elem inv(Elem a) const;                         // throws on zero
    Elem conj(Elem a) const;                        // x -> x^r
    Elem frobenius(Elem a, unsigned k) const;       // x -> x^(q^k)

    bool in_gf_q(Elem a) const;                     // a^q == a
    bool in_gf_r(Elem a) const;                     // a^r == a

    // Tr_{r/q}; requires a in GF(r), else throws std::domain_error.
    Elem trace_r_to_q(Elem a) const;
    // Tr_{r^2/q}; defined on all of GF(r^2).
    Elem trace_r2_to_q(Elem a) const;

    // Bijection GF(r^2) <-> [0, r^2) via base-p digit evaluation.
    uint64_t canonical_index(Elem a) const;
    Elem elem_from_index(uint64_t idx) const;

    std::vector<uint32_t> coeffs(Elem a) const;     // length deg
    Elem elem_from_coeffs(const std::vector<uint32_t>& c) const;

    // One byte per GF(p) coefficient; out must have room for deg() bytes.
    void to_bytes(Elem a, uint8_t* out) const;

    uint64_t multiplicative_order(Elem a) const;    // throws on zero

    const std::vector<uint32_t>& modulus() const { return modulus_; }  // deg+1 coeffs
    const std::vector<uint64_t>& r2m1_prime_factors() const { return r2m1_factors_; }

private:
    FieldTower() = default;

    uint64_t p_ = 0, q_ = 0, r_ = 0, r2_ = 0;
    unsigned l_ = 0, m_ = 0, deg_ = 0;
    unsigned digit_bits_ = 0;
    uint64_t digit_mask_ = 0;
    std::vector<uint32_t> modulus_;     // monic, degree deg
    uint64_t modulus_packed_ = 0;       // p = 2 fast path (includes x^deg bit)
    Elem gamma_{};
    std::vector<uint64_t> r2m1_factors_;
    std::vector<Elem> frob_q_basis_;    // (x^i)^q
    std::vector<Elem> conj_basis_;      // (x^i)^r
    std::vector<Elem> tr_r_basis_;      // sum_{k<m} (x^i)^(q^k)
    std::vector<Elem> tr_r2_basis_;     // sum_{k<2m} (x^i)^(q^k)

    Elem apply_linear(Elem a, const std::vector<Elem>& basis_images) const;
    void build_tables();
};

// The subgroup U = {z in GF(r^2) : z^(r+1) = 1}, generated by gamma^(r-1).
class UnitCircle {
public:
    UnitCircle(const FieldTower& tower, Elem gamma);
    explicit UnitCircle(const FieldTower& tower);

    Elem generator() const { return generator_; }
    uint64_t order() const { return elements_.size(); }  // r+1
    const std::vector<Elem>& elements() const { return elements_; }

private:
    Elem generator_{};
    std::vector<Elem> elements_;
};

bool is_prime_u64(uint64_t n);
std::vector<uint64_t> distinct_prime_factors(uint64_t n);

}  // namespace niho
