#include "niho/fields.hpp"

#include <algorithm>
#include <bit>

namespace niho {

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint64_t> distinct_prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

namespace {

// Dense polynomials over GF(p), coefficients low -> high. Only used during
// tower construction (modulus search), so clarity over speed.
using Poly = std::vector<uint32_t>;

unsigned pdeg(const Poly& a) {
    unsigned d = 0;
    for (unsigned i = 0; i < a.size(); ++i)
        if (a[i]) d = i;
    return d;
}

bool pis_zero(const Poly& a) {
    return std::all_of(a.begin(), a.end(), [](uint32_t c) { return c == 0; });
}

uint64_t scalar_pow_mod(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t acc = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) acc = acc * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return acc;
}

uint64_t scalar_inv_mod_p(uint64_t c, uint64_t p) { return scalar_pow_mod(c, p - 2, p); }

// a*b mod f, f monic of degree D
Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, uint64_t p) {
    const unsigned D = static_cast<unsigned>(f.size()) - 1;
    std::vector<uint64_t> acc(2 * D, 0);
    for (unsigned i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (unsigned j = 0; j < b.size(); ++j)
            if (b[j]) acc[i + j] += uint64_t(a[i]) * b[j];
    }
    for (unsigned i = 2 * D - 1; i >= D; --i) {
        uint64_t c = acc[i] % p;
        acc[i] = 0;
        if (c) {
            for (unsigned j = 0; j < D; ++j)
                acc[i - D + j] += c * ((p - f[j] % p) % p);
        }
        if (i == D) break;
    }
    Poly out(D, 0);
    for (unsigned i = 0; i < D; ++i) out[i] = static_cast<uint32_t>(acc[i] % p);
    return out;
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& f, uint64_t p) {
    Poly acc{1};
    acc.resize(f.size() - 1, 0);
    base.resize(f.size() - 1, 0);
    while (e) {
        if (e & 1) acc = poly_mulmod(acc, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return acc;
}

Poly poly_trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_gcd(Poly a, Poly b, uint64_t p) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        // a mod b
        uint64_t lead_inv = scalar_inv_mod_p(b.back(), p);
        while (a.size() >= b.size() && !a.empty()) {
            uint64_t c = a.back() * lead_inv % p;
            unsigned shift = static_cast<unsigned>(a.size() - b.size());
            for (unsigned i = 0; i < b.size(); ++i)
                a[shift + i] = static_cast<uint32_t>((a[shift + i] + (p - c * b[i] % p)) % p);
            a = poly_trim(std::move(a));
        }
        std::swap(a, b);
    }
    return a;
}

bool poly_irreducible(const Poly& f, uint64_t p) {
    const unsigned D = static_cast<unsigned>(f.size()) - 1;
    if (D == 0) return false;
    if (f[0] == 0) return D == 1;  // divisible by x
    // Frobenius chain x^(p^j) mod f for j = 1..D.
    Poly x{0, 1};
    x.resize(D, 0);
    if (D == 1) return true;
    std::vector<Poly> chain(D + 1);
    chain[0] = x;
    for (unsigned j = 1; j <= D; ++j) chain[j] = poly_powmod(chain[j - 1], p, f, p);
    if (poly_trim(chain[D]) != poly_trim(x)) return false;
    for (uint64_t s : distinct_prime_factors(D)) {
        Poly g = chain[D / s];
        // g - x
        g[1] = static_cast<uint32_t>((g[1] + p - 1) % p);
        Poly gg = poly_gcd(g, f, p);
        if (pdeg(gg) != 0 || pis_zero(gg)) return false;
    }
    return true;
}

uint64_t checked_pow(uint64_t base, unsigned exp, uint64_t limit) {
    uint64_t v = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (v > limit / base) return 0;
        v *= base;
    }
    return v;
}

}  // namespace

Elem FieldTower::add(Elem a, Elem b) const {
    if (p_ == 2) return Elem{a.bits ^ b.bits};
    uint64_t out = 0;
    for (unsigned i = 0; i < deg_; ++i) {
        uint64_t da = (a.bits >> (i * digit_bits_)) & digit_mask_;
        uint64_t db = (b.bits >> (i * digit_bits_)) & digit_mask_;
        uint64_t s = da + db;
        if (s >= p_) s -= p_;
        out |= s << (i * digit_bits_);
    }
    return Elem{out};
}

Elem FieldTower::neg(Elem a) const {
    if (p_ == 2) return a;
    uint64_t out = 0;
    for (unsigned i = 0; i < deg_; ++i) {
        uint64_t d = (a.bits >> (i * digit_bits_)) & digit_mask_;
        out |= (d ? p_ - d : 0) << (i * digit_bits_);
    }
    return Elem{out};
}

Elem FieldTower::mul_scalar(Elem a, uint64_t c) const {
    if (c == 0) return Elem{0};
    if (c == 1) return a;
    uint64_t out = 0;
    for (unsigned i = 0; i < deg_; ++i) {
        uint64_t d = (a.bits >> (i * digit_bits_)) & digit_mask_;
        out |= (d * c % p_) << (i * digit_bits_);
    }
    return Elem{out};
}

Elem FieldTower::mul(Elem a, Elem b) const {
    if (a.bits == 0 || b.bits == 0) return Elem{0};
    if (p_ == 2) {
        uint64_t acc = 0;
        uint64_t av = a.bits;
        for (unsigned i = 0; av; ++i, av >>= 1)
            if (av & 1) acc ^= b.bits << i;
        for (int i = 62; i >= static_cast<int>(deg_); --i)
            if ((acc >> i) & 1) acc ^= modulus_packed_ << (i - deg_);
        return Elem{acc};
    }
    uint64_t da[64], db[64];
    for (unsigned i = 0; i < deg_; ++i) {
        da[i] = (a.bits >> (i * digit_bits_)) & digit_mask_;
        db[i] = (b.bits >> (i * digit_bits_)) & digit_mask_;
    }
    uint64_t acc[127] = {0};
    for (unsigned i = 0; i < deg_; ++i) {
        if (!da[i]) continue;
        for (unsigned j = 0; j < deg_; ++j) acc[i + j] += da[i] * db[j];
    }
    for (unsigned i = 2 * deg_ - 2; i >= deg_; --i) {
        uint64_t c = acc[i] % p_;
        acc[i] = 0;
        if (c) {
            for (unsigned j = 0; j < deg_; ++j)
                acc[i - deg_ + j] += c * ((p_ - modulus_[j]) % p_);
        }
        if (i == deg_) break;
    }
    uint64_t out = 0;
    for (unsigned i = 0; i < deg_; ++i) out |= (acc[i] % p_) << (i * digit_bits_);
    return Elem{out};
}

Elem FieldTower::pow(Elem a, uint64_t n) const {
    if (a.bits == 0) return n == 0 ? one() : Elem{0};
    n %= (r2_ - 1);
    Elem acc = one();
    Elem base = a;
    while (n) {
        if (n & 1) acc = mul(acc, base);
        base = mul(base, base);
        n >>= 1;
    }
    return acc;
}

Elem FieldTower::inv(Elem a) const {
    if (a.bits == 0) throw std::domain_error("inverse of zero");
    return pow(a, r2_ - 2);
}

Elem FieldTower::apply_linear(Elem a, const std::vector<Elem>& basis_images) const {
    Elem acc = zero();
    for (unsigned i = 0; i < deg_; ++i) {
        uint64_t c = (a.bits >> (i * digit_bits_)) & digit_mask_;
        if (c) acc = add(acc, mul_scalar(basis_images[i], c));
    }
    return acc;
}

Elem FieldTower::conj(Elem a) const { return apply_linear(a, conj_basis_); }

Elem FieldTower::frobenius(Elem a, unsigned k) const {
    Elem x = a;
    for (unsigned i = 0; i < k % (2 * m_); ++i) x = apply_linear(x, frob_q_basis_);
    return x;
}

bool FieldTower::in_gf_q(Elem a) const { return frobenius(a, 1) == a; }
bool FieldTower::in_gf_r(Elem a) const { return conj(a) == a; }

Elem FieldTower::trace_r_to_q(Elem a) const {
    if (!in_gf_r(a)) throw std::domain_error("trace source must lie in GF(r)");
    return apply_linear(a, tr_r_basis_);
}

Elem FieldTower::trace_r2_to_q(Elem a) const { return apply_linear(a, tr_r2_basis_); }

uint64_t FieldTower::canonical_index(Elem a) const {
    uint64_t idx = 0;
    for (unsigned i = deg_; i-- > 0;) {
        idx = idx * p_ + ((a.bits >> (i * digit_bits_)) & digit_mask_);
    }
    return idx;
}

Elem FieldTower::elem_from_index(uint64_t idx) const {
    uint64_t out = 0;
    for (unsigned i = 0; i < deg_; ++i) {
        out |= (idx % p_) << (i * digit_bits_);
        idx /= p_;
    }
    return Elem{out};
}

std::vector<uint32_t> FieldTower::coeffs(Elem a) const {
    std::vector<uint32_t> c(deg_);
    for (unsigned i = 0; i < deg_; ++i)
        c[i] = static_cast<uint32_t>((a.bits >> (i * digit_bits_)) & digit_mask_);
    return c;
}

Elem FieldTower::elem_from_coeffs(const std::vector<uint32_t>& c) const {
    if (c.size() != deg_) throw std::invalid_argument("coefficient count mismatch");
    uint64_t out = 0;
    for (unsigned i = 0; i < deg_; ++i) {
        if (c[i] >= p_) throw std::invalid_argument("coefficient out of range");
        out |= uint64_t(c[i]) << (i * digit_bits_);
    }
    return Elem{out};
}

void FieldTower::to_bytes(Elem a, uint8_t* out) const {
    for (unsigned i = 0; i < deg_; ++i)
        out[i] = static_cast<uint8_t>((a.bits >> (i * digit_bits_)) & digit_mask_);
}

uint64_t FieldTower::multiplicative_order(Elem a) const {
    if (a.bits == 0) throw std::domain_error("order of zero");
    uint64_t ord = r2_ - 1;
    for (uint64_t s : r2m1_factors_) {
        while (ord % s == 0 && pow(a, ord / s) == one()) ord /= s;
    }
    return ord;
}

void FieldTower::build_tables() {
    frob_q_basis_.resize(deg_);
    conj_basis_.resize(deg_);
    tr_r_basis_.resize(deg_);
    tr_r2_basis_.resize(deg_);
    for (unsigned i = 0; i < deg_; ++i) {
        Elem xi{uint64_t(1) << (i * digit_bits_)};
        frob_q_basis_[i] = pow(xi, q_ % (r2_ - 1));
        conj_basis_[i] = pow(xi, r_);
        Elem y = xi, acc = zero();
        for (unsigned k = 0; k < m_; ++k) {
            acc = add(acc, y);
            y = pow(y, q_);
        }
        tr_r_basis_[i] = acc;
        for (unsigned k = m_; k < 2 * m_; ++k) {
            acc = add(acc, y);
            y = pow(y, q_);
        }
        tr_r2_basis_[i] = acc;
    }
}

FieldTower FieldTower::build(uint64_t p, unsigned l, unsigned m) {
    if (!is_prime_u64(p)) throw std::invalid_argument("p must be prime");
    if (l < 1 || m < 1) throw std::invalid_argument("l and m must be >= 1");
    const unsigned deg = 2 * l * m;
    const uint64_t limit = uint64_t(1) << 32;
    uint64_t r2 = checked_pow(p, deg, limit);
    if (r2 == 0) throw std::invalid_argument("parameter size exceeds budget (r^2 <= 2^32)");

    FieldTower tw;
    tw.p_ = p;
    tw.l_ = l;
    tw.m_ = m;
    tw.deg_ = deg;
    tw.q_ = checked_pow(p, l, limit);
    tw.r_ = checked_pow(p, l * m, limit);
    tw.r2_ = r2;
    tw.digit_bits_ = (p == 2) ? 1 : static_cast<unsigned>(std::bit_width(p - 1));
    tw.digit_mask_ = (uint64_t(1) << tw.digit_bits_) - 1;

    // Least monic irreducible of degree deg, ordering low coefficients by
    // base-p value.
    Poly f(deg + 1, 0);
    f[deg] = 1;
    bool found = false;
    for (uint64_t v = 0; v < r2; ++v) {
        uint64_t x = v;
        for (unsigned i = 0; i < deg; ++i) {
            f[i] = static_cast<uint32_t>(x % p);
            x /= p;
        }
        if (poly_irreducible(f, p)) {
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("no irreducible modulus found");
    tw.modulus_.assign(f.begin(), f.end());
    if (p == 2) {
        tw.modulus_packed_ = 0;
        for (unsigned i = 0; i <= deg; ++i)
            if (f[i]) tw.modulus_packed_ |= uint64_t(1) << i;
    }
    tw.build_tables();

    tw.r2m1_factors_ = distinct_prime_factors(r2 - 1);
    bool have_gamma = false;
    for (uint64_t idx = 1; idx < r2; ++idx) {
        Elem cand = tw.elem_from_index(idx);
        bool full = true;
        for (uint64_t s : tw.r2m1_factors_) {
            if (tw.pow(cand, (r2 - 1) / s) == tw.one()) {
                full = false;
                break;
            }
        }
        if (full) {
            tw.gamma_ = cand;
            have_gamma = true;
            break;
        }
    }
    if (!have_gamma) throw std::logic_error("no primitive element found");
    return tw;
}

UnitCircle::UnitCircle(const FieldTower& tower, Elem gamma) {
    generator_ = tower.pow(gamma, tower.r() - 1);
    elements_.reserve(tower.r() + 1);
    Elem z = tower.one();
    do {
        elements_.push_back(z);
        z = tower.mul(z, generator_);
    } while (z != tower.one());
    if (elements_.size() != tower.r() + 1)
        throw std::logic_error("unit circle has wrong order; gamma not primitive?");
}

UnitCircle::UnitCircle(const FieldTower& tower) : UnitCircle(tower, tower.gamma()) {}

}  // namespace niho
