#include "niho/params.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace niho {

namespace {

uint64_t checked_pow_u64(uint64_t base, unsigned exp, uint64_t limit) {
    uint64_t v = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (v > limit / base) return 0;
        v *= base;
    }
    return v;
}

uint64_t mod_into(long long v, uint64_t mod) {
    long long r = v % static_cast<long long>(mod);
    if (r < 0) r += static_cast<long long>(mod);
    return static_cast<uint64_t>(r);
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t mod) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % mod);
}

uint64_t gcd_u64(uint64_t a, uint64_t b) { return std::gcd(a, b); }

// inverse of a mod m for gcd(a, m) = 1
uint64_t modinv_u64(uint64_t a, uint64_t m) {
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(m), newr = static_cast<long long>(a % m);
    while (newr != 0) {
        long long quot = r / newr;
        std::swap(t -= quot * newt, newt);
        std::swap(r -= quot * newr, newr);
    }
    if (r != 1) throw std::invalid_argument("modinv: not invertible");
    if (t < 0) t += static_cast<long long>(m);
    return static_cast<uint64_t>(t);
}

void validate_spec(const CodeSpec& spec) {
    if (spec.family != 1 && spec.family != 2)
        throw std::invalid_argument("family must be 1 or 2");
    if (!is_prime_u64(spec.p)) throw std::invalid_argument("p must be prime");
    if (spec.l < 1 || spec.m < 1 || spec.t < 1)
        throw std::invalid_argument("l, m, t must be >= 1");
    if (spec.t > (1u << 20) || std::llabs(spec.h) > (1ll << 31) ||
        std::llabs(spec.f) > (1ll << 31))
        throw std::invalid_argument("h, f, t out of supported range");
}

}  // namespace

DerivedParams derive(const CodeSpec& spec) {
    validate_spec(spec);
    const uint64_t limit = uint64_t(1) << 32;
    DerivedParams d;
    d.q = checked_pow_u64(spec.p, spec.l, limit);
    d.r = d.q ? checked_pow_u64(d.q, spec.m, limit) : 0;
    d.r2 = d.r ? checked_pow_u64(d.r, 2, limit) : 0;
    if (d.r2 == 0) throw std::invalid_argument("parameter size exceeds budget (r^2 <= 2^32)");
    const uint64_t r = d.r, r2 = d.r2, n2 = r2 - 1;

    d.e = gcd_u64(mod_into(spec.h, r + 1), r + 1);  // gcd(0, r+1) = r+1 covers h == 0

    const unsigned t = spec.t;
    if (spec.family == 1) {
        // delta = ((r+1) f, (r-1) e)
        uint64_t fa = static_cast<uint64_t>(std::llabs(spec.f));
        unsigned __int128 a128 = static_cast<unsigned __int128>(r + 1) * fa;
        uint64_t b = (r - 1) * d.e;
        uint64_t a = static_cast<uint64_t>(a128 % b);
        d.delta = a == 0 ? b : gcd_u64(a, b);
        d.n = n2 / d.delta;
        uint64_t two_f = mod_into(2 * spec.f, n2);
        d.exponents.reserve(t + 1);
        for (unsigned j = 0; j <= t; ++j) {
            uint64_t coef = mod_into(static_cast<long long>(j) * spec.h + spec.f, r + 1);
            uint64_t dj = (coef * (r - 1) + two_f) % n2;
            d.exponents.push_back(dj);
        }
        d.dim = (2 * t + 1) * spec.m;
    } else {
        uint64_t w;
        if (spec.p == 2) {
            uint64_t diff = mod_into(spec.f - spec.h, n2);
            w = mulmod_u64(diff, modinv_u64(2, n2), n2);
        } else if (((spec.f - spec.h) % 2) != 0) {
            d.exponents_valid = false;
            d.delta = 0;
            d.n = 0;
            d.dim = 2 * t * spec.m;
            return d;
        } else {
            w = mod_into((spec.f - spec.h) / 2, n2);
        }
        uint64_t f_red = mod_into(spec.f, n2);
        d.exponents.reserve(t);
        for (unsigned j = 1; j <= t; ++j) {
            uint64_t coef = (mod_into(static_cast<long long>(j) * spec.h, r + 1) + w) % (r + 1);
            uint64_t dj = (coef * (r - 1) + f_red) % n2;
            d.exponents.push_back(dj);
        }
        d.delta_single = gcd_u64(d.exponents[0], n2);
        d.delta_chain = gcd_u64(d.exponents[0], (r - 1) * d.e);
        d.delta = (t == 1) ? d.delta_single : d.delta_chain;
        d.n = n2 / d.delta;
        d.dim = 2 * t * spec.m;
    }

    // (d_0, ..., d_t, r^2-1) = delta holds unconditionally; a mismatch means
    // a derivation bug.
    uint64_t g = n2;
    for (uint64_t dj : d.exponents) g = gcd_u64(g, dj);
    if (g != d.delta) throw std::logic_error("exponent gcd does not match delta");
    return d;
}

bool ConditionReport::pass() const {
    bool a = true, b = true, c = true, c1 = false, c2 = false;
    bool have_c_alt = false;
    for (const auto& ck : checks) {
        if (!ck.applicable) continue;
        if (ck.label == "a" || ck.label == "a'") a = ck.pass;
        else if (ck.label == "b" || ck.label == "b'") b = b && ck.pass;
        else if (ck.label == "c") c = ck.pass;
        else if (ck.label == "c1'") { c1 = ck.pass; have_c_alt = true; }
        else if (ck.label == "c2'") { c2 = ck.pass; have_c_alt = true; }
    }
    return a && b && c && (!have_c_alt || c1 || c2);
}

ConditionReport check_conditions(const CodeSpec& spec, const DerivedParams& d) {
    ConditionReport rep;
    rep.family = spec.family;
    rep.p = spec.p;
    const uint64_t r = d.r, q = d.q, e = d.e;
    const uint64_t ratio = (r - 1) / (q - 1);
    const uint64_t fa = static_cast<uint64_t>(std::llabs(spec.f));
    auto gcd_or_mod = [&](uint64_t x) { return x == 0 ? ratio : gcd_u64(x, ratio); };

    if (spec.family == 1) {
        bool pa = spec.t >= 1 && 2 * e * spec.t < r + 1;
        rep.checks.push_back({"a", true, pa,
                              "2et=" + std::to_string(2 * e * spec.t) +
                                  " vs r+1=" + std::to_string(r + 1) + " (strict)"});
        uint64_t gb = gcd_or_mod(fa);
        rep.checks.push_back({"b", true, gb == 1,
                              "(f,(r-1)/(q-1))=" + std::to_string(gb)});
        bool capp = spec.p != 2;
        bool pc = !capp || (spec.m % 2 == 1) || (spec.m % 2 == 0 && spec.h % 2 == 0);
        rep.checks.push_back({"c", capp, pc,
                              capp ? ("m=" + std::to_string(spec.m) + " h parity=" +
                                      std::to_string(mod_into(spec.h, 2)))
                                   : "p=2: not applicable"});
    } else {
        bool pa = spec.t >= 1 && 2 * e * spec.t <= r + 1;
        rep.checks.push_back({"a'", true, pa,
                              "2et=" + std::to_string(2 * e * spec.t) +
                                  " vs r+1=" + std::to_string(r + 1)});
        if (spec.p == 2) {
            uint64_t gb = gcd_or_mod(fa);
            rep.checks.push_back({"b'", true, gb == 1,
                                  "(f,(r-1)/(q-1))=" + std::to_string(gb)});
        } else {
            rep.checks.push_back({"b'", false, true, "p odd: not applicable"});
            bool parity = mod_into(spec.h, 2) == mod_into(spec.f, 2);
            uint64_t g1 = gcd_or_mod(fa);
            rep.checks.push_back({"c1'", true, parity && g1 == 1,
                                  "h=f (mod 2): " + std::string(parity ? "yes" : "no") +
                                      ", (f,(r-1)/(q-1))=" + std::to_string(g1)});
            bool both_even = spec.h % 2 == 0 && spec.f % 2 == 0;
            uint64_t g2 = both_even ? gcd_or_mod(fa / 2) : 0;
            rep.checks.push_back({"c2'", true, both_even && g2 == 1,
                                  both_even ? "(f/2,(r-1)/(q-1))=" + std::to_string(g2)
                                            : "h, f not both even"});
        }
        if (d.exponents_valid && d.delta_single != d.delta_chain) {
            rep.notes.push_back("delta differs between the t=1 and t>=2 formulas: " +
                                std::to_string(d.delta_single) + " vs " +
                                std::to_string(d.delta_chain) + "; the t=" +
                                std::to_string(spec.t) + " case applies, delta=" +
                                std::to_string(d.delta));
        }
        if (!d.exponents_valid) {
            rep.notes.push_back("exponents undefined: p odd and h !== f (mod 2)");
        }
    }
    return rep;
}

unsigned minpoly_degree(uint64_t d, uint64_t q, uint64_t r2) {
    const uint64_t n2 = r2 - 1;
    d %= n2;
    uint64_t x = d;
    unsigned size = 0;
    do {
        x = mulmod_u64(x, q, n2);
        ++size;
    } while (x != d);
    return size;
}

namespace {
uint64_t orbit_min(uint64_t d, uint64_t q, uint64_t n2) {
    d %= n2;
    uint64_t x = d, mn = d;
    do {
        x = mulmod_u64(x, q, n2);
        mn = std::min(mn, x);
    } while (x != d);
    return mn;
}
}  // namespace

bool same_minpoly(uint64_t d1, uint64_t d2, uint64_t q, uint64_t r2) {
    return orbit_min(d1, q, r2 - 1) == orbit_min(d2, q, r2 - 1);
}

std::optional<unsigned> minpoly_degree_closed_form(uint64_t d, uint64_t q, uint64_t r,
                                                   unsigned m) {
    const uint64_t n2 = r * r - 1;
    d %= n2;
    uint64_t D = d % (r - 1);
    uint64_t s = d / (r - 1);
    uint64_t ratio = (r - 1) / (q - 1);
    bool hyp = gcd_u64(D == 0 ? ratio : D, ratio) == 1 ||
               (D % 2 == 0 && D != 0 && gcd_u64(D / 2 == 0 ? ratio : D / 2, ratio) == 1);
    if (!hyp) return std::nullopt;
    uint64_t lhs = D % (r + 1);
    uint64_t rhs = (2 * s) % (r + 1);
    return (lhs == rhs) ? m : 2 * m;
}

unsigned dimension(const CodeSpec& spec, const DerivedParams& d) {
    if (!d.exponents_valid) throw std::invalid_argument("exponents undefined for this spec");
    std::set<uint64_t> reps;
    unsigned total = 0;
    for (uint64_t dj : d.exponents) {
        total += minpoly_degree(dj, d.q, d.r2);
        reps.insert(orbit_min(dj, d.q, d.r2 - 1));
    }
    if (reps.size() != d.exponents.size())
        throw std::logic_error("exponents share a minimal polynomial");
    unsigned expected = (spec.family == 1 ? (2 * spec.t + 1) : 2 * spec.t) * spec.m;
    if (total != expected)
        throw std::logic_error("dimension " + std::to_string(total) +
                               " does not match formula " + std::to_string(expected));
    return total;
}

}  // namespace niho
