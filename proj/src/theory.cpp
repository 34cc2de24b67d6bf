#include "niho/theory.hpp"

#include <functional>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace niho {

using Rational = boost::multiprecision::cpp_rational;

namespace {

BigInt big_pow(BigInt base, unsigned e) {
    BigInt acc = 1;
    for (unsigned i = 0; i < e; ++i) acc *= base;
    return acc;
}

BigInt factorial(unsigned n) {
    BigInt acc = 1;
    for (unsigned i = 2; i <= n; ++i) acc *= i;
    return acc;
}

BigInt binomial(uint64_t u, unsigned v) {
    BigInt acc = 1;
    for (unsigned i = 0; i < v; ++i) {
        if (u < i) return 0;
        acc *= BigInt(u - i);
        acc /= BigInt(i + 1);  // exact at each step
    }
    return acc;
}

// All (part, multiplicity) lists with parts >= 2 summing to k.
void for_each_partition(unsigned k, unsigned max_part,
                        std::vector<std::pair<unsigned, unsigned>>& cur,
                        const std::function<void(const std::vector<std::pair<unsigned, unsigned>>&)>& cb) {
    if (k == 0) {
        cb(cur);
        return;
    }
    for (unsigned part = std::min(k, max_part); part >= 2; --part) {
        for (unsigned mult = 1; mult * part <= k; ++mult) {
            cur.emplace_back(part, mult);
            for_each_partition(k - mult * part, part - 1, cur, cb);
            cur.pop_back();
        }
    }
}

ConditionReport require_admissible(const CodeSpec& spec, const DerivedParams& d) {
    ConditionReport rep = check_conditions(spec, d);
    if (!rep.pass()) throw std::invalid_argument("spec does not satisfy the admissibility conditions");
    return rep;
}

}  // namespace

BigInt N_k(uint64_t r, uint64_t e, unsigned k) {
    if (e == 0 || (r + 1) % e != 0) throw std::invalid_argument("e must divide r+1");
    if (k == 0) return 1;
    if (k == 1) return 0;
    const uint64_t u = (r + 1) / e;
    // B_j = ((r-1)^j + (-1)^j (r-1)) / r
    auto B = [&](unsigned j) {
        BigInt num = big_pow(BigInt(r) - 1, j);
        if (j % 2 == 0) num += BigInt(r) - 1;
        else num -= BigInt(r) - 1;
        return Rational(num, BigInt(r));
    };
    Rational sum = 0;
    std::vector<std::pair<unsigned, unsigned>> cur;
    for_each_partition(k, k, cur, [&](const std::vector<std::pair<unsigned, unsigned>>& parts) {
        unsigned L = 0;
        for (auto [j, lam] : parts) L += lam;
        Rational term(binomial(u, L) * factorial(L), 1);
        for (auto [j, lam] : parts) {
            Rational bj = B(j);
            Rational pw = 1;
            for (unsigned i = 0; i < lam; ++i) pw *= bj;
            term *= pw / Rational(big_pow(factorial(j), lam) * factorial(lam), 1);
        }
        sum += term;
    });
    Rational nk = Rational(factorial(k) * big_pow(BigInt(e), k), 1) * sum;
    if (denominator(nk) != 1) throw std::logic_error("N_k is not an integer");
    return numerator(nk);
}

std::vector<uint64_t> theoretical_weights(const CodeSpec& spec, const DerivedParams& d) {
    const unsigned s = (spec.family == 1) ? 2 * spec.t + 1 : 2 * spec.t;
    std::vector<uint64_t> out;
    out.reserve(s);
    const BigInt qd = BigInt(d.q) * d.delta;
    for (unsigned j = 0; j < s; ++j) {
        // (q-1)(r^2 - (je-1)r) / (q delta)
        BigInt num = BigInt(d.q - 1) * (BigInt(d.r2) - (BigInt(j) * d.e - 1) * d.r);
        if (num < 0 || num % qd != 0)
            throw std::logic_error("theoretical weight is not a nonnegative integer");
        out.push_back(static_cast<uint64_t>(num / qd));
        if (j > 0 && out[j] >= out[j - 1]) throw std::logic_error("weights not strictly decreasing");
    }
    return out;
}

MomentSystem solve_moment_system(const CodeSpec& spec, const DerivedParams& d) {
    const unsigned s = (spec.family == 1) ? 2 * spec.t + 1 : 2 * spec.t;
    MomentSystem sys;
    sys.size = s;
    sys.nodes.reserve(s);
    for (unsigned j = 0; j < s; ++j)
        sys.nodes.push_back(static_cast<int64_t>(j) * static_cast<int64_t>(d.e) *
                                static_cast<int64_t>(d.r) -
                            static_cast<int64_t>(d.r) - 1);
    const BigInt rs = big_pow(BigInt(d.r), s);
    const BigInt n2 = BigInt(d.r2) - 1;
    sys.b.reserve(s);
    for (unsigned i = 0; i < s; ++i)
        sys.b.push_back(rs * N_k(d.r, d.e, i) - big_pow(n2, i));

    // Solve sum_j x_j^i mu_j = b_i by Lagrange duality: with
    // L_j(x) = prod_{k != j} (x - x_k) / (x_j - x_k) = sum_i c_i x^i,
    // mu_j = sum_i c_i b_i. Master polynomial once, synthetic division per j.
    std::vector<BigInt> master(s + 1, 0);
    master[0] = 1;
    unsigned degree = 0;
    for (unsigned j = 0; j < s; ++j) {
        // master *= (x - x_j)
        for (unsigned i = degree + 1; i >= 1; --i)
            master[i] = master[i - 1] - BigInt(sys.nodes[j]) * master[i];
        master[0] = -BigInt(sys.nodes[j]) * master[0];
        ++degree;
    }
    sys.mu.resize(s);
    for (unsigned j = 0; j < s; ++j) {
        const BigInt xj = sys.nodes[j];
        // q(x) = master / (x - x_j), exact
        std::vector<BigInt> qc(s);
        qc[s - 1] = master[s];
        for (unsigned i = s - 1; i-- > 0;) qc[i] = master[i + 1] + xj * qc[i + 1];
        BigInt denom = 0;  // q(x_j) = prod_{k != j} (x_j - x_k)
        for (unsigned i = s; i-- > 0;) denom = denom * xj + qc[i];
        BigInt numer = 0;
        for (unsigned i = 0; i < s; ++i) numer += qc[i] * sys.b[i];
        BigInt quot = numer / denom;
        if (quot * denom != numer || quot < 0)
            throw std::logic_error("moment system solution is not a nonnegative integer");
        sys.mu[j] = quot;
    }
    return sys;
}

namespace {

WeightDistribution assemble(const DerivedParams& d, const std::vector<uint64_t>& weights,
                            const std::vector<BigInt>& mu, const char* method) {
    WeightDistribution out;
    out.n = d.n;
    out.k = d.dim;
    out.q = d.q;
    out.method = method;
    out.freq[0] = 1;
    for (size_t j = 0; j < weights.size(); ++j) {
        if (mu[j] == 0) out.zero_frequency_weights.push_back(weights[j]);
        else out.freq[weights[j]] += mu[j];
    }
    BigInt expected = big_pow(BigInt(d.q), d.dim);
    if (out.total() != expected)
        throw std::logic_error("frequencies do not sum to q^k");
    return out;
}

}  // namespace

WeightDistribution solve_distribution(const CodeSpec& spec, const DerivedParams& d) {
    require_admissible(spec, d);
    MomentSystem sys = solve_moment_system(spec, d);
    std::vector<uint64_t> w = theoretical_weights(spec, d);
    return assemble(d, w, sys.mu, "vandermonde");
}

WeightDistribution corollary_tables(const CodeSpec& spec, const DerivedParams& d) {
    require_admissible(spec, d);
    const BigInt e = d.e, r = d.r;
    const BigInt r2 = r * r, r3 = r2 * r, r4 = r3 * r;
    std::vector<BigInt> nums;
    BigInt den;
    if (spec.family == 1 && spec.t == 1) {
        // three-weight case; the frequencies are polynomials in e and r alone
        // (the moment system has no q dependence)
        nums = {
            -1 + 3 * e - 2 * e * e - r + 2 * e * r + r2 - 3 * e * r2 + r3 - 2 * e * r3 +
                2 * e * e * r3,
            2 * (1 - 2 * e + r - e * r - r2 + 2 * e * r2 - r3 + e * r3),
            -1 + e - r + r2 - e * r2 + r3,
        };
        den = 2 * e * e;
    } else if (spec.family == 2 && spec.t == 1) {
        nums = {(e - 1) * (r2 - 1), r2 - 1};
        den = e;
    } else if (spec.family == 2 && spec.t == 2) {
        nums = {
            1 - 6 * e + 11 * e * e - 6 * e * e * e + 2 * r - 9 * e * r + 9 * e * e * r +
                3 * e * r2 - 5 * e * e * r2 - 2 * r3 + 9 * e * r3 - 9 * e * e * r3 - r4 +
                3 * e * r4 - 6 * e * e * r4 + 6 * e * e * e * r4,
            3 * (-1 + 5 * e - 6 * e * e - 2 * r + 7 * e * r - 4 * e * e * r - 3 * e * r2 +
                 4 * e * e * r2 + 2 * r3 - 7 * e * r3 + 4 * e * e * r3 + r4 - 2 * e * r4 +
                 2 * e * e * r4),
            3 * (1 - 4 * e + 3 * e * e + 2 * r - 5 * e * r + e * e * r + 3 * e * r2 -
                 3 * e * e * r2 - 2 * r3 + 5 * e * r3 - e * e * r3 - r4 + e * r4),
            -1 + 3 * e - 2 * e * e - 2 * r + 3 * e * r - 3 * e * r2 + 2 * e * e * r2 +
                2 * r3 - 3 * e * r3 + r4,
        };
        den = 6 * e * e * e;
    } else {
        throw std::invalid_argument("closed-form table only covers family 1 t=1 and family 2 t<=2");
    }
    std::vector<uint64_t> w = theoretical_weights(spec, d);
    std::vector<BigInt> mu(nums.size());
    for (size_t j = 0; j < nums.size(); ++j) {
        BigInt quot = nums[j] / den;
        if (quot * den != nums[j] || quot < 0)
            throw std::logic_error("table frequency is not a nonnegative integer");
        mu[j] = quot;
    }
    return assemble(d, w, mu, "corollary-table");
}

uint64_t griesmer_bound(unsigned k, uint64_t d, uint64_t q) {
    if (k < 1 || d < 1) throw std::invalid_argument("k and d must be >= 1");
    uint64_t sum = 0;
    uint64_t qi = 1;
    bool overflowed = false;
    for (unsigned i = 0; i < k; ++i) {
        if (overflowed || qi >= d) {
            sum += 1;
        } else {
            sum += (d + qi - 1) / qi;
        }
        if (!overflowed) {
            if (qi > (uint64_t(1) << 62) / q) overflowed = true;
            else qi *= q;
        }
    }
    return sum;
}

GriesmerReport griesmer_check(uint64_t n, unsigned k, uint64_t d, uint64_t q) {
    GriesmerReport rep;
    rep.bound = griesmer_bound(k, d, q);
    rep.admissible = n >= rep.bound;
    rep.meets = n == rep.bound;
    return rep;
}

}  // namespace niho
