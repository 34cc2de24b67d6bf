#include "niho/distribution.hpp"

#include <sstream>
#include <stdexcept>

namespace niho {

uint64_t WeightDistribution::min_distance() const {
    for (const auto& [w, c] : freq)
        if (w > 0 && c > 0) return w;
    throw std::logic_error("distribution has no nonzero weight");
}

BigInt WeightDistribution::total() const {
    BigInt s = 0;
    for (const auto& [w, c] : freq) s += c;
    return s;
}

std::string WeightDistribution::enumerator_string() const {
    std::ostringstream os;
    os << "1";
    for (const auto& [w, c] : freq) {
        if (w == 0 || c == 0) continue;
        os << "+" << c.str() << "Y^{" << w << "}";
    }
    return os.str();
}

bool WeightDistribution::same_distribution(const WeightDistribution& other) const {
    return n == other.n && k == other.k && q == other.q && freq == other.freq;
}

}  // namespace niho
