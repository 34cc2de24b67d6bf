#include "niho/io.hpp"

#include <iomanip>
#include <sstream>

namespace niho {

using nlohmann::json;

json distribution_to_json(const CodeSpec& spec, const DerivedParams& d,
                          const WeightDistribution& dist) {
    json weights = json::array();
    for (const auto& [w, c] : dist.freq)
        weights.push_back({{"w", w}, {"freq", c.str()}});
    json out{
        {"family", spec.family}, {"p", spec.p}, {"l", spec.l}, {"m", spec.m},
        {"h", spec.h}, {"f", spec.f}, {"t", spec.t},
        {"q", d.q}, {"r", d.r},
        {"n", dist.n}, {"k", dist.k}, {"d", dist.min_distance()},
        {"delta", d.delta}, {"e", d.e},
        {"method", dist.method},
        {"weights", weights},
        {"enumerator", dist.enumerator_string()},
    };
    if (!dist.zero_frequency_weights.empty())
        out["zero_frequency_weights"] = dist.zero_frequency_weights;
    return out;
}

std::pair<CodeSpec, WeightDistribution> distribution_from_json(const json& j) {
    CodeSpec spec;
    spec.family = j.at("family").get<int>();
    spec.p = j.at("p").get<uint64_t>();
    spec.l = j.at("l").get<unsigned>();
    spec.m = j.at("m").get<unsigned>();
    spec.h = j.at("h").get<long long>();
    spec.f = j.at("f").get<long long>();
    spec.t = j.at("t").get<unsigned>();
    WeightDistribution dist;
    dist.n = j.at("n").get<uint64_t>();
    dist.k = j.at("k").get<unsigned>();
    dist.q = j.at("q").get<uint64_t>();
    dist.method = j.at("method").get<std::string>();
    for (const auto& item : j.at("weights"))
        dist.freq[item.at("w").get<uint64_t>()] = BigInt(item.at("freq").get<std::string>());
    if (j.contains("zero_frequency_weights"))
        dist.zero_frequency_weights =
            j.at("zero_frequency_weights").get<std::vector<uint64_t>>();
    return {spec, dist};
}

json condition_report_to_json(const CodeSpec& spec, const DerivedParams& d,
                              const ConditionReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"label", c.label},
                          {"applicable", c.applicable},
                          {"pass", c.pass},
                          {"detail", c.detail}});
    json out{
        {"family", spec.family}, {"p", spec.p}, {"l", spec.l}, {"m", spec.m},
        {"h", spec.h}, {"f", spec.f}, {"t", spec.t},
        {"q", d.q}, {"r", d.r}, {"e", d.e}, {"delta", d.delta}, {"n", d.n},
        {"k", d.dim},
        {"exponents", d.exponents},
        {"exponents_valid", d.exponents_valid},
        {"conditions", checks},
        {"pass", rep.pass()},
    };
    if (!rep.notes.empty()) out["notes"] = rep.notes;
    return out;
}

json tower_to_json(const FieldTower& tower) {
    return json{
        {"p", tower.p()}, {"l", tower.l()}, {"m", tower.m()},
        {"modulus", tower.modulus()},
        {"gamma", tower.coeffs(tower.gamma())},
    };
}

std::string distribution_text(const CodeSpec& spec, const DerivedParams& d,
                              const WeightDistribution& dist) {
    std::ostringstream os;
    os << "[" << dist.n << "," << dist.k << "," << dist.min_distance() << "]_" << d.q
       << "  family " << spec.family << "  (p=" << spec.p << ", l=" << spec.l
       << ", m=" << spec.m << ", h=" << spec.h << ", f=" << spec.f << ", t=" << spec.t
       << ")  e=" << d.e << " delta=" << d.delta << "  method=" << dist.method << "\n";
    size_t wcol = 6;
    for (const auto& [w, c] : dist.freq) wcol = std::max(wcol, std::to_string(w).size());
    os << std::left << std::setw(static_cast<int>(wcol) + 2) << "weight" << "frequency\n";
    for (const auto& [w, c] : dist.freq)
        os << std::left << std::setw(static_cast<int>(wcol) + 2) << w << c.str() << "\n";
    if (!dist.zero_frequency_weights.empty()) {
        os << "unused weights:";
        for (uint64_t w : dist.zero_frequency_weights) os << " " << w;
        os << "\n";
    }
    os << "enumerator: " << dist.enumerator_string() << "\n";
    return os.str();
}

std::string derive_text(const CodeSpec& spec, const DerivedParams& d,
                        const ConditionReport& rep) {
    std::ostringstream os;
    os << "family " << spec.family << "  p=" << spec.p << " l=" << spec.l << " m=" << spec.m
       << " h=" << spec.h << " f=" << spec.f << " t=" << spec.t << "\n";
    os << "q=" << d.q << " r=" << d.r << " e=" << d.e << " delta=" << d.delta
       << " n=" << d.n << " k=" << d.dim << "\n";
    os << "exponents:";
    if (d.exponents_valid)
        for (uint64_t x : d.exponents) os << " " << x;
    else
        os << " (undefined)";
    os << "\n";
    for (const auto& c : rep.checks) {
        os << "  (" << c.label << ") ";
        if (!c.applicable) os << "n/a ";
        else os << (c.pass ? "pass" : "FAIL") << " ";
        os << "- " << c.detail << "\n";
    }
    for (const auto& nline : rep.notes) os << "  note: " << nline << "\n";
    os << (rep.pass() ? "admissible" : "inadmissible") << "\n";
    return os.str();
}

}  // namespace niho
