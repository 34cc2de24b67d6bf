#pragma once

#include <vector>

#include "niho/params.hpp"

namespace niho {

// Known-good codes used by the `tables` subcommand and the acceptance suite.
// `enumerator` is the expected weight-enumerator polynomial, or nullptr for
// rows where only [n, k, d] is recorded.
struct ReferenceCase {
    const char* id;
    CodeSpec spec;
    uint64_t n;
    unsigned k;
    uint64_t d;
    const char* enumerator;
};

// Twelve fully enumerated codes over GF(4) and GF(8).
const std::vector<ReferenceCase>& reference_examples();

// [n, k, d] catalog rows over GF(3), GF(9), GF(5), GF(7).
const std::vector<ReferenceCase>& reference_table_rows();

}  // namespace niho
