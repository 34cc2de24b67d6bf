#include "niho/reference_cases.hpp"

namespace niho {

const std::vector<ReferenceCase>& reference_examples() {
    static const std::vector<ReferenceCase> cases = {
        {"f1-q4-m2-h1-f3-t1", {1, 2, 2, 2, 1, 3, 1}, 85, 6, 60,
         "1+2040Y^{60}+255Y^{64}+1800Y^{68}"},
        {"f1-q4-m2-h1-f3-t2", {1, 2, 2, 2, 1, 3, 2}, 85, 10, 52,
         "1+35700Y^{52}+30600Y^{56}+250920Y^{60}+377655Y^{64}+353700Y^{68}"},
        {"f1-q4-m2-h1-f3-t3", {1, 2, 2, 2, 1, 3, 3}, 85, 14, 44,
         "1+185640Y^{44}+464100Y^{48}+4641000Y^{52}+17646000Y^{56}+54396600Y^{60}"
         "+101483115Y^{64}+89619000Y^{68}"},
        {"f1-q8-m1-h1-f7-t1", {1, 2, 3, 1, 1, 7, 1}, 9, 3, 7,
         "1+252Y^{7}+63Y^{8}+196Y^{9}"},
        {"f1-q8-m1-h1-f7-t2", {1, 2, 3, 1, 1, 7, 2}, 9, 5, 5,
         "1+882Y^{5}+1764Y^{6}+7812Y^{7}+12411Y^{8}+9898Y^{9}"},
        {"f1-q8-m1-h1-f7-t3", {1, 2, 3, 1, 1, 7, 3}, 9, 7, 3,
         "1+588Y^{3}+4410Y^{4}+33516Y^{5}+154056Y^{6}+463428Y^{7}+810621Y^{8}+630532Y^{9}"},
        {"f2-q4-m2-h2-f6-t1", {2, 2, 2, 2, 2, 6, 1}, 85, 4, 64, "1+255Y^{64}"},
        {"f2-q4-m2-h2-f6-t2", {2, 2, 2, 2, 2, 6, 2}, 85, 8, 56,
         "1+10200Y^{56}+4080Y^{60}+30855Y^{64}+20400Y^{68}"},
        {"f2-q4-m2-h2-f6-t3", {2, 2, 2, 2, 2, 6, 3}, 85, 12, 48,
         "1+92820Y^{48}+142800Y^{52}+1285200Y^{56}+3272160Y^{60}+6390555Y^{64}"
         "+5593680Y^{68}"},
        {"f2-q8-m1-h2-f14-t1", {2, 2, 3, 1, 2, 14, 1}, 9, 2, 8, "1+63Y^{8}"},
        {"f2-q8-m1-h2-f14-t2", {2, 2, 3, 1, 2, 14, 2}, 9, 4, 6,
         "1+588Y^{6}+504Y^{7}+1827Y^{8}+1176Y^{9}"},
        {"f2-q8-m1-h2-f14-t3", {2, 2, 3, 1, 2, 14, 3}, 9, 6, 4,
         "1+882Y^{4}+3528Y^{5}+19992Y^{6}+57456Y^{7}+101493Y^{8}+78792Y^{9}"},
    };
    return cases;
}

const std::vector<ReferenceCase>& reference_table_rows() {
    static const std::vector<ReferenceCase> rows = {
        {"f1-q3-r27-t1-h2-f1", {1, 3, 1, 3, 2, 1, 1}, 182, 9, 108, nullptr},
        {"f1-q9-r9-t1-h1-f2", {1, 3, 2, 1, 1, 2, 1}, 20, 3, 16, nullptr},
        {"f1-q9-r9-t1-h1-f4", {1, 3, 2, 1, 1, 4, 1}, 10, 3, 8, nullptr},
        {"f1-q9-r9-t2-h1-f4", {1, 3, 2, 1, 1, 4, 2}, 10, 5, 6, nullptr},
        {"f1-q9-r9-t3-h1-f4", {1, 3, 2, 1, 1, 4, 3}, 10, 7, 4, nullptr},
        {"f1-q9-r9-t4-h1-f4", {1, 3, 2, 1, 1, 4, 4}, 10, 9, 2, nullptr},
        {"f1-q9-r9-t1-h2-f8", {1, 3, 2, 1, 2, 8, 1}, 5, 3, 3, nullptr},
        {"f1-q5-r5-t1-h1-f1", {1, 5, 1, 1, 1, 1, 1}, 12, 3, 8, nullptr},
        {"f1-q5-r5-t1-h1-f2", {1, 5, 1, 1, 1, 2, 1}, 6, 3, 4, nullptr},
        {"f1-q5-r5-t2-h1-f2", {1, 5, 1, 1, 1, 2, 2}, 6, 5, 2, nullptr},
        {"f1-q7-r7-t1-h1-f2", {1, 7, 1, 1, 1, 2, 1}, 24, 3, 18, nullptr},
        {"f1-q7-r7-t1-h1-f3", {1, 7, 1, 1, 1, 3, 1}, 8, 3, 6, nullptr},
        {"f1-q7-r7-t2-h1-f3", {1, 7, 1, 1, 1, 3, 2}, 8, 5, 4, nullptr},
        {"f1-q7-r7-t3-h1-f3", {1, 7, 1, 1, 1, 3, 3}, 8, 7, 2, nullptr},
        {"f1-q7-r7-t1-h2-f3", {1, 7, 1, 1, 2, 3, 1}, 4, 3, 2, nullptr},
        {"f2-q3-r27-t1-h4-f2", {2, 3, 1, 3, 4, 2, 1}, 91, 6, 54, nullptr},
        {"f2-q9-r9-t1-h2-f8", {2, 3, 2, 1, 2, 8, 1}, 5, 2, 4, nullptr},
        {"f2-q9-r9-t2-h2-f8", {2, 3, 2, 1, 2, 8, 2}, 5, 4, 2, nullptr},
        {"f2-q7-r7-t1-h1-f3", {2, 7, 1, 1, 1, 3, 1}, 16, 2, 14, nullptr},
        {"f2-q7-r7-t2-h1-f3", {2, 7, 1, 1, 1, 3, 2}, 16, 4, 10, nullptr},
    };
    return rows;
}

}  // namespace niho
