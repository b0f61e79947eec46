// Reproduce the growth-rate story end to end: boundary values, their
// differences, first extrapolants, and the limit estimate against the
// scaling-limit prediction of exactly 12.

#include "qes/boundary.hpp"
#include "qes/richardson.hpp"
#include "qes/wkb.hpp"

#include <cstdio>
#include <vector>

int main() {
    using namespace qes;
    std::vector<CriticalBoundary> table;
    for (int J = 2; J <= 14; ++J) table.push_back(find_critical_a_squared(J, 13));

    PrecisionGuard guard(40);
    Sequence diffs;
    std::printf(" J    a_crit^2          difference\n");
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (i == 0) {
            std::printf("%2d    %s\n", table[i].J, table[i].a_crit_sq.str(13).c_str());
            continue;
        }
        Real d = table[i].a_crit_sq - table[i - 1].a_crit_sq;
        diffs.emplace_back(static_cast<int>(i), d);
        std::printf("%2d    %-16s  %s\n", table[i].J, table[i].a_crit_sq.str(13).c_str(),
                    d.str(12).c_str());
    }

    auto ext = repeated_richardson(diffs, 3);
    std::printf("\nfirst extrapolants of the differences:\n");
    for (std::size_t i = 0; i < ext.levels[1].size(); ++i)
        std::printf("%2zu    %s\n", i + 1, ext.levels[1][i].str(12).c_str());
    auto [limit, unc] = estimate_limit(ext);
    std::printf("\nlimit estimate: %s within %s\n", limit.str(8).c_str(), unc.str(2).c_str());

    Real b = wkb_boundary_constant(Real("1e-9"));
    std::printf("scaling-limit constant b^2 = %s (analytic boundary slope)\n",
                Real(b * b).str(12).c_str());
    return 0;
}
