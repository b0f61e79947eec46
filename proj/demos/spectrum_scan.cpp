// Walk the J=4 family across the symmetry boundary: print how the
// quasi-exact levels pair up into complex conjugates as a^2 drops below
// the critical value.

#include "qes/boundary.hpp"
#include "qes/spectrum.hpp"

#include <cstdio>

int main() {
    using namespace qes;
    const int J = 4;
    auto cb = find_critical_a_squared(J, 12);
    PrecisionGuard guard(40);
    std::printf("critical a^2 for J=%d: %s\n\n", J, cb.a_crit_sq.str(14).c_str());
    for (const char* f : {"1.30", "1.05", "1.00001", "0.95", "0.60", "0.20"}) {
        Real t = cb.a_crit_sq * Real(f);
        Spectrum s = qes_spectrum(QesProblem::pt(J, sqrt(t)), 30);
        std::printf("a^2 = %s x critical:\n", f);
        for (const auto& e : s.real_values)
            std::printf("    real  %s\n", e.str(12).c_str());
        for (const auto& pr : s.complex_pairs)
            std::printf("    pair  %s +- %s i\n", pr.first.str(12).c_str(),
                        pr.second.str(12).c_str());
    }
    return 0;
}
