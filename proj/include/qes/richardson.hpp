#pragma once

#include "qes/errors.hpp"
#include "qes/precision.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qes {

/// (index, value) sequence: indices must be consecutive. Extrapolation
/// weights use the 1-based position within the sequence, which is the
/// convention that reproduces the published extrapolant tables entrywise.
using Sequence = std::vector<std::pair<int, Real>>;

/// One Richardson step: R(n) = (n+1) A(n+1) - n A(n) with n the 1-based
/// position. Exact for sequences of the form L + c/n. Output is one
/// shorter and reindexed from 1.
inline Sequence richardson_step(const Sequence& seq) {
    if (seq.size() < 2) throw TooShort("richardson_step: need at least 2 entries");
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (seq[i].first != seq[i - 1].first + 1)
            throw std::invalid_argument("richardson_step: indices must be consecutive");
    Sequence out;
    out.reserve(seq.size() - 1);
    for (std::size_t n = 1; n < seq.size(); ++n) {
        Real v = Real(static_cast<int>(n) + 1) * seq[n].second -
                 Real(static_cast<int>(n)) * seq[n - 1].second;
        out.emplace_back(static_cast<int>(n), v);
    }
    return out;
}

/// All levels of repeated extrapolation. Level 0 is the input sequence
/// itself; level r applies richardson_step r times.
struct ExtrapolationTable {
    Sequence base;
    std::vector<std::vector<Real>> levels;  // levels[r], length base.size()-r
    std::vector<std::string> labels;
};

inline ExtrapolationTable repeated_richardson(const Sequence& seq, int levels) {
    if (levels < 1) throw std::invalid_argument("repeated_richardson: levels must be >= 1");
    if (seq.size() <= static_cast<std::size_t>(levels))
        throw TooShort("repeated_richardson: sequence too short for requested depth");
    ExtrapolationTable table;
    table.base = seq;
    Sequence cur = seq;
    auto values = [](const Sequence& s) {
        std::vector<Real> v;
        v.reserve(s.size());
        for (const auto& p : s) v.push_back(p.second);
        return v;
    };
    table.levels.push_back(values(cur));
    table.labels.push_back("base");
    for (int r = 1; r <= levels; ++r) {
        cur = richardson_step(cur);
        table.levels.push_back(values(cur));
        table.labels.push_back("R^" + std::to_string(r));
    }
    return table;
}

/// r-th order Richardson extrapolant with the full binomial weights,
///
///   R_r(n) = sum_{k=0}^r A(n+k) (n+k)^r (-1)^(k+r) / (k! (r-k)!),
///
/// which annihilates every term c_i/n^i for i = 1..r exactly. Note this
/// differs from iterating richardson_step (the convention behind the
/// published deep tables), which is exact only for the leading 1/n term.
inline Sequence nth_richardson(const Sequence& seq, int order) {
    if (order < 1) throw std::invalid_argument("nth_richardson: order must be >= 1");
    if (seq.size() <= static_cast<std::size_t>(order))
        throw TooShort("nth_richardson: sequence too short for requested order");
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (seq[i].first != seq[i - 1].first + 1)
            throw std::invalid_argument("nth_richardson: indices must be consecutive");
    Real rfact(1);
    for (int i = 2; i <= order; ++i) rfact *= i;
    Sequence out;
    out.reserve(seq.size() - static_cast<std::size_t>(order));
    for (std::size_t n = 1; n + static_cast<std::size_t>(order) <= seq.size(); ++n) {
        Real acc(0);
        Real binom(1);  // C(order, k)
        for (int k = 0; k <= order; ++k) {
            Real m(static_cast<int>(n) + k);
            Real w = binom * pow(m, order);
            if ((order - k) % 2 != 0) w = -w;
            acc += w * seq[n - 1 + static_cast<std::size_t>(k)].second;
            binom = binom * (order - k) / (k + 1);
        }
        out.emplace_back(static_cast<int>(n), acc / rfact);
    }
    return out;
}

/// Limit estimate: the deepest level is not automatically the best once
/// input noise amplifies, so pick the level whose last three entries have
/// the smallest spread; the spread doubles as the uncertainty.
inline std::pair<Real, Real> estimate_limit(const ExtrapolationTable& table) {
    if (table.levels.size() < 3)  // base + two extrapolation levels
        throw std::invalid_argument("estimate_limit: need at least 2 extrapolation levels");
    using boost::multiprecision::abs;
    std::size_t best = 1;
    Real best_spread(-1);
    for (std::size_t r = 1; r < table.levels.size(); ++r) {
        const auto& lv = table.levels[r];
        if (lv.size() < 3) break;
        Real mx = lv[lv.size() - 1], mn = mx;
        for (std::size_t i = lv.size() - 3; i < lv.size(); ++i) {
            if (lv[i] > mx) mx = lv[i];
            if (lv[i] < mn) mn = lv[i];
        }
        Real spread = mx - mn;
        if (best_spread < 0 || spread <= best_spread) {
            best_spread = spread;
            best = r;
        }
    }
    if (best_spread < 0) {
        const auto& lv = table.levels.back();
        return {lv.back(), abs(lv.back() - table.levels[table.levels.size() - 2].back())};
    }
    return {table.levels[best].back(), best_spread};
}

} // namespace qes
