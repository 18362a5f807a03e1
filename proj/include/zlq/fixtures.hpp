#pragma once

#include <zlq/family.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace zlq {

/// Verified reference families for q = 3..7 (sizes 2, 6, 13, 22, 32),
/// embedded at build time from data/families/q<q>.zlq.
auto reference_family(int q) -> Family;
auto reference_family_text(int q) -> std::string_view;
auto reference_family_qs() -> std::vector<int>;

struct ReferenceRow
{
    int q = 0;
    int m = 0;       // C(q+1, 2)
    int n = 0;       // q + 1
    int z = 0;       // q(q+1)
    int e2 = 0;      // |E2| value or lower bound
    int zl = 0;      // z + e2
    bool exact = false;
};

/// Known values and lower bounds of z_L for q = 3..7.
auto reference_table() -> std::vector<ReferenceRow>;

/// (z_L - z) / z in percent, for q = 4..7.
auto gap_ratio(int q) -> double;

/// One decimal, prefixed with ">=" when the z_L entry is a lower bound.
auto format_gap_ratio(int q) -> std::string;

/// 2 C(4t, 2) + 4t^2 - 2t, the K_{4t} block construction bound.
auto k4t_bound(int t) -> std::int64_t;

} // namespace zlq
