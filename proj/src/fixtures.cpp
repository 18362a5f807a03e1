#include <zlq/errors.hpp>
#include <zlq/fixtures.hpp>

#include <cstdio>
#include <utility>

namespace zlq {

namespace detail
{
    auto fixture_texts() -> const std::vector<std::pair<int, std::string_view>> &;
}

auto reference_family_text(int q) -> std::string_view
{
    for (auto & [fq, text] : detail::fixture_texts())
        if (fq == q)
            return text;
    throw ParameterError("no reference family for q=" + std::to_string(q) + " (available: 3..7)");
}

auto reference_family(int q) -> Family
{
    return parse_family(reference_family_text(q));
}

auto reference_family_qs() -> std::vector<int>
{
    std::vector<int> qs;
    for (auto & entry : detail::fixture_texts())
        qs.push_back(entry.first);
    return qs;
}

auto reference_table() -> std::vector<ReferenceRow>
{
    // q, |E2|, exact
    const std::pair<int, std::pair<int, bool>> rows[] = {
        {3, {2, true}}, {4, {6, true}}, {5, {13, false}}, {6, {22, false}}, {7, {32, false}}};
    std::vector<ReferenceRow> table;
    for (auto & [q, entry] : rows) {
        ReferenceRow r;
        r.q = q;
        r.m = (q + 1) * q / 2;
        r.n = q + 1;
        r.z = q * (q + 1);
        r.e2 = entry.first;
        r.zl = r.z + r.e2;
        r.exact = entry.second;
        table.push_back(r);
    }
    return table;
}

auto gap_ratio(int q) -> double
{
    if (q < 4 || q > 7)
        throw ParameterError("gap ratios are tabulated for q = 4..7, got " + std::to_string(q));
    for (auto & r : reference_table())
        if (r.q == q)
            return 100.0 * (r.zl - r.z) / r.z;
    throw ParameterError("no reference row for q=" + std::to_string(q));
}

auto format_gap_ratio(int q) -> std::string
{
    bool exact = false;
    for (auto & r : reference_table())
        if (r.q == q)
            exact = r.exact;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s%.1f%%", exact ? "" : ">=", gap_ratio(q));
    return buf;
}

auto k4t_bound(int t) -> std::int64_t
{
    if (t < 1)
        throw ParameterError("t must be at least 1");
    const std::int64_t n = 4 * static_cast<std::int64_t>(t);
    return 2 * (n * (n - 1) / 2) + 4 * static_cast<std::int64_t>(t) * t - 2 * t;
}

} // namespace zlq
