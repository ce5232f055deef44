#include "cmdual/fixtures.hpp"

#include <algorithm>
#include <sstream>

#include "cmdual/dual.hpp"

namespace cm {

const std::vector<Fixture>& worked_examples() {
    static const std::vector<Fixture> fixtures = {
        {
            "example1", 8, 7, 1094, 7, 6,
            {"00000010", "00002010", "00020010", "00200010", "00202010",
             "02000010", "02002010", "02020010", "20000010", "20002010",
             "20020010", "20200010", "20202010"},
            {},
            104, -1, -1,
        },
        {
            "example2", 9, 7, -1, 4, 3,
            {"010101001", "010121001", "012101001", "210101001", "210121001"},
            {},
            45, -1, -1,
        },
        {
            "example3", 8, 7, -1, 7, 6,
            {},
            {"00000012", "00002012", "00020012", "00200012", "00202012",
             "02000012", "02002012", "02020012"},
            -1, 64, -1,
        },
        {
            "example4", 9, 7, -1, 4, 3,
            {},
            {"010101201", "012101201", "210101201"},
            -1, 27, -1,
        },
        {
            "example5", 8, 7, 1094, 7, 6,
            {"00000010", "00002010", "00020010", "00200010", "00202010",
             "02000010", "02002010", "02020010", "20000010", "20002010",
             "20020010", "20200010", "20202010"},
            {"00000012", "00002012", "00020012", "00200012", "00202012",
             "02000012", "02002012", "02020012"},
            -1, -1, 21,
        },
        {
            "example6", 9, 7, 1094, 4, 3,
            {"010101001", "010121001", "012101001", "210101001", "210121001"},
            {"010101201", "012101201", "210101201"},
            -1, -1, 8,
        },
        {
            "n9k5", 9, 5, 122, -1, -1,
            {"000100001", "000100201", "000102001", "000102201", "002100001",
             "002102001", "020100001", "022100001", "200100001", "200100201",
             "202100001", "220100001", "222100001"},
            {"000120001", "000120201", "000122001", "000122201", "002120001",
             "002122001", "020120001", "022120001"},
            -1, -1, 21,
        },
        {
            "n11k5", 11, 5, 122, -1, -1,
            {"00001000010", "00001000210", "00001002010", "00001002210",
             "00001020010", "00001020210", "00001022010", "00001022210",
             "00001200010", "00001200210", "00001202010", "00001202210",
             "00001220010", "00001220210", "00001222010", "00001222210",
             "00201000010", "00201020010", "00201200010", "00201220010",
             "02001000010", "02001000210", "02001200010", "02001200210",
             "02201000010", "02201200010", "20001000010", "20001000210",
             "20001002010", "20001002210", "20201000010", "22001000010",
             "22001000210", "22201000010"},
            {"00001000012", "00001000212", "00001002012", "00001002212",
             "00001020012", "00001020212", "00001022012", "00001022212",
             "00201000012", "00201020012", "02001000012", "02001000212",
             "02201000012", "20001000012", "20001000212", "20001002012",
             "20001002212", "20201000012", "22001000012", "22001000212",
             "22201000012"},
            -1, -1, 55,
        },
    };
    return fixtures;
}

namespace {

std::vector<std::string> to_strings(const std::vector<TernaryIndex>& set) {
    std::vector<std::string> out;
    out.reserve(set.size());
    for (const auto& j : set) out.push_back(j.str());
    return out;
}

void diff_set(FixtureResult& res, const std::string& field,
              const std::vector<std::string>& expected,
              std::vector<std::string> actual) {
    std::vector<std::string> exp = expected;
    std::sort(exp.begin(), exp.end());
    std::sort(actual.begin(), actual.end());
    if (exp == actual) return;
    std::ostringstream os;
    os << field << ": expected " << exp.size() << " strings, got " << actual.size();
    for (const auto& s : exp)
        if (!std::binary_search(actual.begin(), actual.end(), s))
            os << " [missing " << s << "]";
    for (const auto& s : actual)
        if (!std::binary_search(exp.begin(), exp.end(), s))
            os << " [extra " << s << "]";
    res.diffs.push_back(os.str());
}

} // namespace

FixtureResult run_fixture(const Fixture& fx) {
    FixtureResult res;
    res.id = fx.id;
    auto mismatch = [&](const std::string& field, Int expected, Int actual) {
        if (expected == actual) return;
        res.diffs.push_back(field + ": expected " + std::to_string(expected) +
                            ", got " + std::to_string(actual));
    };

    const CmParams params = derive_params(fx.n, fx.k);
    if (fx.d >= 0) mismatch("d", fx.d, params.d);
    if (fx.w >= 0) mismatch("w", fx.w, params.w);
    if (fx.parity_count >= 0) mismatch("parity", fx.parity_count, params.parity_count);

    const IndexSets sets = gen_sets(params);
    if (!fx.u_set.empty()) diff_set(res, "U", fx.u_set, to_strings(sets.U));
    if (!fx.v_set.empty()) diff_set(res, "V", fx.v_set, to_strings(sets.V));
    if (fx.term_count >= 0)
        mismatch("terms", fx.term_count,
                 static_cast<Int>(sets.U.size() + sets.V.size()));

    if (fx.s0_size >= 0 || fx.s1_size >= 0) {
        const auto [s0, s1] = brute_S0_S1(params);
        if (fx.s0_size >= 0) mismatch("|S0|", fx.s0_size, static_cast<Int>(s0.size()));
        if (fx.s1_size >= 0) mismatch("|S1|", fx.s1_size, static_cast<Int>(s1.size()));
    }

    res.ok = res.diffs.empty();
    return res;
}

std::vector<FixtureResult> run_fixtures() {
    std::vector<FixtureResult> out;
    for (const auto& fx : worked_examples()) out.push_back(run_fixture(fx));
    return out;
}

} // namespace cm
