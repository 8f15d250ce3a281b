#include <doctest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "sqdetect/reference.hpp"
#include "sqdetect/repeat_oracle.hpp"

using namespace sqdetect;

namespace {

std::vector<position> oracle_prefixes(std::string_view w) {
    basic_repeat_oracle<char> o;
    std::vector<position> out{0};
    for (char c : w) out.push_back(o.extend(c));
    return out;
}

}  // namespace

TEST_CASE("repeated-suffix lengths on small streams") {
    CHECK(oracle_prefixes("ab") == std::vector<position>{0, 0, 0});
    CHECK(oracle_prefixes("aa") == std::vector<position>{0, 0, 1});
    CHECK(oracle_prefixes("abab") == std::vector<position>{0, 0, 0, 1, 2});
    CHECK(oracle_prefixes("abcab") == std::vector<position>{0, 0, 0, 0, 1, 2});
}

TEST_CASE("fresh oracle reports zero") {
    basic_repeat_oracle<char> o;
    CHECK(o.last_repeat() == 0);
    CHECK(o.size() == 0);
}

TEST_CASE("oracle matches the brute-force value on every prefix, exhaustively") {
    for (int sigma : {2, 3}) {
        testutil::for_each_string(sigma, 9, [&](std::string_view w) {
            if (w.empty()) return;
            CHECK(oracle_prefixes(w) == naive_repeat_suffix_all(w));
        });
    }
}

TEST_CASE("oracle matches the brute-force value on random strings") {
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 400; ++round) {
        const int sigma = std::vector<int>{2, 3, 26}[rng() % 3];
        const std::size_t len = rng() % 301;
        std::string w(len, 'a');
        for (auto& c : w) c = static_cast<char>('a' + rng() % sigma);
        CHECK(oracle_prefixes(w) == naive_repeat_suffix_all(w));
    }
}

TEST_CASE("repeated-suffix length grows by at most one per symbol") {
    std::mt19937_64 rng(55);
    for (int round = 0; round < 200; ++round) {
        const int sigma = 1 + static_cast<int>(rng() % 4);
        basic_repeat_oracle<char> o;
        position prev = 0;
        for (int i = 0; i < 400; ++i) {
            const position t = o.extend(static_cast<char>('a' + rng() % sigma));
            CHECK(t <= prev + 1);
            CHECK(t >= 0);
            CHECK(t <= o.size() - 1);
            prev = t;
        }
    }
}

TEST_CASE("transition lookups stay within the calibrated budget") {
    for (int sigma : {2, 3, 26}) {
        std::mt19937_64 rng(77 + sigma);
        basic_repeat_oracle<char> o;
        const int n = 50'000;
        for (int i = 0; i < n; ++i) o.extend(static_cast<char>('a' + rng() % sigma));
        const double budget =
            testutil::kOracleLookupsPerNLogSigma * n * std::log2(double(sigma) + 1);
        CHECK(static_cast<double>(o.lookups()) <= budget);
    }
    // squarefree input, the detectors' hot case
    const std::string w = gen_squarefree(1 << 16, 3, 31);
    basic_repeat_oracle<char> o;
    for (char c : w) o.extend(c);
    CHECK(static_cast<double>(o.lookups()) <=
          testutil::kOracleLookupsPerNLogSigma * double(w.size()) * std::log2(4.0));
}
