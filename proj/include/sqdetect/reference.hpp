#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqdetect/text.hpp"

namespace sqdetect {

// First step whose prefix contains a square, with one witness square ending
// exactly at that step (the shortest such witness).
struct first_square {
    position step = 0;
    square_report square;

    friend bool operator==(const first_square&, const first_square&) = default;
};

// Brute-force ground truth. Deliberately simple scans; these functions anchor
// every other result in the repository, so clarity beats speed.
std::optional<first_square> naive_first_square(std::string_view w);
bool is_squarefree(std::string_view w);

// Length of the longest suffix of w occurring at least twice in w.
position naive_repeat_suffix(std::string_view w);

// The same value for every prefix: out[i] is the answer for w[0 .. i-1].
// O(n^2) over all prefixes together.
std::vector<position> naive_repeat_suffix_all(std::string_view w);

// Squarefree string of exactly n symbols over {'a', ..., 'a'+sigma-1},
// 3 <= sigma <= 26, built by seeded randomized backtracking. Deterministic in
// (n, sigma, seed). Two-symbol alphabets admit no squarefree string of length
// four, so sigma < 3 is rejected.
std::string gen_squarefree(std::size_t n, int sigma, std::uint64_t seed);

// Squarefree prefix of prefix_len symbols followed by a repeat of one of its
// suffixes, forcing a square; the label is recomputed from scratch before the
// string is returned.
struct planted_string {
    std::string text;
    first_square label;
};
planted_string gen_planted(std::size_t prefix_len, int sigma, std::uint64_t seed);

// Labeled test corpus. Labels always agree with naive_first_square.
struct corpus_entry {
    std::string text;
    std::optional<first_square> label;
};

// Serialized as "SF\t<text>" or "SQ:<step>:<start>:<length>\t<text>".
std::string corpus_line(const corpus_entry& entry);

struct corpus {
    std::uint64_t seed = 0;
    int sigma = 0;
    std::vector<corpus_entry> entries;

    // count uniform random strings with lengths in [0, max_len].
    static corpus random(std::size_t count, std::size_t max_len, int sigma, std::uint64_t seed);
};

// Online detector that re-checks, after every pushed symbol, whether some
// square ends at the new position. Quadratic per step in the worst case;
// exists for cross-validation, not performance.
class naive_online_detector {
 public:
    verdict push(char c);
    position size() const { return static_cast<position>(buf_.size()); }
    const verdict& result() const { return result_; }

 private:
    std::string buf_;
    verdict result_;
};

}  // namespace sqdetect
