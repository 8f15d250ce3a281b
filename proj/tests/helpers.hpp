#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "sqdetect/reference.hpp"
#include "sqdetect/text.hpp"

namespace testutil {

// Work-counter bounds, measured once on the seeded corpora below and frozen
// with roughly 2x headroom:
//   - max naive work per window cell observed: 1.31
//   - max trap-detector total work / (n log2(n+1)) observed: 1.93
//   - max ordered-detector (work + catchers created) / n observed: 10.8
//   - max oracle lookups / (n log2(sigma+1)) observed: 4.75
inline constexpr double kCatcherNaivePerWindow = 3.0;
inline constexpr double kTrapWorkPerNLogN = 3.0;
inline constexpr double kOrderedWorkPerN = 16.0;
inline constexpr double kOracleLookupsPerNLogSigma = 8.0;

inline sqdetect::basic_text<char> make_text(std::string_view s) {
    sqdetect::basic_text<char> t;
    for (char c : s) t.append(c);
    return t;
}

// Visits every string over {'a', ..., 'a'+sigma-1} of length <= max_len,
// including the empty one, in prefix order.
template <typename Fn>
void for_each_string(int sigma, int max_len, Fn&& fn) {
    std::string buf;
    auto walk = [&](auto&& self) -> void {
        fn(std::string_view(buf));
        if (static_cast<int>(buf.size()) == max_len) return;
        for (int c = 0; c < sigma; ++c) {
            buf.push_back(static_cast<char>('a' + c));
            self(self);
            buf.pop_back();
        }
    };
    walk(walk);
}

// Visits every squarefree string of length <= max_len (the prefix-closed set)
// plus, when with_extensions is set, each of its one-symbol extensions.
template <typename Fn>
void for_each_squarefree(int sigma, int max_len, bool with_extensions, Fn&& fn) {
    std::string buf;
    auto walk = [&](auto&& self) -> void {
        fn(std::string_view(buf));
        if (static_cast<int>(buf.size()) == max_len) return;
        for (int c = 0; c < sigma; ++c) {
            buf.push_back(static_cast<char>('a' + c));
            if (sqdetect::is_squarefree(buf)) {
                self(self);
            } else if (with_extensions) {
                fn(std::string_view(buf));
            }
            buf.pop_back();
        }
    };
    walk(walk);
}

struct run_result {
    std::optional<sqdetect::position> step;
    sqdetect::square_report report;
};

// Streams w into a fresh detector; stops at the first square.
template <typename Detector>
run_result run_detector(Detector& d, std::string_view w) {
    sqdetect::position i = 0;
    for (char c : w) {
        ++i;
        if (const sqdetect::verdict v = d.push(c)) return {i, *v};
    }
    return {};
}

inline std::optional<sqdetect::position> expected_step(std::string_view w) {
    const auto fs = sqdetect::naive_first_square(w);
    return fs ? std::optional<sqdetect::position>(fs->step) : std::nullopt;
}

}  // namespace testutil
