#include "sqdetect/reference.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "sqdetect/repeat_oracle.hpp"

namespace sqdetect {

namespace {

// True iff w[0 .. 2h-1] counted back from position end (exclusive) splits
// into two equal halves, i.e. a square of half-length h ends at `end`.
bool square_ends_at(std::string_view w, std::size_t end, std::size_t h) {
    return w.compare(end - 2 * h, h, w, end - h, h) == 0;
}

}  // namespace

std::optional<first_square> naive_first_square(std::string_view w) {
    for (std::size_t end = 2; end <= w.size(); ++end) {
        for (std::size_t h = 1; 2 * h <= end; ++h) {
            if (square_ends_at(w, end, h)) {
                const auto start = static_cast<position>(end - 2 * h + 1);
                const auto len = static_cast<position>(2 * h);
                return first_square{static_cast<position>(end),
                                    square_report{start, static_cast<position>(end), len}};
            }
        }
    }
    return std::nullopt;
}

bool is_squarefree(std::string_view w) { return !naive_first_square(w).has_value(); }

position naive_repeat_suffix(std::string_view w) {
    const std::size_t n = w.size();
    for (std::size_t len = n == 0 ? 0 : n - 1; len >= 1; --len) {
        const std::string_view suffix = w.substr(n - len);
        for (std::size_t start = 0; start + len <= n - 1; ++start)
            if (w.compare(start, len, suffix) == 0) return static_cast<position>(len);
    }
    return 0;
}

std::vector<position> naive_repeat_suffix_all(std::string_view w) {
    const auto n = static_cast<position>(w.size());
    std::vector<position> out(static_cast<std::size_t>(n) + 1, 0);
    // Diagonal-wise longest common suffix of each prefix pair at distance d;
    // the earlier occurrence must fit inside the prefix, hence the cap.
    for (position d = 1; d < n; ++d) {
        position run = 0;
        for (position i = d; i < n; ++i) {
            run = w[static_cast<std::size_t>(i)] == w[static_cast<std::size_t>(i - d)] ? run + 1 : 0;
            const position capped = std::min(run, i + 1 - d);
            auto& best = out[static_cast<std::size_t>(i) + 1];
            best = std::max(best, capped);
        }
    }
    return out;
}

namespace {

constexpr int kMaxSigma = 26;

void check_sigma(int sigma) {
    if (sigma < 3)
        throw std::invalid_argument("squarefree generation needs at least three symbols");
    if (sigma > kMaxSigma)
        throw std::invalid_argument("generation is limited to the 26 letter symbols");
}

// Would appending c to the squarefree string w create a square? Any square
// ending at the new position has half-length at most one more than the
// longest repeated suffix of w, because its right half repeats immediately
// before itself.
bool extension_makes_square(const std::string& w, char c, position repeat_len) {
    const auto m = static_cast<position>(w.size());
    const position bound = std::min(repeat_len + 1, (m + 1) / 2);
    for (position h = 1; h <= bound; ++h) {
        // right half: w[m-h+1 .. m-1] + c; left half ends at m-h (0-based).
        if (c != w[static_cast<std::size_t>(m - h)]) continue;
        bool equal = true;
        for (position u = h - 2; u >= 0; --u) {
            if (w[static_cast<std::size_t>(m - h + 1 + u)] !=
                w[static_cast<std::size_t>(m - 2 * h + 1 + u)]) {
                equal = false;
                break;
            }
        }
        if (equal) return true;
    }
    return false;
}

std::vector<char> shuffled_alphabet(int sigma, std::mt19937_64& rng) {
    std::vector<char> order;
    order.reserve(static_cast<std::size_t>(sigma));
    for (int i = 0; i < sigma; ++i) order.push_back(static_cast<char>('a' + i));
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng() % i]);
    return order;
}

}  // namespace

std::string gen_squarefree(std::size_t n, int sigma, std::uint64_t seed) {
    check_sigma(sigma);
    std::mt19937_64 rng(seed);
    std::string w;
    w.reserve(n);

    // The repeat oracle cannot roll back, so it trails the accepted prefix by
    // up to kOracleLag symbols; the repeated-suffix length decays by at most
    // one per symbol, so oracle.last_repeat() + lag stays a valid bound for
    // the whole prefix. Backtracking above the oracle frontier is then free,
    // and only a dead-end cascade deeper than the lag forces a rebuild.
    constexpr std::size_t kOracleLag = 64;
    basic_repeat_oracle<char> oracle;
    std::size_t oracle_len = 0;
    const auto rebuild_oracle_to = [&](std::size_t len) {
        oracle = {};
        for (std::size_t i = 0; i < len; ++i) oracle.extend(w[i]);
        oracle_len = len;
    };

    // Candidate symbols still untried per position, consumed back to front.
    std::vector<std::vector<char>> pending;
    while (w.size() < n) {
        if (pending.size() == w.size()) pending.push_back(shuffled_alphabet(sigma, rng));
        auto& candidates = pending[w.size()];
        bool placed = false;
        while (!candidates.empty()) {
            const char c = candidates.back();
            candidates.pop_back();
            const position bound =
                oracle.last_repeat() + static_cast<position>(w.size() - oracle_len);
            if (!extension_makes_square(w, c, bound)) {
                w.push_back(c);
                placed = true;
                break;
            }
        }
        if (placed) {
            while (w.size() - oracle_len > kOracleLag) {
                oracle.extend(w[oracle_len]);
                ++oracle_len;
            }
            continue;
        }
        pending.pop_back();
        if (w.empty())
            throw std::logic_error("squarefree backtracking exhausted the empty prefix");
        w.pop_back();
        if (oracle_len > w.size())
            rebuild_oracle_to(w.size() - std::min(w.size(), kOracleLag));
    }
    return w;
}

planted_string gen_planted(std::size_t prefix_len, int sigma, std::uint64_t seed) {
    check_sigma(sigma);
    if (prefix_len == 0) {
        planted_string out{"aa", {}};
        out.label = *naive_first_square(out.text);
        return out;
    }
    std::string text = gen_squarefree(prefix_len, sigma, seed);
    std::mt19937_64 rng(seed + 0x517cc1b727220a95ULL);
    const std::size_t repeat_len = 1 + rng() % prefix_len;
    text += text.substr(prefix_len - repeat_len);
    const auto label = naive_first_square(text);
    if (!label) throw std::logic_error("planted string came out squarefree");
    return planted_string{std::move(text), *label};
}

std::string corpus_line(const corpus_entry& entry) {
    std::string line;
    if (entry.label) {
        line = "SQ:" + std::to_string(entry.label->step) + ':' +
               std::to_string(entry.label->square.start) + ':' +
               std::to_string(entry.label->square.length);
    } else {
        line = "SF";
    }
    line += '\t';
    line += entry.text;
    return line;
}

corpus corpus::random(std::size_t count, std::size_t max_len, int sigma, std::uint64_t seed) {
    corpus out;
    out.seed = seed;
    out.sigma = sigma;
    out.entries.reserve(count);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t len = rng() % (max_len + 1);
        std::string w(len, 'a');
        for (auto& c : w) c = static_cast<char>('a' + rng() % static_cast<std::uint64_t>(sigma));
        auto label = naive_first_square(w);
        out.entries.push_back(corpus_entry{std::move(w), label});
    }
    return out;
}

verdict naive_online_detector::push(char c) {
    if (result_) throw already_terminated();
    buf_.push_back(c);
    const std::size_t n = buf_.size();
    for (std::size_t h = 1; 2 * h <= n; ++h) {
        if (square_ends_at(buf_, n, h)) {
            result_ = square_report{static_cast<position>(n - 2 * h + 1),
                                    static_cast<position>(n), static_cast<position>(2 * h)};
            return result_;
        }
    }
    return std::nullopt;
}

}  // namespace sqdetect
