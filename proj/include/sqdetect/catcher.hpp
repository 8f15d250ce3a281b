#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sqdetect/text.hpp"

namespace sqdetect {

// Closed position interval; begin > end encodes the empty interval.
struct trap_interval {
    position begin = 1;
    position end = 0;

    bool empty() const { return begin > end; }
    position length() const { return empty() ? 0 : end - begin + 1; }

    friend bool operator==(const trap_interval&, const trap_interval&) = default;
};

// Loop-iteration counters of one catcher: `border` counts fallback steps of
// the border-array recurrence, `naive` counts accepted symbol matches of the
// naive suffix scan.
struct catcher_work {
    std::uint64_t border = 0;
    std::uint64_t naive = 0;
};

// Final window length and work of one catcher, recorded when it is retired.
struct catcher_budget {
    position window = 0;
    catcher_work work;
};

// Totals over every catcher a detector ever owned, plus the peak number of
// border-array cells held live at once.
struct detector_metrics {
    std::uint64_t catchers_created = 0;
    std::uint64_t work_border = 0;
    std::uint64_t work_naive = 0;
    std::uint64_t window_cells = 0;
    std::uint64_t peak_live_cells = 0;
};

// Watches the growing text for square suffixes whose first symbol lies in the
// trap [trap_begin, trap_end]. Requires every feed to happen while the text in
// front of the newest symbol is squarefree; under that precondition a square
// suffix starting inside the trap is reported as soon as it appears, provided
// the trap is no longer than the window text[trap_end+1 .. n].
//
// The catcher keeps the border array b of its window (b[k] = length of the
// longest boundary of text[trap_end+1 .. k], with a -1 sentinel below the
// window) and a match length m = longest suffix of text[trap_begin..trap_end]
// that is also a suffix of text[1 .. n-b[n]], maintained lazily. A square
// suffix, necessarily of length 2*(n - trap_end - b[n]), is present exactly
// when 2*b[n] + m >= n - trap_end.
//
// A trap with begin == end + 1 is permanently inert and never fires.
template <typename Symbol>
class basic_catcher {
 public:
    // Replays the already-present window text[trap_end+1 .. n] position by
    // position. If the replay detects a square suffix (only possible at the
    // final position while the precondition holds), caught() reports it.
    basic_catcher(const basic_text<Symbol>& txt, position trap_begin, position trap_end)
        : text_(&txt), trap_{trap_begin, trap_end}, processed_(trap_end) {
        if (trap_begin > trap_end + 1)
            throw std::invalid_argument("catcher: trap begin may exceed trap end by at most one");
        if (trap_begin <= 0 && !trap_.empty())
            throw std::invalid_argument("catcher: non-empty trap must start at a positive position");
        if (trap_end > txt.size())
            throw std::invalid_argument("catcher: trap end lies beyond the current text");
        if (trap_.empty()) return;
        border_.push_back(-1);
        while (processed_ < text_->size() && !caught_) advance();
    }

    // Process the next text position (exactly one symbol must have been
    // appended since the last feed). Inert catchers always report nothing.
    verdict feed() {
        if (caught_) throw already_terminated();
        if (trap_.empty()) return std::nullopt;
        assert(processed_ < text_->size());
        return advance();
    }

    const verdict& caught() const { return caught_; }
    const trap_interval& trap() const { return trap_; }
    position trap_begin() const { return trap_.begin; }
    position trap_end() const { return trap_.end; }
    position window_length() const { return trap_.empty() ? 0 : processed_ - trap_.end; }
    const catcher_work& work() const { return work_; }
    catcher_budget budget() const { return {window_length(), work_}; }

    // Border values for the window, sentinel first: raw[k] = b[trap_end + k].
    const std::vector<position>& border_raw() const { return border_; }
    position match_length() const { return match_; }

 private:
    verdict advance() {
        const position n = ++processed_;
        const position j = trap_.end;
        const Symbol latest = text_->at(n);

        position b = border_.back() + 1;
        while (b > 0 && text_->at(j + b) != latest) {
            b = border_[static_cast<std::size_t>(b - 1)] + 1;
            match_ = 0;
            ++work_.border;
        }
        border_.push_back(b);

        if (2 * b + trap_.length() >= n - j && match_ == 0) {
            while (j - match_ >= trap_.begin &&
                   text_->at(n - b - match_) == text_->at(j - match_)) {
                ++match_;
                ++work_.naive;
            }
        }
        if (2 * b + match_ >= n - j) {
            const position len = 2 * (n - j - b);
            caught_ = square_report{n - len + 1, n, len};
            return caught_;
        }
        return std::nullopt;
    }

    const basic_text<Symbol>* text_;
    trap_interval trap_;
    position processed_;              // text length this catcher has seen
    std::vector<position> border_;    // border_[k] = b[trap_end + k], border_[0] = -1
    position match_ = 0;
    catcher_work work_;
    verdict caught_;
};

using catcher = basic_catcher<char>;

}  // namespace sqdetect
