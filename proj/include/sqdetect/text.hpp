#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace sqdetect {

// Positions are 1-based throughout the library; 0 is never a valid index.
using position = std::int64_t;

// Append-only symbol buffer shared read-only by a detector's catchers.
// Only the owning detector appends.
template <typename Symbol = char>
class basic_text {
 public:
    position append(Symbol c) {
        chars_.push_back(c);
        return static_cast<position>(chars_.size());
    }

    Symbol at(position p) const {
        assert(p >= 1 && p <= size());
        return chars_[static_cast<std::size_t>(p - 1)];
    }

    position size() const { return static_cast<position>(chars_.size()); }

 private:
    std::vector<Symbol> chars_;
};

using text = basic_text<char>;

// A square substring: text[start..end] is xx for the half x of size length/2.
struct square_report {
    position start = 0;
    position end = 0;
    position length = 0;

    friend bool operator==(const square_report&, const square_report&) = default;
};

// Empty optional means "squarefree so far".
using verdict = std::optional<square_report>;

// Thrown when a detector or catcher is used after it reported a square;
// the squarefree precondition its state depends on no longer holds.
struct already_terminated : std::logic_error {
    already_terminated() : std::logic_error("square already reported; state is final") {}
};

// True iff the two halves of text[start..end] match symbol by symbol.
// The length field must be even and consistent with [start, end].
template <typename Symbol>
bool verify_square(const basic_text<Symbol>& t, const square_report& r) {
    if (r.start < 1 || r.end < r.start || r.end > t.size())
        throw std::out_of_range("square_report outside the text");
    if (r.length != r.end - r.start + 1 || r.length % 2 != 0) return false;
    const position half = r.length / 2;
    for (position k = 0; k < half; ++k)
        if (t.at(r.start + k) != t.at(r.start + half + k)) return false;
    return true;
}

}  // namespace sqdetect
