#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "sqdetect/text.hpp"

namespace sqdetect {

// Online suffix automaton answering, after each appended symbol, the length
// of the longest suffix of the consumed stream that occurs at least twice in
// it. That value is the longest-string length of the suffix link of the state
// created for the full stream: everything longer occurs only at the end.
//
// Transitions are kept as sorted adjacency arrays, so an extension costs
// O(log sigma) per automaton edge touched, and the total number of edges
// touched over a stream of length n is O(n). State ids are 32-bit: a stream
// long enough to overflow them could not hold its automaton in memory. The
// oracle consumes its own copy of the stream and never shares a text buffer.
template <typename Symbol>
class basic_repeat_oracle {
 public:
    basic_repeat_oracle() { states_.emplace_back(); }

    // Consume the next symbol; returns the new longest-repeated-suffix length.
    position extend(Symbol c) {
        ++length_;
        const id cur = static_cast<id>(states_.size());
        states_.emplace_back();
        states_[cur].len = states_[last_].len + 1;

        id p = last_;
        id q = -1;
        while (p >= 0) {
            node& pn = states_[p];
            ++lookups_;
            const auto it = pn.find(c);
            if (it != pn.next.end() && it->first == c) {
                q = it->second;
                break;
            }
            ++lookups_;
            pn.next.insert(it, {c, cur});
            p = pn.link;
        }

        if (q < 0) {
            states_[cur].link = 0;
        } else if (states_[p].len + 1 == states_[q].len) {
            states_[cur].link = q;
        } else {
            const id clone = static_cast<id>(states_.size());
            node split = states_[q];
            split.len = states_[p].len + 1;
            lookups_ += split.next.size();
            states_.push_back(std::move(split));
            states_[q].link = clone;
            states_[cur].link = clone;
            while (p >= 0) {
                node& pn = states_[p];
                ++lookups_;
                const auto it = pn.find(c);
                if (it == pn.next.end() || it->first != c || it->second != q) break;
                it->second = clone;
                p = pn.link;
            }
        }

        last_ = cur;
        repeat_len_ = states_[states_[cur].link].len;
        return repeat_len_;
    }

    position last_repeat() const { return repeat_len_; }
    position size() const { return length_; }
    std::size_t state_count() const { return states_.size(); }

    // Number of transition operations performed so far; each is one ordered
    // lookup or insertion.
    std::uint64_t lookups() const { return lookups_; }

 private:
    using id = std::int32_t;

    struct node {
        id len = 0;
        id link = -1;
        std::vector<std::pair<Symbol, id>> next;  // sorted by symbol

        typename std::vector<std::pair<Symbol, id>>::iterator find(Symbol c) {
            return std::lower_bound(
                next.begin(), next.end(), c,
                [](const std::pair<Symbol, id>& e, Symbol s) { return e.first < s; });
        }
    };

    std::vector<node> states_;
    id last_ = 0;
    position length_ = 0;
    position repeat_len_ = 0;
    std::uint64_t lookups_ = 0;
};

using repeat_oracle = basic_repeat_oracle<char>;

}  // namespace sqdetect
