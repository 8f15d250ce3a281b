#pragma once

#include <algorithm>
#include <cassert>
#include <memory>
#include <vector>

#include "sqdetect/catcher.hpp"
#include "sqdetect/text.hpp"

namespace sqdetect {

// Online first-square detector for alphabets that only support equality
// tests. Maintains one or two catchers per power-of-two trap length; at every
// step the live traps tile [1, n-1] exactly, so any square suffix starts
// inside some trap. Work per symbol is O(log n) amortized border/naive steps.
//
// Trap bookkeeping per step, after the new symbol has been fed to all live
// catchers: for each k with 2^k <= n/2 and n divisible by 2^k, taking
// p = n/2^k - 1, a catcher with trap [(p-1)*2^k + 1, p*2^k] is created (its
// window replayed up to n), and when p is odd and > 1 the two older level-k
// catchers are retired; the level-(k+1) trap created by the same step covers
// the span they leave behind.
template <typename Symbol>
class basic_trap_detector {
 public:
    basic_trap_detector() : text_(std::make_unique<basic_text<Symbol>>()) {}

    verdict push(Symbol c) {
        if (result_) throw already_terminated();
        const position n = text_->append(c);

        scratch_.clear();
        for (auto& level : levels_)
            for (auto& cat : level) scratch_.push_back(&cat);
        std::sort(scratch_.begin(), scratch_.end(),
                  [](const auto* a, const auto* b) { return a->trap_begin() < b->trap_begin(); });
        for (auto* cat : scratch_)
            if (verdict hit = cat->feed()) {
                result_ = hit;
                return result_;
            }

        for (int k = 0; (position{1} << k) <= n / 2 && n % (position{1} << k) == 0; ++k) {
            const position len = position{1} << k;
            const position p = n / len - 1;
            if (levels_.size() <= static_cast<std::size_t>(k)) levels_.emplace_back();
            auto& level = levels_[static_cast<std::size_t>(k)];
            level.emplace_back(*text_, (p - 1) * len + 1, p * len);
            ++metrics_.catchers_created;
            const verdict fresh = level.back().caught();
            if (p % 2 != 0 && p > 1) {
                assert(level.size() == 3);
                retire(level[0]);
                retire(level[1]);
                level.erase(level.begin(), level.begin() + 2);
            }
            if (fresh) {
                result_ = fresh;
                return result_;
            }
        }

        std::uint64_t cells = 0;
        for (const auto& level : levels_)
            for (const auto& cat : level) cells += static_cast<std::uint64_t>(cat.window_length());
        metrics_.peak_live_cells = std::max(metrics_.peak_live_cells, cells);
        return std::nullopt;
    }

    // All live traps, sorted by start position.
    std::vector<trap_interval> live_traps() const {
        std::vector<trap_interval> out;
        for (const auto& level : levels_)
            for (const auto& cat : level) out.push_back(cat.trap());
        std::sort(out.begin(), out.end(),
                  [](const trap_interval& a, const trap_interval& b) { return a.begin < b.begin; });
        return out;
    }

    position size() const { return text_->size(); }
    const basic_text<Symbol>& text() const { return *text_; }
    const verdict& result() const { return result_; }

    detector_metrics metrics() const {
        detector_metrics m = metrics_;
        for (const auto& level : levels_)
            for (const auto& cat : level) {
                m.work_border += cat.work().border;
                m.work_naive += cat.work().naive;
                m.window_cells += static_cast<std::uint64_t>(cat.window_length());
            }
        return m;
    }

    // When enabled, keeps the final budget of every retired catcher so tests
    // can audit per-catcher cost; live catchers are appended on query.
    void record_budgets(bool on) { record_budgets_ = on; }

    std::vector<catcher_budget> catcher_budgets() const {
        auto out = retired_;
        for (const auto& level : levels_)
            for (const auto& cat : level) out.push_back(cat.budget());
        return out;
    }

 private:
    void retire(const basic_catcher<Symbol>& cat) {
        metrics_.work_border += cat.work().border;
        metrics_.work_naive += cat.work().naive;
        metrics_.window_cells += static_cast<std::uint64_t>(cat.window_length());
        if (record_budgets_) retired_.push_back(cat.budget());
    }

    std::unique_ptr<basic_text<Symbol>> text_;
    std::vector<std::vector<basic_catcher<Symbol>>> levels_;
    std::vector<basic_catcher<Symbol>*> scratch_;
    verdict result_;
    detector_metrics metrics_;
    bool record_budgets_ = false;
    std::vector<catcher_budget> retired_;
};

using trap_detector = basic_trap_detector<char>;

}  // namespace sqdetect
