#pragma once

#include <algorithm>
#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "sqdetect/catcher.hpp"
#include "sqdetect/repeat_oracle.hpp"
#include "sqdetect/text.hpp"

namespace sqdetect {

// One push's catcher maintenance, for tests that audit update frequency.
struct ordered_update {
    position step = 0;
    bool collapsed = false;       // budget clamped down to the repeat length
    bool replaced_front = false;  // first and second catchers rebuilt
    bool replaced_tail = false;   // third catcher rebuilt
    position budget = 0;          // budget value after the step
};

// Online first-square detector for ordered alphabets. While the text stays
// squarefree, a square suffix appearing at step n must have length in
// (t, 2t] where t is the longest-repeated-suffix length, so its start lies
// in [n-2t+1, n-t]. Three catchers cover that block. Their traps are steered
// by a budget s kept within 3s <= 4t <= 4s and are rebuilt only when the
// block outgrows them, which makes the total maintenance cost linear; with
// the suffix-automaton oracle the whole detector runs in O(n log sigma).
//
// Per push: s increases by one; if 3s > 4t the budget collapses to t and all
// catchers are rebuilt. The front pair is rebuilt when its first trap no
// longer reaches max(n-2t+1, 1), taking traps [max(n-4s+1,1), max(n-2s,1)]
// and [j1+1, n-s]; the tail catcher is rebuilt when 4*j3 < 4n - 3s, taking
// trap [n-s+1, n-ceil(s/2)]. Any trap may come out empty. Rebuilt catchers
// replay their windows up to n; the others are fed the new symbol.
template <typename Symbol>
class basic_ordered_detector {
 public:
    basic_ordered_detector() : text_(std::make_unique<basic_text<Symbol>>()) {}

    verdict push(Symbol c) {
        if (result_) throw already_terminated();
        const position n = text_->append(c);
        const position t = oracle_.extend(c);

        ordered_update ev;
        ev.step = n;
        ++budget_;
        if (3 * budget_ > 4 * t) {
            budget_ = t;
            ev.collapsed = true;
            drop(first_);
            drop(second_);
            drop(third_);
        }
        const position s = budget_;
        ev.budget = s;

        if (!first_ || first_->trap_begin() > std::max<position>(n - 2 * t + 1, 1)) {
            drop(first_);
            drop(second_);
            const position j1 = std::max<position>(n - 2 * s, 1);
            first_.emplace(*text_, std::max<position>(n - 4 * s + 1, 1), j1);
            second_.emplace(*text_, j1 + 1, n - s);
            metrics_.catchers_created += 2;
            ev.replaced_front = true;
        }
        if (!third_ || 4 * third_->trap_end() < 4 * n - 3 * s) {
            drop(third_);
            third_.emplace(*text_, n - s + 1, n - (s + 1) / 2);
            ++metrics_.catchers_created;
            ev.replaced_tail = true;
        }

        const verdict hit_first = ev.replaced_front ? first_->caught() : first_->feed();
        const verdict hit_second = ev.replaced_front ? second_->caught() : second_->feed();
        const verdict hit_third = ev.replaced_tail ? third_->caught() : third_->feed();

        if (record_updates_ && (ev.collapsed || ev.replaced_front || ev.replaced_tail))
            updates_.push_back(ev);

        if (hit_first) result_ = hit_first;
        else if (hit_second) result_ = hit_second;
        else if (hit_third) result_ = hit_third;
        if (result_) return result_;

        const std::uint64_t cells = static_cast<std::uint64_t>(
            first_->window_length() + second_->window_length() + third_->window_length());
        metrics_.peak_live_cells = std::max(metrics_.peak_live_cells, cells);
        return std::nullopt;
    }

    // Current traps in front-to-tail order; never-created catchers render as
    // empty intervals.
    std::array<trap_interval, 3> traps() const {
        return {interval_of(first_), interval_of(second_), interval_of(third_)};
    }

    position size() const { return text_->size(); }
    position budget() const { return budget_; }
    position last_repeat() const { return oracle_.last_repeat(); }
    const basic_text<Symbol>& text() const { return *text_; }
    const basic_repeat_oracle<Symbol>& oracle() const { return oracle_; }
    const verdict& result() const { return result_; }

    detector_metrics metrics() const {
        detector_metrics m = metrics_;
        for (const auto* cat : {&first_, &second_, &third_})
            if (*cat) {
                m.work_border += (*cat)->work().border;
                m.work_naive += (*cat)->work().naive;
                m.window_cells += static_cast<std::uint64_t>((*cat)->window_length());
            }
        return m;
    }

    void record_budgets(bool on) { record_budgets_ = on; }

    std::vector<catcher_budget> catcher_budgets() const {
        auto out = retired_;
        for (const auto* cat : {&first_, &second_, &third_})
            if (*cat) out.push_back((*cat)->budget());
        return out;
    }

    void record_updates(bool on) { record_updates_ = on; }
    const std::vector<ordered_update>& updates() const { return updates_; }

 private:
    static trap_interval interval_of(const std::optional<basic_catcher<Symbol>>& cat) {
        return cat ? cat->trap() : trap_interval{};
    }

    void drop(std::optional<basic_catcher<Symbol>>& cat) {
        if (!cat) return;
        metrics_.work_border += cat->work().border;
        metrics_.work_naive += cat->work().naive;
        metrics_.window_cells += static_cast<std::uint64_t>(cat->window_length());
        if (record_budgets_) retired_.push_back(cat->budget());
        cat.reset();
    }

    std::unique_ptr<basic_text<Symbol>> text_;
    basic_repeat_oracle<Symbol> oracle_;
    position budget_ = 0;
    std::optional<basic_catcher<Symbol>> first_;
    std::optional<basic_catcher<Symbol>> second_;
    std::optional<basic_catcher<Symbol>> third_;
    verdict result_;
    detector_metrics metrics_;
    bool record_budgets_ = false;
    std::vector<catcher_budget> retired_;
    bool record_updates_ = false;
    std::vector<ordered_update> updates_;
};

using ordered_detector = basic_ordered_detector<char>;

}  // namespace sqdetect
