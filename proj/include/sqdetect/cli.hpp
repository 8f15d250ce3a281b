#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sqdetect::cli {

enum class algo_kind { trap, ordered, naive };
enum class format_kind { text, json };

// grep-style status convention: "found" is success.
inline constexpr int exit_square = 0;
inline constexpr int exit_squarefree = 1;
inline constexpr int exit_error = 2;

struct run_config {
    algo_kind algo = algo_kind::ordered;
    format_kind format = format_kind::text;
    std::string input_path;            // empty means stdin
    std::vector<std::uint64_t> sizes;  // bench sizes, strictly increasing
    std::uint64_t seed = 0;
};

struct gen_config {
    std::uint64_t length = 0;
    int sigma = 3;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> plant;  // prefix length for a planted entry
};

// Feeds bytes from `in` one at a time into the configured detector and writes
// exactly one verdict line to `out`. Stops reading as soon as a square is
// found. Returns exit_square / exit_squarefree / exit_error.
int run_detect(const run_config& cfg, std::istream& in, std::ostream& out, std::ostream& err);

// Writes one labeled corpus line.
int run_gen(const gen_config& cfg, std::ostream& out, std::ostream& err);

// For each size, generates a squarefree ternary input and times the
// configured detector over it. Emits a CSV grid
//   algo,n,seconds,work_b,work_s,peak_catcher_cells
// plus '#'-prefixed ratio lines for consecutive doubled sizes. Everything
// except the timing values is deterministic in the flags.
int run_bench(const run_config& cfg, std::ostream& out, std::ostream& err);

}  // namespace sqdetect::cli
