#include "sqdetect/cli.hpp"

#include <chrono>
#include <exception>
#include <iomanip>
#include <istream>
#include <ostream>
#include <type_traits>

#include "sqdetect/ordered_detector.hpp"
#include "sqdetect/reference.hpp"
#include "sqdetect/trap_detector.hpp"

namespace sqdetect::cli {

namespace {

const char* algo_name(algo_kind a) {
    switch (a) {
        case algo_kind::trap: return "trap";
        case algo_kind::ordered: return "ordered";
        case algo_kind::naive: return "naive";
    }
    return "?";
}

void print_square(const run_config& cfg, std::ostream& out, const square_report& r) {
    if (cfg.format == format_kind::json) {
        out << "{\"verdict\":\"square\",\"start\":" << r.start << ",\"end\":" << r.end
            << ",\"length\":" << r.length << "}\n";
    } else {
        out << "SQUARE start=" << r.start << " end=" << r.end << " length=" << r.length << "\n";
    }
}

void print_squarefree(const run_config& cfg, std::ostream& out, position n) {
    if (cfg.format == format_kind::json) {
        out << "{\"verdict\":\"squarefree\",\"length\":" << n << "}\n";
    } else {
        out << "SQUAREFREE length=" << n << "\n";
    }
}

template <typename Detector>
int detect_with(Detector& detector, const run_config& cfg, std::istream& in, std::ostream& out,
                std::ostream& err) {
    position n = 0;
    char c;
    while (in.get(c)) {
        ++n;
        if (const verdict v = detector.push(c)) {
            print_square(cfg, out, *v);
            return exit_square;
        }
    }
    if (in.bad()) {
        err << "sqdetect: error while reading input\n";
        return exit_error;
    }
    print_squarefree(cfg, out, n);
    return exit_squarefree;
}

struct bench_row {
    std::uint64_t n = 0;
    double seconds = 0.0;
    std::uint64_t work_b = 0;
    std::uint64_t work_s = 0;
    std::uint64_t peak_cells = 0;
};

template <typename Detector>
bench_row bench_with(const std::string& input) {
    Detector detector;
    const auto start = std::chrono::steady_clock::now();
    for (char c : input) detector.push(c);
    const auto stop = std::chrono::steady_clock::now();
    bench_row row;
    row.n = input.size();
    row.seconds = std::chrono::duration<double>(stop - start).count();
    if constexpr (!std::is_same_v<Detector, naive_online_detector>) {
        const detector_metrics m = detector.metrics();
        row.work_b = m.work_border;
        row.work_s = m.work_naive;
        row.peak_cells = m.peak_live_cells;
    }
    return row;
}

}  // namespace

int run_detect(const run_config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    switch (cfg.algo) {
        case algo_kind::trap: {
            trap_detector d;
            return detect_with(d, cfg, in, out, err);
        }
        case algo_kind::ordered: {
            ordered_detector d;
            return detect_with(d, cfg, in, out, err);
        }
        case algo_kind::naive: {
            naive_online_detector d;
            return detect_with(d, cfg, in, out, err);
        }
    }
    return exit_error;
}

int run_gen(const gen_config& cfg, std::ostream& out, std::ostream& err) {
    try {
        corpus_entry entry;
        if (cfg.plant) {
            planted_string planted =
                gen_planted(static_cast<std::size_t>(*cfg.plant), cfg.sigma, cfg.seed);
            entry.text = std::move(planted.text);
            entry.label = planted.label;
        } else {
            entry.text = gen_squarefree(static_cast<std::size_t>(cfg.length), cfg.sigma, cfg.seed);
        }
        out << corpus_line(entry) << "\n";
        return 0;
    } catch (const std::exception& e) {
        err << "sqdetect: " << e.what() << "\n";
        return exit_error;
    }
}

int run_bench(const run_config& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.sizes.empty()) {
        err << "sqdetect: bench needs at least one size\n";
        return exit_error;
    }
    for (std::size_t i = 1; i < cfg.sizes.size(); ++i) {
        if (cfg.sizes[i] <= cfg.sizes[i - 1]) {
            err << "sqdetect: bench sizes must be strictly increasing\n";
            return exit_error;
        }
    }

    out << "algo,n,seconds,work_b,work_s,peak_catcher_cells\n";
    std::vector<bench_row> rows;
    for (const std::uint64_t n : cfg.sizes) {
        const std::string input = gen_squarefree(static_cast<std::size_t>(n), 3, cfg.seed);
        bench_row row;
        switch (cfg.algo) {
            case algo_kind::trap: row = bench_with<trap_detector>(input); break;
            case algo_kind::ordered: row = bench_with<ordered_detector>(input); break;
            case algo_kind::naive: row = bench_with<naive_online_detector>(input); break;
        }
        rows.push_back(row);
        out << algo_name(cfg.algo) << ',' << row.n << ',' << std::fixed << std::setprecision(6)
            << row.seconds << ',' << row.work_b << ',' << row.work_s << ',' << row.peak_cells
            << "\n";
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].n != 2 * rows[i - 1].n || rows[i - 1].seconds <= 0.0) continue;
        out << "# ratio " << algo_name(cfg.algo) << " n=" << rows[i - 1].n << "->" << rows[i].n
            << " seconds=" << std::fixed << std::setprecision(3)
            << rows[i].seconds / rows[i - 1].seconds << "\n";
    }
    return 0;
}

}  // namespace sqdetect::cli
