#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "sqdetect/cli.hpp"

namespace cli = sqdetect::cli;

int main(int argc, char** argv) {
    CLI::App app{"Online detection of the first square (xx substring) in a byte stream"};

    cli::run_config cfg;
    cli::gen_config gen;

    const std::map<std::string, cli::algo_kind> algo_names{
        {"trap", cli::algo_kind::trap},
        {"ordered", cli::algo_kind::ordered},
        {"naive", cli::algo_kind::naive}};
    const std::map<std::string, cli::format_kind> format_names{
        {"text", cli::format_kind::text}, {"json", cli::format_kind::json}};

    std::string file;
    app.add_option("--algo", cfg.algo, "Detector: trap, ordered or naive (default ordered)")
        ->transform(CLI::CheckedTransformer(algo_names));
    app.add_option("--format", cfg.format, "Output format: text or json (default text)")
        ->transform(CLI::CheckedTransformer(format_names));
    app.add_option("FILE", file, "Input file (default: stdin)");

    auto* gen_cmd = app.add_subcommand("gen", "Emit one labeled corpus line");
    gen_cmd->add_option("--n", gen.length, "Length of the squarefree string");
    gen_cmd->add_option("--sigma", gen.sigma, "Alphabet size, 3..26 (default 3)");
    gen_cmd->add_option("--seed", gen.seed, "Generator seed");
    std::uint64_t plant_prefix = 0;
    auto* plant_opt =
        gen_cmd->add_option("--plant", plant_prefix,
                            "Emit a planted-square entry with this squarefree prefix length");

    auto* bench_cmd = app.add_subcommand("bench", "Time detectors on squarefree inputs");
    bench_cmd->add_option("--sizes", cfg.sizes, "Comma-separated input lengths, increasing")
        ->delimiter(',')
        ->required();
    bench_cmd->add_option("--algo", cfg.algo, "Detector to benchmark (default ordered)")
        ->transform(CLI::CheckedTransformer(algo_names));
    bench_cmd->add_option("--seed", cfg.seed, "Generator seed");

    app.require_subcommand(0, 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::exit_error;
    }

    if (gen_cmd->parsed()) {
        if (plant_opt->count() > 0) gen.plant = plant_prefix;
        return cli::run_gen(gen, std::cout, std::cerr);
    }
    if (bench_cmd->parsed()) return cli::run_bench(cfg, std::cout, std::cerr);

    if (file.empty()) return cli::run_detect(cfg, std::cin, std::cout, std::cerr);
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        std::cerr << "sqdetect: cannot open '" << file << "'\n";
        return cli::exit_error;
    }
    return cli::run_detect(cfg, in, std::cout, std::cerr);
}
