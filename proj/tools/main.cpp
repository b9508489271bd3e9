#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "ribbon/commands.hpp"

namespace {

using ribbon::cli::CommandResult;
using ribbon::cli::Format;

Format default_format() {
    const char* env = std::getenv("RIBBON_FORMAT");
    if (env && std::string(env) == "json") return Format::json;
    return Format::text;
}

Format parse_format(const std::string& value) {
    if (value == "json") return Format::json;
    if (value == "text") return Format::text;
    throw CLI::ValidationError("--format must be text or json");
}

int emit(const CommandResult& result) {
    if (result.exit_code == 2)
        std::cerr << result.output;
    else
        std::cout << result.output;
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact border strip tableau combinatorics"};
    app.require_subcommand(1);

    std::string format_name = default_format() == Format::json ? "json" : "text";
    std::string partition, rho, mode = "list";
    int k = 1, max_n = 6, jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    std::optional<int> opt_k, opt_order, opt_kfilter;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_name, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* core = app.add_subcommand("core-quotient", "k-core and k-quotient of a partition");
    core->add_option("--partition", partition, "comma separated parts, empty for the empty partition");
    core->add_option("--k", k, "strip size")->required();
    add_format(core);

    auto* fakedeg = app.add_subcommand("fakedeg", "fake degree polynomial and its evaluation");
    fakedeg->add_option("--partition", partition, "comma separated parts");
    auto int_into = [](std::optional<int>& slot) {
        return [&slot](const CLI::results_t& res) {
            try {
                slot = std::stoi(res[0]);
            } catch (const std::exception&) {
                return false;
            }
            return true;
        };
    };

    fakedeg->add_option("--k", int_into(opt_k), "evaluate at a primitive k-th root of unity");
    add_format(fakedeg);

    auto* bst = app.add_subcommand("bst", "enumerate border strip tableaux");
    bst->add_option("--partition", partition, "comma separated parts");
    bst->add_option("--k", k, "strip size")->required();
    bst->add_option("--mode", mode, "list, count or stats")
        ->check(CLI::IsMember({"list", "count", "stats"}));
    add_format(bst);

    auto* character = app.add_subcommand("character", "symmetric group character value");
    character->add_option("--partition", partition, "comma separated parts");
    character->add_option("--rho", rho, "cycle type, comma separated")->required();
    add_format(character);

    auto* verify = app.add_subcommand("verify", "run the identity suite over all small partitions");
    verify->add_option("--max-n", max_n, "largest partition size to check");
    verify->add_option("--k", int_into(opt_kfilter), "restrict to one strip size");
    verify->add_option("--order", int_into(opt_order),
                       "series truncation order (default: the partition size; the "
                       "enumeration-backed tuple checks cap at 8)");
    verify->add_option("--jobs", jobs, "worker threads");
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    Format format;
    try {
        format = parse_format(format_name);
    } catch (const CLI::Error&) {
        std::cerr << "error: --format must be text or json\n";
        return 2;
    }

    if (core->parsed()) return emit(ribbon::cli::cmd_core_quotient(partition, k, format));
    if (fakedeg->parsed()) return emit(ribbon::cli::cmd_fakedeg(partition, opt_k, format));
    if (bst->parsed()) return emit(ribbon::cli::cmd_bst(partition, k, mode, format));
    if (character->parsed()) return emit(ribbon::cli::cmd_character(partition, rho, format));
    if (verify->parsed())
        return emit(ribbon::cli::cmd_verify(max_n, opt_kfilter, opt_order, jobs, format));
    return 2;
}
