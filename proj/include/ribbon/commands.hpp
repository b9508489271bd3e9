#pragma once

#include <optional>
#include <string>

namespace ribbon::cli {

enum class Format { text, json };

struct CommandResult {
    int exit_code = 0;  // 0 ok, 1 verification failure, 2 usage error
    std::string output;
};

// Subcommand bodies; the binary in tools/ is a thin argument-parsing shell
// around these so that the exact output stays testable.
CommandResult cmd_core_quotient(const std::string& partition, int k, Format format);
CommandResult cmd_fakedeg(const std::string& partition, std::optional<int> k, Format format);
CommandResult cmd_bst(const std::string& partition, int k, const std::string& mode, Format format);
CommandResult cmd_character(const std::string& partition, const std::string& rho, Format format);
CommandResult cmd_verify(int max_n, std::optional<int> k_filter, std::optional<int> t_order,
                         int jobs, Format format);

}  // namespace ribbon::cli
