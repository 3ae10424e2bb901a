#ifndef RAYCLASS_CLI_HPP
#define RAYCLASS_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rayclass {

enum class OutputFormat { Text, Json };

struct RunConfig {
    std::optional<long> discriminant;
    std::optional<long> level;
    std::optional<long> exponent;
    int precision = 256;
    OutputFormat output_format = OutputFormat::Text;
};

/// Name of the environment variable that overrides the default precision.
inline constexpr const char* kPrecisionEnv = "RAYCLASS_PRECISION";

/*
 * Entry point behind the `rayclass` binary. `args` excludes the program
 * name. `env_precision` is the value of RAYCLASS_PRECISION, if set; an
 * explicit --precision flag takes priority over it.
 *
 * Exit codes: 0 success, 1 some check failed, 2 usage or computation error.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::optional<std::string> env_precision);

/// Same, reading the precision override from the process environment.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rayclass

#endif
