#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace morse::cli {

struct OutputSpec {
    enum class Format { Csv, Json };
    Format format = Format::Csv;
    std::string destination = "-";  // "-" = stdout
    int precision = 12;             // significant digits, [6, 17]
};

// Exit codes: 0 success, 2 usage/domain error, 3 validation failure.
// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace morse::cli
