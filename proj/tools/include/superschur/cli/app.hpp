#pragma once

#include <iosfwd>

namespace superschur::cli {

/// Entry point of the superschur tool. Exit codes: 0 all checks pass, 1 a check
/// failed, 2 configuration error, 3 resource skip under --strict.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace superschur::cli
