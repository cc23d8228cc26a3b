#pragma once

#include <iosfwd>

namespace mgs
{

/// Exit codes: 0 success, 1 parse error, 2 computation error, 3 an order
/// that disagrees with the known formula.
int cli_main(int argc, char const *const *argv, std::ostream &out,
             std::ostream &err);

} // namespace mgs
