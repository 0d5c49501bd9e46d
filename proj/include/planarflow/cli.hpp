#pragma once

namespace planarflow {

/// Entry point of the pmf tool: solve / check / gen / bench / segment.
/// Returns 0 on success, 1 on invalid input, 2 on internal assertion
/// failure.
int run_cli(int argc, const char* const* argv);

}  // namespace planarflow
