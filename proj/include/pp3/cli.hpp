#pragma once

namespace pp3 {

/// Command dispatch for the pp3 tool. Exit codes: 0 success, 1 domain error,
/// 2 usage error.
int cli_dispatch(int argc, const char* const* argv);

}  // namespace pp3
