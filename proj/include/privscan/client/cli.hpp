#pragma once

namespace privscan::client {

/// The privscan command line: scan, serve, bench. Returns the process exit
/// code (0 success or empty result, 1 usage error, 2 failed scan).
int cli_main(int argc, char** argv);

} // namespace privscan::client
