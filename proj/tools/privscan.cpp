#include "privscan/client/cli.hpp"

int main(int argc, char** argv) { return privscan::client::cli_main(argc, argv); }
