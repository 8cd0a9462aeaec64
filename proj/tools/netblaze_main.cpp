#include "netblaze/cli.hpp"

int main(int argc, char** argv) { return netblaze::run_cli(argc, argv); }
