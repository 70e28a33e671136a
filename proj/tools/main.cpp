#include "splitoff/cli.hpp"

int main(int argc, char** argv) { return splitoff::run_cli(argc, argv); }
