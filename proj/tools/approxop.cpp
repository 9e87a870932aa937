#include "approxop/cli.hpp"

int main(int argc, char** argv) { return approxop::cli_main(argc, argv); }
