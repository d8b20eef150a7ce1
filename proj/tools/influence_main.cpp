#include "influence/cli.hpp"

int main(int argc, char** argv) { return influence::cli_dispatch(argc, argv); }
