#include "pp3/cli.hpp"

int main(int argc, char** argv) { return pp3::cli_dispatch(argc, argv); }
