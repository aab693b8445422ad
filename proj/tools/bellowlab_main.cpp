#include "bellowlab/cli.hpp"

int main(int argc, char** argv) { return bellowlab::cli::run(argc, argv); }
