#include "lattice_hardy/cli.hpp"

int main(int argc, char** argv) { return lattice_hardy::cli::run(argc, argv); }
