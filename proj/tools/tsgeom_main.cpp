#include "tsgeom/cli.hpp"

int main(int argc, char** argv) { return tsgeom::cli::run(argc, argv); }
