#include "pnh/cli.hpp"

int main(int argc, char** argv) { return pnh::cli::run(argc, argv); }
