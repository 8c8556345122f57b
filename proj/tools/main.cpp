#include "cli.hpp"

int main(int argc, char** argv) { return zrl::cli::run(argc, argv); }
