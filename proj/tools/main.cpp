#include "vizing_cli.hpp"

int main(int argc, char** argv) { return vizing::cli::run(argc, argv, std::cout, std::cerr); }
