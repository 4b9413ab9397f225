#include "pendant_cli.hpp"

int main(int argc, char **argv) { return pendant::cli::run(argc, argv, std::cout, std::cerr); }
