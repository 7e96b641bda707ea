#include <iostream>

#include "cvq/cli.hpp"

int main(int argc, char** argv) { return cvq::cli::dispatch(argc, argv, std::cout, std::cerr); }
