#include "lvspread/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return lvspread::cli::run_cli(argc, argv, std::cout, std::cerr);
}
