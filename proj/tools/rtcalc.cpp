#include "rtcalc/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return rtcalc::run_cli(argc, argv, std::cout, std::cerr); }
