#include "flatdelta/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return flatdelta::cli::run(args, std::cout, std::cerr);
}
