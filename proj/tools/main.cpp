#include <exception>
#include <iostream>

#include "errorball/cli.hpp"

int main(int argc, char** argv) {
  try {
    return errorball::run_cli(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
