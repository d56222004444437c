#include <iostream>

#include "bem/cli.hpp"

int main(int argc, char** argv)
{
  return bem::cli::main(argc, argv, std::cout, std::cerr);
}
