#include <iostream>
#include <string>
#include <vector>

#include "filling/cli.hpp"

int main(int argc, char **argv)
{
  std::vector<std::string> args(argv, argv + argc);
  return filling::run_cli(args, std::cin, std::cout, std::cerr);
}
