#include <iostream>
#include <string>
#include <vector>

#include "geonet/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return geonet::dispatch(args, std::cout, std::cerr);
}
