#include <iostream>

#include "sinograph_app/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sinograph_app::run(args, std::cout, std::cerr);
}
