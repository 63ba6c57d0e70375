#include <iostream>
#include "qext/builtins.hpp"

int main() {
  auto g = qext::parse_builtin("sl25");
  std::cout << g->order() << "\n";
  return 0;
}
