#include <iostream>

#include "multijoint/generators.h"
#include "multijoint/incidence.h"

int main() {
  const auto j = multijoint::Multijoints(multijoint::GridConfig(3));
  std::cout << "multijoints " << j.size() << "\n";
  return j.size() == 27 ? 0 : 1;
}
