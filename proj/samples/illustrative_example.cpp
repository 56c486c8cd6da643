// Counts 5-nomial multiples of f1 f2 f3 for primitive factors of degrees
// 2, 3 and 5, printing every intermediate of the left fold.

#include <iostream>
#include <vector>

#include "sparsemul/sparsemul.hpp"

int main() {
  using namespace sparsemul;
  const std::vector<int> degrees{2, 3, 5};
  const auto spec = ProductSpec::from_degrees(degrees);
  const auto rep = count_product_recursive(spec, 5);

  for (const auto& f : rep.factors)
    std::cout << f.label << ": e=" << f.exponent << " N3=" << f.n3 << " N5=" << f.nt << " n=" << f.shifts << '\n';
  for (const auto& p : rep.prefixes)
    std::cout << p.label << ": e=" << p.exponent << " N3=" << p.n3 << " N5=" << p.nt << " n=" << p.shifts << '\n';
  std::cout << "lower bound " << rep.lower_bound << ", exact " << rep.exact << '\n';
  std::cout << "oracle " << oracle_count_product(spec, 5) << '\n';
}
