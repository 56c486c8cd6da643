// The two products whose least-degree multiples repeat a residue modulo
// the exponent of x^4+x+1.

#include <iostream>

#include "sparsemul/sparsemul.hpp"

int main() {
  using namespace sparsemul;
  const auto pair = ProductSpec::make({Gf2Poly::parse("x^4+x+1"), Gf2Poly::parse("x^9+x^6+x^4+x^3+1")});
  const auto triple = ProductSpec::make(
      {Gf2Poly::parse("x^4+x+1"), Gf2Poly::parse("x^5+x^4+x^3+x^2+1"), Gf2Poly::parse("x^9+x^8+x^6+x^5+1")});

  for (const auto& [spec, t] : {std::pair{pair, 5}, std::pair{triple, 4}}) {
    const auto rep = check_conjecture(spec, t);
    std::cout << to_json(rep).dump(2) << '\n';
  }
}
