// Prints the first few height-bounded generating functions next to their
// path counts, and maps one restricted pair through the bijection.

#include <iostream>

#include "supercat/supercat.hpp"

int main() {
  using namespace supercat;

  for (int k = 0; k <= 4; ++k) {
    const PolyQuotient g = G(k);
    const IntSeries s = expand<BigInt>(g, t_order_for_x(8));
    std::cout << "G_" << k << " = " << g.str() << "\n   ";
    for (int n = 0; n <= 8; ++n) std::cout << ' ' << s.x_coefficient(n);
    std::cout << "\n";
  }

  const RestrictedPair pair(Path::parse("UUDD"), Path::parse("UD"));
  const Path d = forward(pair);
  const RestrictedPair back = inverse(d);
  std::cout << "(" << pair.p().str() << ", " << pair.q().str() << ") -> " << d.str() << " -> (" << back.p().str()
            << ", " << back.q().str() << ")\n";
}
