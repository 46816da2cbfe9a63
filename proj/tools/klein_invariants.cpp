// Invariants of the Klein quartic over Q and its inflection lines over F_13.
#include <iostream>

#include "quartic/geometry/checks.hpp"
#include "quartic/invariants/pairing.hpp"

using namespace quartic;

int main() {
    const std::string klein = "x^3*y+y^3*z+z^3*x";
    auto q = TernaryQuartic<Rational>::from_poly(parse_polynomial(klein, RationalField{}, vars_xyz()));
    std::cout << "H = " << harmonic_quartic(q).to_string() << "\n";
    std::cout << "K = " << harmonic_sextic(q).to_string() << "\n";
    std::cout << "A = " << invariant_A(q).to_string() << "\n";

    auto q13 = TernaryQuartic<Fp>::from_poly(parse_polynomial(klein, PrimeField{13}, vars_xyz()));
    auto cfg = inflection_configuration(q13);
    std::cout << "over F_13: " << cfg.orbits.size() << " Galois orbits of inflection lines, total multiplicity " << cfg.total_multiplicity()
              << "\n";
    for (auto& o : cfg.orbits)
        std::cout << "  " << o.line.to_string() << " over F_13^" << o.degree() << ", multiplicity " << o.multiplicity << ", "
                  << to_string(o.flex.kind) << "\n";
    std::cout << "largest pencil: " << concurrency_bound_check(cfg).max_pencil << "\n";
}
