// Recovers V_-1 over F_13 from five of its eight hyperflexes.
#include <iostream>

#include "quartic/reconstruction/vermeulen.hpp"
#include "quartic/verify/samples.hpp"

using namespace quartic;

int main() {
    PrimeField F{13};
    auto q = vermeulen_quartic(F.from_int(-1));
    auto cfg = inflection_configuration(q);
    auto data = hyperflex_data(cfg);
    data.erase(data.begin() + 5, data.end());
    for (auto& d : data) std::cout << "line " << d.line.to_string() << "  point " << d.point.to_string() << "\n";
    auto rec = reconstruct_from_hyperflexes_full(data);
    std::cout << "reconstructed: " << rec.quartic.to_string() << "\n";
    std::cout << "input:         " << normalize_scalar(lift_quartic(q, cfg.ambient)).to_string() << "\n";
    bool same = rec.quartic == normalize_scalar(lift_quartic(q, cfg.ambient));
    std::cout << (same ? "match" : "MISMATCH") << "\n";
    return same ? 0 : 1;
}
