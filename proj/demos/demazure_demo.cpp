// Demazure crystal M_w for lambda(w) = (2,1): closure size, the flag, and the
// Cauchy identity to degree 5.

#include <iostream>

#include <flagrsk/flagrsk.hpp>

using namespace flagrsk;

int main() {
    const GrassmannianElement w(Partition{2, 1});
    const ReducedWord word = reduced_word(w);
    std::cout << "reduced word:";
    for (int i : word.indices) std::cout << ' ' << i;
    std::cout << "\n";

    const auto m = generate_Mw(w, 3);
    std::cout << "|M_w| with entry sum <= 3: " << m.size() << "\n";
    std::cout << "same as the support characterization: " << (m == characterize_Mw(w, 3) ? "yes" : "no") << "\n";

    const FlagData f = flag_data(w.shape);
    std::cout << "flags: alpha =";
    for (int x : f.alpha) std::cout << ' ' << x;
    std::cout << ", beta =";
    for (int x : f.beta) std::cout << ' ' << x;
    std::cout << "\n";

    const SeriesPair c = cauchy_sides(w, 3, 5);
    std::cout << "flagged Cauchy to degree 5: " << (c.equal() ? "OK" : "FAIL") << "\n";
    std::cout << c.lhs.to_string(xy_names(3, 3)) << "\n";
}
