// Runs a 3x3 matrix through kappa, applies a few crystal operators on both
// sides and decodes the plane partition.

#include <iostream>

#include <flagrsk/flagrsk.hpp>

using namespace flagrsk;

int main() {
    const SparseMatrix a = SparseMatrix::from_dense({{1, 0, 1}, {2, 1, 0}, {0, 2, 0}});
    const RskPair pq = kappa(a);
    std::cout << "P:\n" << pretty(pq.p) << "Q:\n" << pretty(pq.q);
    std::cout << "kappa_inverse recovers A: " << (kappa_inverse(pq) == a ? "yes" : "no") << "\n\n";

    const BiTableau b(pq);
    for (int i : {-2, -1, 0, 1, 2}) {
        const auto lhs = matrix_apply(a, i, Dir::Lower);
        const auto rhs = bt_apply(b, i, Dir::Lower);
        const bool same = lhs.has_value() == rhs.has_value() && (!lhs || BiTableau(kappa(*lhs)) == *rhs);
        std::cout << "f_" << i << ": " << (lhs ? "defined" : "0") << ", commutes with kappa: "
                  << (same ? "yes" : "no") << "\n";
    }
    std::cout << "\n0-signature of kappa(A): " << signature_text(zero_signature(b)) << "\n\n";

    const PlanePartition p = from_matrix(a);
    std::cout << "plane partition (norm " << p.norm() << "):\n" << pretty(p);
}
