#include "abelorb/linalg.hpp"

#include <utility>

#include "abelorb/errors.hpp"

namespace abelorb {

int exact_rank(IntMatrix m) {
    long long prev = 1;
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < m.cols; ++c) std::swap(m(pivot, c), m(rank, c));
        const long long p = m(rank, col);
        for (int r = rank + 1; r < m.rows; ++r) {
            for (int c = col + 1; c < m.cols; ++c) {
                __int128 v = static_cast<__int128>(p) * m(r, c) -
                             static_cast<__int128>(m(r, col)) * m(rank, c);
                // Bareiss: the division by the previous pivot is exact.
                ensure(v % prev == 0, "Bareiss division not exact");
                m(r, c) = static_cast<long long>(v / prev);
            }
            m(r, col) = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

}  // namespace abelorb
