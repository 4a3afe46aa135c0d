#pragma once

#include <vector>

namespace abelorb {

/// Row-major dense integer matrix.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> data;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}

    long long& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    long long operator()(int r, int c) const {
        return data[static_cast<std::size_t>(r) * cols + c];
    }
};

/// Rank over Q by fraction-free (Bareiss) elimination; entries stay integral.
int exact_rank(IntMatrix m);

}  // namespace abelorb
