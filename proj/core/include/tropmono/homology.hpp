#pragma once

#include <cstdint>
#include <vector>

#include "tropmono/rational.hpp"

namespace tropmono {

// Coefficient field for homology: the rationals by default, or a prime field.
struct Field {
    bool rational = true;
    long prime = 0;

    static Field Q() { return Field{}; }
    static Field Fp(long p);
    std::string str() const;
};

// Sparse integer matrix given by columns of (row, value) pairs.
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, std::int64_t>>> columns;
};

// Exact rank over the chosen field.  Unit pivots are eliminated in int64
// arithmetic; any residue (non-unit pivots or large entries) falls back to
// dense rational elimination.
long matrix_rank(const SparseMatrix& M, const Field& field);

}  // namespace tropmono
