#include "tropmono/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace tropmono {

Field Field::Fp(long p) {
    if (p < 2) throw Error("InvalidField", "field characteristic must be a prime >= 2");
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) throw Error("InvalidField", std::to_string(p) + " is not prime");
    Field f;
    f.rational = false;
    f.prime = p;
    return f;
}

std::string Field::str() const { return rational ? "Q" : "F" + std::to_string(prime); }

namespace {

constexpr std::int64_t kEntryBound = std::int64_t(1) << 62;

long rank_mod_p(const SparseMatrix& M, long p) {
    std::vector<std::vector<long>> a(M.rows, std::vector<long>(M.cols, 0));
    for (int c = 0; c < M.cols; ++c)
        for (const auto& [r, v] : M.columns[c]) a[r][c] = ((v % p) + p) % p;
    long rank = 0;
    int row = 0;
    for (int col = 0; col < M.cols && row < M.rows; ++col) {
        int pivot = -1;
        for (int r = row; r < M.rows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[pivot], a[row]);
        for (int r = row + 1; r < M.rows; ++r) {
            if (a[r][col] == 0) continue;
            // a[r] -= (a[r][col] / a[row][col]) * a[row], via the inverse
            long inv = 1, b = a[row][col], e = p - 2;
            while (e) {
                if (e & 1) inv = (inv * b) % p;
                b = (b * b) % p;
                e >>= 1;
            }
            long f = (a[r][col] * inv) % p;
            for (int c2 = col; c2 < M.cols; ++c2)
                a[r][c2] = ((a[r][c2] - f * a[row][c2]) % p + p) % p;
        }
        ++row;
        ++rank;
    }
    return rank;
}

long rank_rational_dense(const SparseMatrix& M) {
    std::vector<std::vector<Rational>> a(M.rows, std::vector<Rational>(M.cols, Rational(0)));
    for (int c = 0; c < M.cols; ++c)
        for (const auto& [r, v] : M.columns[c]) a[r][c] = Rational(static_cast<long>(v));
    long rank = 0;
    int row = 0;
    for (int col = 0; col < M.cols && row < M.rows; ++col) {
        int pivot = -1;
        for (int r = row; r < M.rows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[pivot], a[row]);
        for (int r = row + 1; r < M.rows; ++r) {
            if (a[r][col] == 0) continue;
            Rational f = a[r][col] / a[row][col];
            for (int c2 = col; c2 < M.cols; ++c2) a[r][c2] -= f * a[row][c2];
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Sparse elimination over Z using only +-1 pivots.  Returns false when an
// entry would leave the int64 comfort zone; the caller then recomputes
// densely over Q.
bool rank_unit_pivot(const SparseMatrix& M, long& rank_out) {
    std::vector<std::map<int, std::int64_t>> cols(M.cols);
    for (int c = 0; c < M.cols; ++c)
        for (const auto& [r, v] : M.columns[c])
            if (v != 0) cols[c][r] = v;

    std::vector<char> col_done(M.cols, 0), row_done(M.rows, 0);
    long rank = 0;
    while (true) {
        int best_c = -1, best_r = -1;
        std::size_t best_len = SIZE_MAX;
        for (int c = 0; c < M.cols; ++c) {
            if (col_done[c] || cols[c].size() >= best_len) continue;
            for (const auto& [r, v] : cols[c]) {
                if (!row_done[r] && (v == 1 || v == -1)) {
                    best_len = cols[c].size();
                    best_c = c;
                    best_r = r;
                    break;
                }
            }
        }
        if (best_c < 0) break;

        const std::int64_t pv = cols[best_c][best_r];
        col_done[best_c] = 1;
        row_done[best_r] = 1;
        ++rank;
        for (int c = 0; c < M.cols; ++c) {
            if (c == best_c || col_done[c]) continue;
            auto it = cols[c].find(best_r);
            if (it == cols[c].end()) continue;
            const std::int64_t f = it->second * pv;
            for (const auto& [r, v] : cols[best_c]) {
                if (r == best_r) continue;
                __int128 next = static_cast<__int128>(cols[c].count(r) ? cols[c][r] : 0) -
                                static_cast<__int128>(f) * v;
                if (next > kEntryBound || next < -kEntryBound) return false;
                if (next == 0)
                    cols[c].erase(r);
                else
                    cols[c][r] = static_cast<std::int64_t>(next);
            }
            cols[c].erase(best_r);
        }
    }

    // Residual block without unit pivots: finish densely over Q.
    SparseMatrix rest;
    std::vector<int> rmap(M.rows, -1);
    std::vector<std::vector<std::pair<int, std::int64_t>>> rest_cols;
    int rr = 0;
    for (int c = 0; c < M.cols; ++c) {
        if (col_done[c]) continue;
        std::vector<std::pair<int, std::int64_t>> col;
        for (const auto& [r, v] : cols[c]) {
            if (row_done[r]) continue;
            if (rmap[r] < 0) rmap[r] = rr++;
            col.emplace_back(rmap[r], v);
        }
        if (!col.empty()) rest_cols.push_back(std::move(col));
    }
    if (!rest_cols.empty()) {
        rest.rows = rr;
        rest.cols = static_cast<int>(rest_cols.size());
        rest.columns = std::move(rest_cols);
        rank += rank_rational_dense(rest);
    }
    rank_out = rank;
    return true;
}

}  // namespace

long matrix_rank(const SparseMatrix& M, const Field& field) {
    if (M.rows == 0 || M.cols == 0) return 0;
    if (!field.rational) return rank_mod_p(M, field.prime);
    long rank = 0;
    if (rank_unit_pivot(M, rank)) return rank;
    return rank_rational_dense(M);
}

}  // namespace tropmono
