#include "gsh/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace gsh {

namespace {

// Reduce [a | b] to reduced row echelon form in place; returns pivot column
// of each row processed.
std::vector<int> rowReduce(RatMat& a, RatMat& rhs) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    std::vector<int> pivotCol;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int r = row; r < rows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[pivot], a[row]);
        std::swap(rhs[pivot], rhs[row]);
        const Rat inv = 1 / a[row][col];
        for (auto& x : a[row]) x *= inv;
        for (auto& x : rhs[row]) x *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || a[r][col] == 0) continue;
            const Rat factor = a[r][col];
            for (int c = col; c < cols; ++c) a[r][c] -= factor * a[row][c];
            for (std::size_t c = 0; c < rhs[r].size(); ++c) rhs[r][c] -= factor * rhs[row][c];
        }
        pivotCol.push_back(col);
        ++row;
    }
    return pivotCol;
}

}  // namespace

LinearSolution solveLinear(RatMat a, RatVec b) {
    const int rows = static_cast<int>(a.size());
    assert(static_cast<int>(b.size()) == rows);
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());

    RatMat rhs(rows, RatVec(1));
    for (int r = 0; r < rows; ++r) rhs[r][0] = b[r];

    const std::vector<int> pivots = rowReduce(a, rhs);
    const int rank = static_cast<int>(pivots.size());

    LinearSolution out;
    for (int r = rank; r < rows; ++r)
        if (rhs[r][0] != 0) return out;  // inconsistent
    out.consistent = true;

    out.particular.assign(cols, Rat(0));
    for (int r = 0; r < rank; ++r) out.particular[pivots[r]] = rhs[r][0];

    std::vector<bool> isPivot(cols, false);
    for (int p : pivots) isPivot[p] = true;
    for (int freeCol = 0; freeCol < cols; ++freeCol) {
        if (isPivot[freeCol]) continue;
        RatVec basis(cols, Rat(0));
        basis[freeCol] = 1;
        for (int r = 0; r < rank; ++r) basis[pivots[r]] = -a[r][freeCol];
        out.nullspace.push_back(std::move(basis));
    }
    return out;
}

RatVec leastNormSolution(const LinearSolution& solution) {
    if (!solution.consistent) throw std::logic_error("leastNormSolution on inconsistent system");
    if (solution.nullspace.empty()) return solution.particular;

    // Minimize |x0 + N t|^2: solve (N^T N) t = -N^T x0.
    const int k = static_cast<int>(solution.nullspace.size());
    const int n = static_cast<int>(solution.particular.size());
    RatMat gram(k, RatVec(k, Rat(0)));
    RatVec rhs(k, Rat(0));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j)
            for (int c = 0; c < n; ++c) gram[i][j] += solution.nullspace[i][c] * solution.nullspace[j][c];
        for (int c = 0; c < n; ++c) rhs[i] -= solution.nullspace[i][c] * solution.particular[c];
    }
    const LinearSolution t = solveLinear(gram, rhs);
    if (!t.consistent) throw std::logic_error("Gram system inconsistent");
    RatVec x = solution.particular;
    for (int i = 0; i < k; ++i)
        for (int c = 0; c < n; ++c) x[c] += t.particular[i] * solution.nullspace[i][c];
    return x;
}

std::optional<RatMat> invertMatrix(RatMat a) {
    const int n = static_cast<int>(a.size());
    RatMat rhs(n, RatVec(n, Rat(0)));
    for (int i = 0; i < n; ++i) rhs[i][i] = 1;
    const std::vector<int> pivots = rowReduce(a, rhs);
    if (static_cast<int>(pivots.size()) != n) return std::nullopt;
    return rhs;
}

int matrixRank(RatMat a) {
    RatMat rhs(a.size(), RatVec(0));
    return static_cast<int>(rowReduce(a, rhs).size());
}

}  // namespace gsh
