#pragma once

// GF(2) linear algebra: dense bitset matrices for rank computations and a
// sparse elimination solver for the homotopy linear systems.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <vector>

namespace floer::gf2 {

class Matrix {
  public:
    Matrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), stride_((cols + 63) / 64), bits_(rows * stride_, 0) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    void set(size_t r, size_t c) { bits_[r * stride_ + c / 64] ^= (uint64_t(1) << (c % 64)); }
    bool get(size_t r, size_t c) const {
        return (bits_[r * stride_ + c / 64] >> (c % 64)) & 1;
    }

    void xor_rows(size_t dst, size_t src) {
        uint64_t* d = bits_.data() + dst * stride_;
        const uint64_t* s = bits_.data() + src * stride_;
        for (size_t i = 0; i < stride_; ++i) d[i] ^= s[i];
    }

    bool row_empty(size_t r) const {
        const uint64_t* d = bits_.data() + r * stride_;
        for (size_t i = 0; i < stride_; ++i)
            if (d[i]) return false;
        return true;
    }

  private:
    size_t rows_, cols_, stride_;
    std::vector<uint64_t> bits_;
};

inline int rank(Matrix m) {
    int r = 0;
    size_t row = 0;
    for (size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
        size_t pivot = row;
        while (pivot < m.rows() && !m.get(pivot, c)) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row) m.xor_rows(row, pivot), m.xor_rows(pivot, row), m.xor_rows(row, pivot);
        for (size_t i = 0; i < m.rows(); ++i)
            if (i != row && m.get(i, c)) m.xor_rows(i, row);
        ++row;
        ++r;
    }
    return r;
}

// Sparse linear system over F2: each row is a sorted list of variable
// indices plus a right-hand-side bit.
struct SparseSystem {
    int n_vars = 0;
    std::vector<std::vector<int>> rows;
    std::vector<uint8_t> rhs;

    void add_row(std::vector<int> vars, bool b) {
        std::sort(vars.begin(), vars.end());
        // duplicated indices cancel mod 2
        std::vector<int> out;
        for (size_t i = 0; i < vars.size();) {
            size_t j = i;
            while (j < vars.size() && vars[j] == vars[i]) ++j;
            if ((j - i) % 2) out.push_back(vars[i]);
            i = j;
        }
        rows.push_back(std::move(out));
        rhs.push_back(b);
    }
};

struct SolveResult {
    bool consistent = true;
    int rank = 0;
    std::vector<uint8_t> solution;  // one value per variable; free variables are 0
};

// Gaussian elimination with sparse rows. Pivots are chosen smallest-row
// first with a least-occupancy column inside the row (Markowitz-style), and
// the pivot column is cleared from the remaining active rows only; the
// resulting triangular set is solved by back substitution.
inline SolveResult solve(SparseSystem sys) {
    const int n = sys.n_vars;
    const int m = static_cast<int>(sys.rows.size());
    std::vector<std::vector<int>> occ(n);  // rows that may contain a column (lazy)
    std::vector<char> active(m, 1);
    std::vector<char> col_done(n, 0);
    for (int r = 0; r < m; ++r)
        for (int v : sys.rows[r]) occ[v].push_back(r);

    auto clean_occ = [&](int v) -> std::vector<int>& {
        auto& o = occ[v];
        std::sort(o.begin(), o.end());
        o.erase(std::unique(o.begin(), o.end()), o.end());
        o.erase(std::remove_if(o.begin(), o.end(),
                               [&](int rr) {
                                   return !active[rr] ||
                                          !std::binary_search(sys.rows[rr].begin(),
                                                              sys.rows[rr].end(), v);
                               }),
                o.end());
        return o;
    };

    using Entry = std::pair<size_t, int>;  // (row length, row index)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
    for (int r = 0; r < m; ++r)
        if (!sys.rows[r].empty()) pq.push({sys.rows[r].size(), r});

    SolveResult res;
    res.solution.assign(n, 0);
    std::vector<std::pair<int, int>> pivots;  // (column, row) in elimination order

    std::vector<int> tmp;
    while (!pq.empty()) {
        auto [len, r] = pq.top();
        pq.pop();
        if (!active[r] || sys.rows[r].empty() || sys.rows[r].size() != len) continue;
        int pc = -1;
        size_t best = SIZE_MAX;
        for (int v : sys.rows[r]) {
            size_t cnt = clean_occ(v).size();
            if (cnt < best) {
                best = cnt;
                pc = v;
            }
        }
        active[r] = 0;
        col_done[pc] = 1;
        pivots.push_back({pc, r});
        std::vector<int> victims = std::move(occ[pc]);
        occ[pc].clear();
        for (int rr : victims) {
            if (rr == r || !active[rr]) continue;
            tmp.clear();
            std::set_symmetric_difference(sys.rows[rr].begin(), sys.rows[rr].end(),
                                          sys.rows[r].begin(), sys.rows[r].end(),
                                          std::back_inserter(tmp));
            sys.rows[rr].swap(tmp);
            sys.rhs[rr] ^= sys.rhs[r];
            // entries new to rr all came from the pivot row
            for (int v : sys.rows[r])
                if (v != pc && !col_done[v] &&
                    std::binary_search(sys.rows[rr].begin(), sys.rows[rr].end(), v))
                    occ[v].push_back(rr);
            if (!sys.rows[rr].empty()) pq.push({sys.rows[rr].size(), rr});
        }
    }

    for (int r = 0; r < m; ++r)
        if (active[r] && sys.rows[r].empty() && sys.rhs[r]) {
            res.consistent = false;
            break;
        }
    res.rank = static_cast<int>(pivots.size());
    if (!res.consistent) return res;

    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        auto [c, r] = *it;
        uint8_t val = sys.rhs[r];
        for (int v : sys.rows[r])
            if (v != c) val ^= res.solution[v];
        res.solution[c] = val;
    }
    return res;
}

}  // namespace floer::gf2
