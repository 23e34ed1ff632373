#include "braidlab/intmat.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

#include "braidlab/error.hpp"

namespace braidlab {

void SparseMatrix::add(int col, int row, std::int64_t value) {
    if (col < 0 || col >= cols || row < 0 || row >= rows) throw PreconditionError("sparse entry out of range");
    columns[col].emplace_back(row, value);
}

void SparseMatrix::normalize() {
    columns.resize(cols);
    for (auto& c : columns) {
        std::sort(c.begin(), c.end());
        std::vector<std::pair<int, std::int64_t>> merged;
        for (auto& [r, v] : c) {
            if (!merged.empty() && merged.back().first == r) merged.back().second += v;
            else merged.emplace_back(r, v);
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(), [](auto& p) { return p.second == 0; }),
                     merged.end());
        c = std::move(merged);
    }
}

namespace {

struct Overflow {};

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline Integer mul(const Integer& a, const Integer& b) { return a * b; }
inline Integer sub(const Integer& a, const Integer& b) { return a - b; }

inline bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
inline bool is_unit(const Integer& v) { return v == 1 || v == -1; }
inline Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }
inline Integer to_integer(const Integer& v) { return v; }

SmithResult dense_smith(DenseMatrix a) {
    SmithResult res;
    const int m = static_cast<int>(a.size());
    const int n = m ? static_cast<int>(a[0].size()) : 0;
    int t = 0;
    while (t < m && t < n) {
        // smallest nonzero in the trailing block
        int pr = -1, pc = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j)
                if (a[i][j] != 0 && (pr < 0 || abs(a[i][j]) < abs(a[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr < 0) break;
        std::swap(a[t], a[pr]);
        for (int i = 0; i < m; ++i) std::swap(a[i][t], a[i][pc]);
        bool done = false;
        while (!done) {
            done = true;
            for (int i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                for (int j = t; j < n; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    done = false;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                for (int i = t; i < m; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (int i = 0; i < m; ++i) std::swap(a[i][t], a[i][j]);
                    done = false;
                }
            }
            if (done) {
                // pivot must divide the whole trailing block
                for (int i = t + 1; i < m && done; ++i)
                    for (int j = t + 1; j < n; ++j)
                        if (a[i][j] % a[t][t] != 0) {
                            for (int k = t; k < n; ++k) a[t][k] += a[i][k];
                            done = false;
                            break;
                        }
            }
        }
        Integer d = abs(a[t][t]);
        ++res.rank;
        if (d > 1) res.torsion.push_back(d);
        ++t;
    }
    std::sort(res.torsion.begin(), res.torsion.end());
    return res;
}

template <class T>
SmithResult sparse_smith(const SparseMatrix& src) {
    using Col = std::vector<std::pair<int, T>>;
    std::vector<Col> cols(src.cols);
    std::vector<int> rowcnt(src.rows, 0);
    std::vector<std::vector<int>> rowcols(src.rows);
    for (int c = 0; c < src.cols; ++c) {
        for (auto& [r, v] : src.columns[c]) {
            cols[c].emplace_back(r, T(v));
            ++rowcnt[r];
            rowcols[r].push_back(c);
        }
    }
    using Cand = std::tuple<std::int64_t, int, int>;
    std::priority_queue<Cand, std::vector<Cand>, std::greater<Cand>> pq;
    auto cost = [&](int c, int r) {
        return static_cast<std::int64_t>(rowcnt[r] - 1) * static_cast<std::int64_t>(cols[c].size() - 1);
    };
    auto push_units = [&](int c) {
        for (auto& [r, v] : cols[c])
            if (is_unit(v)) pq.emplace(cost(c, r), c, r);
    };
    for (int c = 0; c < src.cols; ++c) push_units(c);

    auto find = [](const Col& col, int r) -> const T* {
        auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& p, int x) { return p.first < x; });
        return (it != col.end() && it->first == r) ? &it->second : nullptr;
    };

    SmithResult res;
    std::vector<char> col_dead(src.cols, 0);
    Col merged;
    while (!pq.empty()) {
        auto [k, c, r] = pq.top();
        pq.pop();
        if (col_dead[c]) continue;
        const T* pv = find(cols[c], r);
        if (!pv || !is_unit(*pv)) continue;
        std::int64_t now = cost(c, r);
        if (now > k) {
            pq.emplace(now, c, r);
            continue;
        }
        T p = *pv;
        // clear row r from every other column
        auto others = rowcols[r];
        std::sort(others.begin(), others.end());
        others.erase(std::unique(others.begin(), others.end()), others.end());
        for (int c2 : others) {
            if (c2 == c || col_dead[c2]) continue;
            const T* av = find(cols[c2], r);
            if (!av) continue;
            T f = mul(*av, p);  // p is its own inverse
            merged.clear();
            const Col& A = cols[c2];
            const Col& B = cols[c];
            size_t i = 0, j = 0;
            while (i < A.size() || j < B.size()) {
                if (j == B.size() || (i < A.size() && A[i].first < B[j].first)) {
                    merged.push_back(A[i++]);
                } else if (i == A.size() || B[j].first < A[i].first) {
                    T v = sub(T(0), mul(f, B[j].second));
                    ++rowcnt[B[j].first];
                    rowcols[B[j].first].push_back(c2);
                    merged.emplace_back(B[j].first, v);
                    ++j;
                } else {
                    T v = sub(A[i].second, mul(f, B[j].second));
                    if (v != 0) merged.emplace_back(A[i].first, v);
                    else --rowcnt[A[i].first];
                    ++i;
                    ++j;
                }
            }
            cols[c2].swap(merged);
            push_units(c2);
        }
        for (auto& [rr, v] : cols[c]) --rowcnt[rr];
        cols[c].clear();
        col_dead[c] = 1;
        rowcols[r].clear();
        ++res.rank;
    }

    // Leftover block has no unit entries; finish densely.
    std::vector<int> live_cols;
    std::vector<int> row_index(src.rows, -1);
    int nrows = 0;
    for (int c = 0; c < src.cols; ++c) {
        if (col_dead[c] || cols[c].empty()) continue;
        live_cols.push_back(c);
        for (auto& [r, v] : cols[c])
            if (row_index[r] < 0) row_index[r] = nrows++;
    }
    if (!live_cols.empty()) {
        if (static_cast<std::int64_t>(nrows) * static_cast<std::int64_t>(live_cols.size()) > 50'000'000)
            throw BudgetExceeded("dense Smith form remainder too large");
        DenseMatrix d(nrows, std::vector<Integer>(live_cols.size()));
        for (size_t j = 0; j < live_cols.size(); ++j)
            for (auto& [r, v] : cols[live_cols[j]]) d[row_index[r]][j] = to_integer(v);
        auto rest = dense_smith(std::move(d));
        res.rank += rest.rank;
        res.torsion = std::move(rest.torsion);
    }
    return res;
}

}  // namespace

SmithResult smith(const SparseMatrix& m) {
    try {
        return sparse_smith<std::int64_t>(m);
    } catch (const Overflow&) {
        return sparse_smith<Integer>(m);
    }
}

SmithResult smith(const DenseMatrix& m) { return dense_smith(m); }

DenseMatrix hermite_normal_form(const std::vector<std::vector<Integer>>& generators, int dim) {
    DenseMatrix a;
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != dim) throw PreconditionError("generator length mismatch");
        a.push_back(g);
    }
    const int m = static_cast<int>(a.size());
    int pr = 0;
    for (int j = 0; j < dim && pr < m; ++j) {
        while (true) {
            int best = -1;
            for (int i = pr; i < m; ++i)
                if (a[i][j] != 0 && (best < 0 || abs(a[i][j]) < abs(a[best][j]))) best = i;
            if (best < 0) break;
            std::swap(a[pr], a[best]);
            bool clean = true;
            for (int i = pr + 1; i < m; ++i) {
                if (a[i][j] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][j].get_mpz_t(), a[pr][j].get_mpz_t());
                for (int k = j; k < dim; ++k) a[i][k] -= q * a[pr][k];
                if (a[i][j] != 0) clean = false;
            }
            if (clean) break;
        }
        if (a[pr][j] == 0) continue;
        if (a[pr][j] < 0)
            for (int k = j; k < dim; ++k) a[pr][k] = -a[pr][k];
        for (int i = 0; i < pr; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), a[i][j].get_mpz_t(), a[pr][j].get_mpz_t());
            if (q != 0)
                for (int k = j; k < dim; ++k) a[i][k] -= q * a[pr][k];
        }
        ++pr;
    }
    a.resize(pr);
    return a;
}

bool lattice_contains(const DenseMatrix& hnf, const std::vector<Integer>& v) {
    std::vector<Integer> r = v;
    const int dim = static_cast<int>(r.size());
    int col = 0;
    for (const auto& row : hnf) {
        int pc = 0;
        while (pc < dim && row[pc] == 0) ++pc;
        if (pc == dim) continue;
        for (; col < pc; ++col)
            if (r[col] != 0) return false;
        if (r[pc] % row[pc] != 0) return false;
        Integer q = r[pc] / row[pc];
        for (int k = pc; k < dim; ++k) r[k] -= q * row[k];
        col = pc + 1;
    }
    for (int k = 0; k < dim; ++k)
        if (r[k] != 0) return false;
    return true;
}

}  // namespace braidlab
