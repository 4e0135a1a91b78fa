#include "rsrepair/fqla.hpp"

#include <algorithm>
#include <numeric>

namespace rsrepair {

unsigned rref_in_place(const Field& fld, FMatrix& m) {
    if (m.empty()) return 0;
    const size_t cols = m[0].size();
    for (const auto& r : m)
        if (r.size() != cols) throw std::invalid_argument("rref: ragged matrix");
    size_t row = 0;
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[row]);
        Digit s = fld.finv(m[row][col]);
        for (size_t j = col; j < cols; ++j) m[row][j] = fld.fmul(m[row][j], s);
        for (size_t r2 = 0; r2 < m.size(); ++r2) {
            if (r2 == row || m[r2][col] == 0) continue;
            Digit c = m[r2][col];
            for (size_t j = col; j < cols; ++j)
                m[r2][j] = fld.fsub(m[r2][j], fld.fmul(c, m[row][j]));
        }
        ++row;
    }
    m.resize(row);
    return static_cast<unsigned>(row);
}

unsigned rank_of(const Field& fld, FMatrix m) { return rref_in_place(fld, m); }

bool is_rref(const Field& fld, const FMatrix& m) {
    FMatrix copy = m;
    rref_in_place(fld, copy);
    return copy == m;
}

FVec reduce_against(const Field& fld, const FMatrix& rref_rows, FVec v) {
    for (const FVec& r : rref_rows) {
        size_t piv = 0;
        while (piv < r.size() && r[piv] == 0) ++piv;
        if (piv >= v.size()) continue;
        Digit c = v[piv];
        if (c == 0) continue;
        for (size_t j = piv; j < v.size(); ++j)
            v[j] = fld.fsub(v[j], fld.fmul(c, r[j]));
    }
    return v;
}

std::optional<FVec> solve_combination(const Field& fld, const FMatrix& rows,
                                      const FVec& target) {
    if (rows.empty())
        return std::all_of(target.begin(), target.end(), [](Digit d) { return d == 0; })
                   ? std::optional<FVec>(FVec{})
                   : std::nullopt;
    const size_t width = rows[0].size();
    const size_t k = rows.size();
    // augmented system: columns are the rows, last column the target
    FMatrix a(width, FVec(k + 1, 0));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < width; ++j) a[j][i] = rows[i][j];
    for (size_t j = 0; j < width; ++j) a[j][k] = target[j];

    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < k && row < width; ++col) {
        size_t piv = row;
        while (piv < width && a[piv][col] == 0) ++piv;
        if (piv == width) continue;
        std::swap(a[piv], a[row]);
        Digit s = fld.finv(a[row][col]);
        for (size_t j = col; j <= k; ++j) a[row][j] = fld.fmul(a[row][j], s);
        for (size_t r2 = 0; r2 < width; ++r2) {
            if (r2 == row || a[r2][col] == 0) continue;
            Digit c = a[r2][col];
            for (size_t j = col; j <= k; ++j)
                a[r2][j] = fld.fsub(a[r2][j], fld.fmul(c, a[row][j]));
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (size_t r2 = row; r2 < width; ++r2)
        if (a[r2][k] != 0) return std::nullopt;
    FVec x(k, 0);
    for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = a[i][k];
    return x;
}

FMatrix null_space(const Field& fld, const FMatrix& m, unsigned width) {
    FMatrix red = m;
    rref_in_place(fld, red);
    std::vector<int> pivot_of_col(width, -1);
    for (size_t i = 0; i < red.size(); ++i) {
        size_t piv = 0;
        while (piv < width && red[i][piv] == 0) ++piv;
        pivot_of_col[piv] = static_cast<int>(i);
    }
    FMatrix out;
    for (unsigned fc = 0; fc < width; ++fc) {
        if (pivot_of_col[fc] >= 0) continue;
        FVec v(width, 0);
        v[fc] = 1;
        for (unsigned c = 0; c < width; ++c) {
            int pr = pivot_of_col[c];
            if (pr >= 0) v[c] = fld.fneg(red[pr][fc]);
        }
        out.push_back(std::move(v));
    }
    rref_in_place(fld, out);
    return out;
}

bool RankTracker::add(FVec v) {
    v = reduce_against(*fld_, rows_, std::move(v));
    if (std::all_of(v.begin(), v.end(), [](Digit d) { return d == 0; })) return false;
    rows_.push_back(std::move(v));
    rref_in_place(*fld_, rows_);
    return true;
}

std::uint64_t subspace_count(std::uint64_t q, unsigned ambient, unsigned dim) {
    if (dim > ambient) return 0;
    constexpr std::uint64_t cap = 1ull << 62;
    // Pascal-style recurrence G(n,k) = G(n-1,k-1) + q^k G(n-1,k), saturating.
    std::vector<std::vector<std::uint64_t>> g(ambient + 1,
                                              std::vector<std::uint64_t>(dim + 1, 0));
    for (unsigned n = 0; n <= ambient; ++n) g[n][0] = 1;
    for (unsigned n = 1; n <= ambient; ++n) {
        for (unsigned k = 1; k <= std::min(n, dim); ++k) {
            std::uint64_t a = g[n - 1][k - 1];
            std::uint64_t b = g[n - 1][k];
            std::uint64_t qk = 1;
            for (unsigned i = 0; i < k; ++i) {
                if (qk > cap / q) { qk = cap; break; }
                qk *= q;
            }
            std::uint64_t t = (b > 0 && qk > cap / b) ? cap : qk * b;
            g[n][k] = (a > cap - t) ? cap : a + t;
        }
    }
    return g[ambient][dim];
}

FMatrix PackedSubspaces::unpack(std::size_t i) const {
    FMatrix m(rows, FVec(cols, 0));
    auto s = at(i);
    for (unsigned r = 0; r < rows; ++r)
        for (unsigned c = 0; c < cols; ++c) m[r][c] = s[r * cols + c];
    return m;
}

PackedSubspaces enumerate_rref(const Field& fld, unsigned ambient, unsigned dim) {
    if (dim > ambient)
        throw std::invalid_argument("enumerate: dimension exceeds ambient space");
    const std::uint32_t q = fld.subfield_order();
    PackedSubspaces out;
    out.rows = dim;
    out.cols = ambient;
    if (dim == 0) return out;

    const std::size_t cell = static_cast<std::size_t>(dim) * ambient;
    std::vector<Digit> mat(cell, 0);

    // pivot column combinations, lexicographic
    std::vector<unsigned> piv(dim);
    std::iota(piv.begin(), piv.end(), 0);
    auto next_comb = [&]() {
        int i = static_cast<int>(dim) - 1;
        while (i >= 0 && piv[i] == ambient - dim + i) --i;
        if (i < 0) return false;
        ++piv[i];
        for (unsigned j = i + 1; j < dim; ++j) piv[j] = piv[j - 1] + 1;
        return true;
    };

    do {
        std::vector<char> is_piv(ambient, 0);
        for (unsigned c : piv) is_piv[c] = 1;
        std::vector<std::pair<unsigned, unsigned>> free_pos;
        for (unsigned r = 0; r < dim; ++r)
            for (unsigned c = piv[r] + 1; c < ambient; ++c)
                if (!is_piv[c]) free_pos.emplace_back(r, c);

        std::fill(mat.begin(), mat.end(), 0);
        for (unsigned r = 0; r < dim; ++r) mat[r * ambient + piv[r]] = 1;

        std::vector<Digit> odo(free_pos.size(), 0);
        for (;;) {
            out.data.insert(out.data.end(), mat.begin(), mat.end());
            size_t k = 0;
            while (k < odo.size()) {
                auto [r, c] = free_pos[k];
                if (++odo[k] < q) {
                    mat[r * ambient + c] = odo[k];
                    break;
                }
                odo[k] = 0;
                mat[r * ambient + c] = 0;
                ++k;
            }
            if (k == odo.size()) break;
        }
    } while (next_comb());

    // ascending row-major base-q order
    const std::size_t n = out.data.size() / cell;
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
        return std::lexicographical_compare(
            out.data.begin() + static_cast<std::size_t>(a) * cell,
            out.data.begin() + (static_cast<std::size_t>(a) + 1) * cell,
            out.data.begin() + static_cast<std::size_t>(b) * cell,
            out.data.begin() + (static_cast<std::size_t>(b) + 1) * cell);
    });
    std::vector<Digit> sorted(out.data.size());
    for (std::size_t i = 0; i < n; ++i)
        std::copy(out.data.begin() + static_cast<std::size_t>(perm[i]) * cell,
                  out.data.begin() + (static_cast<std::size_t>(perm[i]) + 1) * cell,
                  sorted.begin() + i * cell);
    out.data = std::move(sorted);
    return out;
}

}  // namespace rsrepair
