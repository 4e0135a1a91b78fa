#include "rsrepair/codes.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace rsrepair {
namespace {

// Row reduction over E. Returns the rank; m ends up in RREF with zero rows
// dropped.
unsigned e_rref(const Field& fld, std::vector<Codeword>& m) {
    if (m.empty()) return 0;
    const size_t cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        size_t piv = row;
        while (piv < m.size() && m[piv][col].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[row]);
        FieldElement s = m[row][col].inverse();
        for (size_t j = col; j < cols; ++j) m[row][j] *= s;
        for (size_t r2 = 0; r2 < m.size(); ++r2) {
            if (r2 == row || m[r2][col].is_zero()) continue;
            FieldElement c = m[r2][col];
            for (size_t j = col; j < cols; ++j) m[r2][j] -= c * m[row][j];
        }
        ++row;
    }
    m.resize(row, Codeword(cols, fld.zero()));
    return static_cast<unsigned>(row);
}

std::vector<Codeword> e_null_space(const Field& fld, std::vector<Codeword> m,
                                   unsigned width) {
    e_rref(fld, m);
    std::vector<int> pivot_of_col(width, -1);
    for (size_t i = 0; i < m.size(); ++i) {
        size_t piv = 0;
        while (piv < width && m[i][piv].is_zero()) ++piv;
        pivot_of_col[piv] = static_cast<int>(i);
    }
    std::vector<Codeword> out;
    for (unsigned fc = 0; fc < width; ++fc) {
        if (pivot_of_col[fc] >= 0) continue;
        Codeword v(width, fld.zero());
        v[fc] = fld.one();
        for (unsigned c = 0; c < width; ++c) {
            int pr = pivot_of_col[c];
            if (pr >= 0) v[c] = -m[pr][fc];
        }
        out.push_back(std::move(v));
    }
    e_rref(fld, out);
    return out;
}

}  // namespace

RsCode::RsCode(std::shared_ptr<const Field> fld, std::vector<FieldElement> eval_points,
               unsigned k)
    : fld_(std::move(fld)), points_(std::move(eval_points)), k_(k) {
    if (!fld_) throw std::invalid_argument("code: null field");
    if (points_.empty()) throw std::invalid_argument("code: no evaluation points");
    if (k_ > points_.size())
        throw std::invalid_argument("code: dimension exceeds length");
    std::set<std::uint32_t> seen;
    for (const auto& a : points_) {
        if (&a.field() != fld_.get())
            throw std::invalid_argument("code: evaluation point from another field");
        if (!seen.insert(a.index()).second)
            throw std::invalid_argument("code: repeated evaluation point");
    }
}

RsCode RsCode::full_length(std::shared_ptr<const Field> fld, unsigned k) {
    if (!fld) throw std::invalid_argument("code: null field");
    std::vector<FieldElement> pts;
    pts.reserve(fld->order());
    pts.push_back(fld->zero());
    FieldElement xi = fld->primitive();
    FieldElement cur = fld->one();
    for (std::uint32_t i = 0; i + 1 < fld->order(); ++i) {
        pts.push_back(cur);
        cur *= xi;
    }
    return RsCode(std::move(fld), std::move(pts), k);
}

bool RsCode::is_full_length() const {
    return points_.size() == fld_->order();
}

std::vector<Codeword> RsCode::generator_rows() const {
    std::vector<Codeword> rows;
    rows.reserve(k_);
    for (unsigned t = 0; t < k_; ++t) {
        Codeword row;
        row.reserve(points_.size());
        for (const auto& a : points_) row.push_back(a.pow(t));
        rows.push_back(std::move(row));
    }
    return rows;
}

Codeword rs_encode(const RsCode& code, const EPoly& message) {
    if (&message.field() != &code.field())
        throw std::invalid_argument("encode: message over another field");
    if (message.degree() >= static_cast<int>(code.dim()))
        throw std::invalid_argument("encode: message degree must be below " +
                                    std::to_string(code.dim()));
    Codeword out;
    out.reserve(code.length());
    for (const auto& a : code.eval_points()) out.push_back(message.eval(a));
    return out;
}

RsCode dual_code(const RsCode& code) {
    if (!code.is_full_length())
        throw std::invalid_argument("dual: only full-length codes are supported");
    return RsCode(code.field_ptr(), code.eval_points(), code.length() - code.dim());
}

bool rs_contains(const RsCode& code, const Codeword& w) {
    if (w.size() != code.length()) return false;
    // orthogonality against the dual Vandermonde rows
    const unsigned r = code.codim();
    for (unsigned t = 0; t < r; ++t) {
        FieldElement acc = code.field().zero();
        for (unsigned j = 0; j < code.length(); ++j)
            acc += w[j] * code.eval_points()[j].pow(t);
        if (!acc.is_zero()) return false;
    }
    return true;
}

LinearCode::LinearCode(std::shared_ptr<const Field> fld, std::vector<Codeword> generator,
                       unsigned length)
    : fld_(std::move(fld)), gen_(std::move(generator)), n_(length) {
    if (!fld_) throw std::invalid_argument("code: null field");
    if (gen_.empty()) throw std::invalid_argument("code: empty generator");
    const size_t k = gen_.size();
    for (const auto& row : gen_) {
        if (row.size() != n_)
            throw std::invalid_argument("code: generator row has wrong length");
        for (const auto& e : row)
            if (&e.field() != fld_.get())
                throw std::invalid_argument("code: generator entry from another field");
    }
    if (e_rref(*fld_, gen_) != k)
        throw std::invalid_argument("code: generator rows are dependent");
}

LinearCode LinearCode::from_dual_span(std::shared_ptr<const Field> fld,
                                      std::vector<Codeword> dual_rows, unsigned length) {
    if (!fld) throw std::invalid_argument("code: null field");
    std::vector<Codeword> gen = e_null_space(*fld, std::move(dual_rows), length);
    return LinearCode(std::move(fld), std::move(gen), length);
}

LinearCode as_linear(const RsCode& code) {
    if (code.dim() == 0)
        throw std::invalid_argument("code: zero code has no generator");
    return LinearCode(code.field_ptr(), code.generator_rows(), code.length());
}

unsigned min_distance(const LinearCode& code) {
    const Field& fld = code.field();
    const unsigned k = code.dim();
    double total = 1;
    for (unsigned i = 0; i < k; ++i) total *= fld.order();
    if (total > static_cast<double>(1u << 20))
        throw std::invalid_argument("min_distance: codebook too large to enumerate");

    unsigned best = code.length() + 1;
    std::vector<std::uint32_t> odo(k, 0);
    Codeword w(code.length(), fld.zero());
    for (;;) {
        unsigned c = 0;
        while (c < k && odo[c] + 1 == fld.order()) odo[c++] = 0;
        if (c == k) break;
        ++odo[c];
        // recompute; enumeration sizes here are small by the guard
        for (unsigned j = 0; j < code.length(); ++j) w[j] = fld.zero();
        for (unsigned i = 0; i < k; ++i) {
            if (odo[i] == 0) continue;
            FieldElement s = fld.element(odo[i]);
            for (unsigned j = 0; j < code.length(); ++j)
                w[j] += s * code.generator_rows()[i][j];
        }
        unsigned wt = 0;
        for (const auto& e : w)
            if (!e.is_zero()) ++wt;
        if (wt > 0) best = std::min(best, wt);
    }
    if (best > code.length()) throw std::logic_error("min_distance: no nonzero codeword");
    return best;
}

bool is_mds(const LinearCode& code) {
    return min_distance(code) == code.length() - code.dim() + 1;
}

const FieldElement& DamagedCodeword::at(unsigned j) const {
    if (j == 0 || j > symbols.size())
        throw std::invalid_argument("codeword: position out of range");
    if (j == hole) throw std::invalid_argument("codeword: reading an erased position");
    return symbols[j - 1];
}

DamagedCodeword erase(const Codeword& w, unsigned j) {
    if (j == 0 || j > w.size())
        throw std::invalid_argument("erase: position out of range");
    DamagedCodeword out{w, j};
    out.symbols[j - 1] = w[j - 1].field().zero();
    return out;
}

DamagedCodeword erase(const DamagedCodeword& w, unsigned j) {
    if (j == 0 || j > w.symbols.size())
        throw std::invalid_argument("erase: position out of range");
    if (j != w.hole)
        throw std::invalid_argument("erase: a second erasure is not repairable here");
    return w;
}

}  // namespace rsrepair
