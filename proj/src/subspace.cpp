#include "rsrepair/subspace.hpp"

#include <algorithm>

namespace rsrepair {

Subspace Subspace::span_of(const Field& fld, std::span<const FieldElement> gens) {
    FMatrix rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) {
        if (&g.field() != &fld)
            throw std::invalid_argument("subspace: generator from another field");
        rows.push_back(fld.ref_coords(g));
    }
    rref_in_place(fld, rows);
    return Subspace(fld, std::move(rows));
}

Subspace Subspace::zero_subspace(const Field& fld) { return Subspace(fld, {}); }

Subspace Subspace::full_space(const Field& fld) {
    FMatrix rows(fld.ext_degree(), FVec(fld.ext_degree(), 0));
    for (unsigned i = 0; i < fld.ext_degree(); ++i) rows[i][i] = 1;
    return Subspace(fld, std::move(rows));
}

Subspace Subspace::from_rref_rows(const Field& fld, FMatrix rows) {
    for (const auto& r : rows)
        if (r.size() != fld.ext_degree())
            throw std::invalid_argument("subspace: row width must equal the extension degree");
    if (!is_rref(fld, rows))
        throw std::invalid_argument("subspace: rows are not in canonical form");
    return Subspace(fld, std::move(rows));
}

bool Subspace::contains(const FieldElement& a) const {
    FVec rem = reduce_against(*fld_, rows_, fld_->ref_coords(a));
    return std::all_of(rem.begin(), rem.end(), [](Digit d) { return d == 0; });
}

std::vector<FieldElement> Subspace::basis_elements() const {
    std::vector<FieldElement> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(fld_->from_ref_coords(r));
    return out;
}

std::vector<FieldElement> Subspace::elements() const {
    const std::uint32_t q = fld_->subfield_order();
    const unsigned s = dim();
    std::vector<FieldElement> base = basis_elements();
    std::vector<FieldElement> out;
    out.reserve(static_cast<size_t>(1) << s);  // at least; exact below
    FVec odo(s, 0);
    for (;;) {
        FieldElement acc = fld_->zero();
        for (unsigned i = 0; i < s; ++i)
            if (odo[i]) acc += fld_->subfield_element(odo[i]) * base[i];
        out.push_back(acc);
        unsigned k = 0;
        while (k < s && ++odo[k] == q) odo[k++] = 0;
        if (k == s) break;
    }
    return out;
}

Subspace Subspace::scaled(const FieldElement& rho) const {
    if (rho.is_zero()) throw std::invalid_argument("subspace: scaling by zero");
    std::vector<FieldElement> gens;
    for (const auto& b : basis_elements()) gens.push_back(b * rho);
    return span_of(*fld_, gens);
}

FVec Subspace::key() const {
    FVec out;
    for (const auto& r : rows_) out.insert(out.end(), r.begin(), r.end());
    return out;
}

bool operator==(const Subspace& a, const Subspace& b) {
    if (a.fld_ != b.fld_)
        throw std::logic_error("comparing subspaces over different fields");
    return a.rows_ == b.rows_;
}

Subspace trace_kernel(const Field& fld, const FieldElement& g) {
    const unsigned ell = fld.ext_degree();
    FVec w(ell, 0);
    const auto& ref = fld.reference_basis();
    for (unsigned i = 0; i < ell; ++i) w[i] = fld.trace_digit(g * ref[i]);
    FMatrix constraint{w};
    FMatrix rows = null_space(fld, constraint, ell);
    return Subspace::from_rref_rows(fld, std::move(rows));
}

Subspace intersect(std::span<const Subspace> spaces) {
    if (spaces.empty())
        throw std::invalid_argument("intersect: need at least one subspace");
    const Field& fld = spaces[0].field();
    for (const auto& s : spaces)
        if (&s.field() != &fld)
            throw std::invalid_argument("intersect: subspaces over different fields");
    const unsigned ell = fld.ext_degree();
    // stack the annihilators, then take the null space of the stack
    FMatrix constraints;
    for (const auto& s : spaces) {
        FMatrix ann = null_space(fld, s.rows(), ell);
        for (auto& r : ann) constraints.push_back(std::move(r));
    }
    if (constraints.empty()) return Subspace::full_space(fld);
    FMatrix rows = null_space(fld, constraints, ell);
    return Subspace::from_rref_rows(fld, std::move(rows));
}

std::vector<Subspace> enumerate_subspaces(const Field& fld, unsigned dim) {
    if (dim > fld.ext_degree())
        throw std::invalid_argument("enumerate: dimension exceeds the extension degree");
    PackedSubspaces packed = enumerate_rref(fld, fld.ext_degree(), dim);
    std::vector<Subspace> out;
    out.reserve(packed.count());
    for (size_t i = 0; i < packed.count(); ++i)
        out.push_back(Subspace::from_rref_rows(fld, packed.unpack(i)));
    return out;
}

BasisShift basis_shift(const Field& fld, std::span<const FieldElement> a,
                       const SubfieldBasis& b) {
    const unsigned ell = fld.ext_degree();
    if (a.size() != ell)
        throw std::invalid_argument("basis_shift: expected a full tuple");
    for (const auto& e : a)
        if (&e.field() != &fld)
            throw std::invalid_argument("basis_shift: element from another field");
    for (std::uint32_t g = 1; g < fld.order(); ++g) {
        FieldElement gamma = fld.element(g);
        RankTracker tracker(fld);
        bool ok = true;
        std::vector<FieldElement> shifted;
        shifted.reserve(ell);
        for (unsigned i = 0; i < ell; ++i) {
            FieldElement v = a[i] + gamma * b.elems()[i];
            shifted.push_back(v);
            if (!tracker.add(fld.ref_coords(v))) {
                ok = false;
                break;
            }
        }
        if (ok) return {gamma, std::move(shifted)};
    }
    throw std::invalid_argument("basis_shift: no shift produces a basis");
}

}  // namespace rsrepair
