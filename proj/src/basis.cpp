#include "rsrepair/basis.hpp"

#include <string>

#include "rsrepair/fqla.hpp"

namespace rsrepair {

SubfieldBasis::SubfieldBasis(const Field& fld, std::vector<FieldElement> elems)
    : fld_(&fld), elems_(std::move(elems)) {
    const unsigned ell = fld.ext_degree();
    if (elems_.size() != ell)
        throw std::invalid_argument("basis: expected " + std::to_string(ell) + " elements");
    RankTracker tracker(fld);
    for (size_t i = 0; i < elems_.size(); ++i) {
        if (&elems_[i].field() != &fld)
            throw std::invalid_argument("basis: element from another field");
        if (!tracker.add(fld.ref_coords(elems_[i])))
            throw std::invalid_argument("basis: element " + std::to_string(i + 1) +
                                        " depends on the previous ones");
    }

    // Solve Tr(b_i b*_j) = delta_ij for the duals in reference coordinates.
    // T[i][t] = Tr(b_i x^t); columns of T^-1 are the duals' coordinates.
    FMatrix t(ell, FVec(ell, 0));
    const auto& ref = fld.reference_basis();
    for (unsigned i = 0; i < ell; ++i)
        for (unsigned j = 0; j < ell; ++j)
            t[i][j] = fld.trace_digit(elems_[i] * ref[j]);

    FMatrix aug(ell, FVec(2 * ell, 0));
    for (unsigned i = 0; i < ell; ++i) {
        for (unsigned j = 0; j < ell; ++j) aug[i][j] = t[i][j];
        aug[i][ell + i] = 1;
    }
    if (rref_in_place(fld, aug) != ell)
        throw std::logic_error("basis: trace form degenerate");
    dual_.reserve(ell);
    for (unsigned j = 0; j < ell; ++j) {
        FVec coords(ell, 0);
        for (unsigned i = 0; i < ell; ++i) coords[i] = aug[i][ell + j];
        dual_.push_back(fld.from_ref_coords(coords));
    }

    idx_key_.reserve(ell);
    for (const auto& e : elems_) idx_key_.push_back(e.index());
}

SubfieldBasis SubfieldBasis::standard(const Field& fld) {
    return SubfieldBasis(fld, fld.reference_basis());
}

FVec SubfieldBasis::coords(const FieldElement& a) const {
    const unsigned ell = fld_->ext_degree();
    FVec out(ell, 0);
    for (unsigned i = 0; i < ell; ++i) out[i] = fld_->trace_digit(dual_[i] * a);
    return out;
}

FieldElement SubfieldBasis::from_coords(const FVec& c) const {
    const unsigned ell = fld_->ext_degree();
    if (c.size() != ell) throw std::invalid_argument("basis: wrong coordinate count");
    FieldElement acc = fld_->zero();
    for (unsigned i = 0; i < ell; ++i)
        acc += fld_->subfield_element(c[i]) * elems_[i];
    return acc;
}

FieldElement SubfieldBasis::recover_from_traces(const FVec& traces) const {
    const unsigned ell = fld_->ext_degree();
    if (traces.size() != ell) throw std::invalid_argument("basis: wrong trace count");
    FieldElement acc = fld_->zero();
    for (unsigned i = 0; i < ell; ++i)
        acc += fld_->subfield_element(traces[i]) * dual_[i];
    return acc;
}

FVec SubfieldBasis::trace_weights(const FieldElement& g) const {
    const unsigned ell = fld_->ext_degree();
    FVec out(ell, 0);
    for (unsigned i = 0; i < ell; ++i) out[i] = fld_->trace_digit(g * elems_[i]);
    return out;
}

}  // namespace rsrepair
