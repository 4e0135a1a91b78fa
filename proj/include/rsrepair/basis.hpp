#pragma once

#include <span>
#include <vector>

#include "rsrepair/field.hpp"

namespace rsrepair {

// An ordered basis of E over F together with its trace-dual basis: the
// unique tuple (b*_1, ..., b*_ell) with Tr(b_i b*_j) = 1 if i = j, else 0.
//
// Identities the rest of the code leans on:
//   a = sum_i Tr(b*_i a) b_i          (coords)
//   a = sum_i Tr(b_i a) b*_i          (recover_from_traces)
//   Tr(g a) = trace_weights(g) . coords(a)
class SubfieldBasis {
public:
    SubfieldBasis(const Field& fld, std::vector<FieldElement> elems);

    static SubfieldBasis standard(const Field& fld);

    const Field& field() const { return *fld_; }
    const std::vector<FieldElement>& elems() const { return elems_; }
    const std::vector<FieldElement>& dual() const { return dual_; }

    // Coordinates of a relative to this basis, as subfield digits.
    FVec coords(const FieldElement& a) const;
    FieldElement from_coords(const FVec& c) const;

    // Rebuild a from the traces t_i = Tr(b_i a).
    FieldElement recover_from_traces(const FVec& traces) const;

    // w with w_i = Tr(g b_i); reading coords(a) at w's support suffices to
    // evaluate Tr(g a).
    FVec trace_weights(const FieldElement& g) const;

    friend bool operator==(const SubfieldBasis& a, const SubfieldBasis& b) {
        return a.fld_ == b.fld_ && a.idx_key_ == b.idx_key_;
    }

private:
    const Field* fld_;
    std::vector<FieldElement> elems_, dual_;
    std::vector<std::uint32_t> idx_key_;
};

}  // namespace rsrepair
