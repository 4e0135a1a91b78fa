#pragma once

#include <span>
#include <vector>

#include "rsrepair/basis.hpp"
#include "rsrepair/field.hpp"
#include "rsrepair/fqla.hpp"

namespace rsrepair {

// F-subspace of E, canonically stored as the RREF of its coordinate matrix
// relative to the field's reference basis. Equality of subspaces is equality
// of these matrices.
class Subspace {
public:
    static Subspace span_of(const Field& fld, std::span<const FieldElement> gens);
    static Subspace zero_subspace(const Field& fld);
    static Subspace full_space(const Field& fld);
    // Validating variant for deserialization; rows must already be RREF.
    static Subspace from_rref_rows(const Field& fld, FMatrix rows);

    const Field& field() const { return *fld_; }
    unsigned dim() const { return static_cast<unsigned>(rows_.size()); }
    const FMatrix& rows() const { return rows_; }

    bool contains(const FieldElement& a) const;
    std::vector<FieldElement> basis_elements() const;
    // All q^dim elements, ordered by ascending coefficient odometer.
    std::vector<FieldElement> elements() const;

    Subspace scaled(const FieldElement& rho) const;

    // Row-major digits; total order for counting and map keys.
    FVec key() const;

    friend bool operator==(const Subspace& a, const Subspace& b);
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    Subspace(const Field& fld, FMatrix rows) : fld_(&fld), rows_(std::move(rows)) {}
    const Field* fld_;
    FMatrix rows_;
};

// {a : Tr(g a) = 0}; a hyperplane for g != 0, all of E for g = 0.
Subspace trace_kernel(const Field& fld, const FieldElement& g);

Subspace intersect(std::span<const Subspace> spaces);

std::vector<Subspace> enumerate_subspaces(const Field& fld, unsigned dim);

// Least g in E* (ascending index) such that (a_i + g b_i) is a basis, along
// with the shifted tuple. Exists whenever a is not itself a basis.
struct BasisShift {
    FieldElement gamma;
    std::vector<FieldElement> shifted;
};
BasisShift basis_shift(const Field& fld, std::span<const FieldElement> a,
                       const SubfieldBasis& b);

}  // namespace rsrepair
