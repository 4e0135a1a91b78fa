#pragma once

#include <cstdint>
#include <optional>

#include "rsrepair/field.hpp"

namespace rsrepair {

// Linear algebra over the subfield F on digit vectors. All matrices are
// row-major FVec lists; the Field supplies digit arithmetic.

// Reduce m to reduced row echelon form in place, dropping zero rows.
// Returns the rank.
unsigned rref_in_place(const Field& fld, FMatrix& m);

unsigned rank_of(const Field& fld, FMatrix m);

bool is_rref(const Field& fld, const FMatrix& m);

// Remainder of v after elimination against RREF rows; zero iff v lies in
// their span.
FVec reduce_against(const Field& fld, const FMatrix& rref_rows, FVec v);

// Coefficients expressing target as a combination of the given rows, if any.
std::optional<FVec> solve_combination(const Field& fld, const FMatrix& rows,
                                      const FVec& target);

// Rows spanning the null space of m (acting on width-wide row vectors v with
// m * v^T = 0), in RREF.
FMatrix null_space(const Field& fld, const FMatrix& m, unsigned width);

// Incremental rank tracking; add() reports whether the vector grew the span.
class RankTracker {
public:
    explicit RankTracker(const Field& fld) : fld_(&fld) {}
    bool add(FVec v);
    unsigned rank() const { return static_cast<unsigned>(rows_.size()); }
    const FMatrix& rows() const { return rows_; }

private:
    const Field* fld_;
    FMatrix rows_;  // kept in RREF
};

// All dim-dimensional subspaces of F^ambient as packed RREF matrices in
// ascending row-major base-q order.
struct PackedSubspaces {
    unsigned rows = 0, cols = 0;
    std::vector<Digit> data;

    std::size_t count() const {
        return rows == 0 ? 1 : data.size() / (static_cast<std::size_t>(rows) * cols);
    }
    std::span<const Digit> at(std::size_t i) const {
        const std::size_t sz = static_cast<std::size_t>(rows) * cols;
        return {data.data() + i * sz, sz};
    }
    FMatrix unpack(std::size_t i) const;
};

PackedSubspaces enumerate_rref(const Field& fld, unsigned ambient, unsigned dim);

// Number of dim-dimensional subspaces of F^ambient, saturating at 2^62.
std::uint64_t subspace_count(std::uint64_t q, unsigned ambient, unsigned dim);

}  // namespace rsrepair
