#pragma once

#include <memory>
#include <vector>

#include "rsrepair/field.hpp"
#include "rsrepair/poly.hpp"

namespace rsrepair {

using Codeword = std::vector<FieldElement>;

// Reed-Solomon code: evaluations of degree-<k polynomials at distinct points.
// Positions are 1-based throughout.
class RsCode {
public:
    RsCode(std::shared_ptr<const Field> fld, std::vector<FieldElement> eval_points,
           unsigned k);

    // Evaluation points in the canonical order: 0, then ascending powers of
    // the primitive element.
    static RsCode full_length(std::shared_ptr<const Field> fld, unsigned k);

    const Field& field() const { return *fld_; }
    const std::shared_ptr<const Field>& field_ptr() const { return fld_; }
    unsigned length() const { return static_cast<unsigned>(points_.size()); }
    unsigned dim() const { return k_; }
    unsigned codim() const { return length() - k_; }
    bool is_full_length() const;
    const std::vector<FieldElement>& eval_points() const { return points_; }

    // Vandermonde generator rows: row t holds the evaluations of x^t.
    std::vector<Codeword> generator_rows() const;

private:
    std::shared_ptr<const Field> fld_;
    std::vector<FieldElement> points_;
    unsigned k_;
};

Codeword rs_encode(const RsCode& code, const EPoly& message);

// Dual of a full-length RS code; unsupported otherwise.
RsCode dual_code(const RsCode& code);

bool rs_contains(const RsCode& code, const Codeword& w);

// Generic linear code with an RREF generator matrix over E.
class LinearCode {
public:
    LinearCode(std::shared_ptr<const Field> fld, std::vector<Codeword> generator,
               unsigned length);

    // The code orthogonal to the span of the given rows.
    static LinearCode from_dual_span(std::shared_ptr<const Field> fld,
                                     std::vector<Codeword> dual_rows, unsigned length);

    const Field& field() const { return *fld_; }
    const std::shared_ptr<const Field>& field_ptr() const { return fld_; }
    unsigned length() const { return n_; }
    unsigned dim() const { return static_cast<unsigned>(gen_.size()); }
    const std::vector<Codeword>& generator_rows() const { return gen_; }

private:
    std::shared_ptr<const Field> fld_;
    std::vector<Codeword> gen_;
    unsigned n_;
};

LinearCode as_linear(const RsCode& code);

// Exhaustive minimum weight; guarded against enumerations past 2^20 words.
unsigned min_distance(const LinearCode& code);
bool is_mds(const LinearCode& code);

// Codeword with one erased position. Reading the hole is an error.
struct DamagedCodeword {
    Codeword symbols;
    unsigned hole = 0;  // 1-based

    const FieldElement& at(unsigned j) const;
};

DamagedCodeword erase(const Codeword& w, unsigned j);
// Idempotent for the same position; a second distinct erasure is an error.
DamagedCodeword erase(const DamagedCodeword& w, unsigned j);

}  // namespace rsrepair
