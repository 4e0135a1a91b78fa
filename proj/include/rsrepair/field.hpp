#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsrepair {

// A sub-symbol: the rank of a subfield element in the canonical enumeration
// of F. Storage nodes hold symbols as vectors of these.
using Digit = std::uint8_t;
using FVec = std::vector<Digit>;
using FMatrix = std::vector<FVec>;

class Field;

// Element of the extension field E = GF(q^ell), q = p^d. Elements keep a
// pointer to their Field; the Field must outlive every element it produced.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(const Field* fld, std::uint32_t index) : fld_(fld), idx_(index) {}

    std::uint32_t index() const { return idx_; }
    const Field& field() const;
    bool is_null() const { return fld_ == nullptr; }
    bool is_zero() const { return idx_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;
    // x -> x^q, the generator of Gal(E/F)
    FieldElement frobenius() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    const Field* fld_ = nullptr;
    std::uint32_t idx_ = 0;
};

// E = GF(p)[x]/(modulus) viewed as a degree-ell extension of F = GF(p^d).
// F is realized inside E as the fixed field of the d-fold Frobenius.
// Immutable after construction; safe to share across threads read-only.
class Field {
public:
    // modulus: coefficients over GF(p), constant term first, length d*ell+1,
    // leading coefficient 1. Defaults to the least irreducible monic of the
    // right degree (coefficient vectors compared as base-p integers).
    Field(unsigned p, unsigned d, unsigned ell,
          std::optional<std::vector<unsigned>> modulus = std::nullopt);

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    unsigned characteristic() const { return p_; }
    unsigned base_degree() const { return d_; }   // [F : GF(p)]
    unsigned ext_degree() const { return ell_; }  // [E : F]
    std::uint32_t subfield_order() const { return q_; }
    std::uint32_t order() const { return n_; }
    const std::vector<unsigned>& modulus() const { return modulus_; }

    FieldElement zero() const { return {this, 0}; }
    FieldElement one() const { return {this, one_idx_}; }
    // Least element of multiplicative order q^ell - 1 (ascending index search).
    FieldElement primitive() const { return {this, xi_}; }
    FieldElement element(std::uint32_t index) const;
    FieldElement from_digits(std::span<const unsigned> digits) const;
    std::vector<unsigned> digits(const FieldElement& a) const;

    // Arithmetic on element indices. FieldElement operators route here.
    std::uint32_t add_idx(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub_idx(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg_idx(std::uint32_t a) const;
    std::uint32_t mul_idx(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv_idx(std::uint32_t a) const;
    std::uint32_t div_idx(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow_idx(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t frob_idx(std::uint32_t a) const;  // a^q

    // Trace of E onto F: sum of a^(q^i) for i < ell. Always lands in F.
    FieldElement trace(const FieldElement& a) const;
    Digit trace_digit(const FieldElement& a) const;
    Digit trace_digit(std::uint32_t index) const { return tr_[index]; }

    bool in_subfield(const FieldElement& a) const;
    // Rank of a subfield element among F's elements sorted by index.
    Digit subfield_rank(const FieldElement& a) const;
    FieldElement subfield_element(Digit rank) const;
    std::vector<FieldElement> subfield_elements() const;

    // Subfield arithmetic on digit ranks; backs all linear algebra over F.
    Digit fadd(Digit a, Digit b) const { return fadd_[a * q_ + b]; }
    Digit fsub(Digit a, Digit b) const { return fadd_[a * q_ + fneg_[b]]; }
    Digit fmul(Digit a, Digit b) const { return fmul_[a * q_ + b]; }
    Digit fneg(Digit a) const { return fneg_[a]; }
    Digit finv(Digit a) const;
    Digit fdiv(Digit a, Digit b) const { return fmul(a, finv(b)); }

    // The reference basis of E over F: (1, x, ..., x^(ell-1)) where x is the
    // residue class of the modulus variable. All coordinate vectors and
    // subspace matrices are relative to it.
    const std::vector<FieldElement>& reference_basis() const { return ref_basis_; }
    FVec ref_coords(const FieldElement& a) const;
    FVec ref_coords(std::uint32_t index) const;
    FieldElement from_ref_coords(const FVec& coords) const;

private:
    void check_same(const FieldElement& a) const;

    unsigned p_ = 0, d_ = 0, ell_ = 0, deg_ = 0;
    std::uint32_t q_ = 0, n_ = 0;
    std::uint32_t one_idx_ = 0, xi_ = 0;
    std::vector<unsigned> modulus_;

    std::vector<std::uint32_t> exp_;  // exp_[i] = index of xi^i, i < n-1
    std::vector<std::uint32_t> log_;  // inverse of exp_ on E*
    std::vector<std::uint32_t> inv_;
    std::vector<Digit> tr_;           // trace_digit per element index

    std::vector<std::uint32_t> sub_idx_;  // F's element indices, ascending
    std::vector<Digit> fadd_, fmul_, fneg_, finv_;

    // d > 1 only: change of GF(p)-coordinates used by ref_coords.
    std::vector<std::vector<unsigned>> refmat_inv_;
    std::vector<std::uint32_t> fbasis_idx_;  // GF(p)-basis of F: 1, zeta, ...

    std::vector<FieldElement> ref_basis_;

    friend class FieldElement;
};

std::shared_ptr<const Field> make_field(unsigned p, unsigned d, unsigned ell,
                                        std::optional<std::vector<unsigned>> modulus = std::nullopt);

inline const Field& FieldElement::field() const {
    if (!fld_) throw std::logic_error("null field element");
    return *fld_;
}

inline bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.fld_ == nullptr && b.fld_ == nullptr) return true;
    if (a.fld_ != b.fld_)
        throw std::logic_error("comparing elements of different fields");
    return a.idx_ == b.idx_;
}

namespace detail {
inline void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (&a.field() != &b.field())
        throw std::logic_error("mixing elements of different fields");
}
}  // namespace detail

inline FieldElement FieldElement::operator+(const FieldElement& o) const {
    detail::require_same_field(*this, o);
    return {&field(), field().add_idx(idx_, o.idx_)};
}

inline FieldElement FieldElement::operator-(const FieldElement& o) const {
    detail::require_same_field(*this, o);
    return {&field(), field().sub_idx(idx_, o.idx_)};
}

inline FieldElement FieldElement::operator*(const FieldElement& o) const {
    detail::require_same_field(*this, o);
    return {&field(), field().mul_idx(idx_, o.idx_)};
}

inline FieldElement FieldElement::operator/(const FieldElement& o) const {
    detail::require_same_field(*this, o);
    return {&field(), field().div_idx(idx_, o.idx_)};
}

inline FieldElement FieldElement::operator-() const {
    return {&field(), field().neg_idx(idx_)};
}

inline FieldElement FieldElement::inverse() const {
    return {&field(), field().inv_idx(idx_)};
}

inline FieldElement FieldElement::pow(std::uint64_t e) const {
    return {&field(), field().pow_idx(idx_, e)};
}

inline FieldElement FieldElement::frobenius() const {
    return {&field(), field().frob_idx(idx_)};
}

}  // namespace rsrepair
