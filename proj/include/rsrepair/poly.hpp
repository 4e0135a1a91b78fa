#pragma once

#include <vector>

#include "rsrepair/field.hpp"

namespace rsrepair {

class Subspace;

// Polynomial over E with normalized coefficients (no trailing zeros).
class EPoly {
public:
    explicit EPoly(const Field& fld) : fld_(&fld) {}
    EPoly(const Field& fld, std::vector<FieldElement> coeffs);

    static EPoly monomial(const Field& fld, unsigned deg, const FieldElement& c);
    static EPoly constant(const Field& fld, const FieldElement& c);

    const Field& field() const { return *fld_; }
    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    FieldElement coeff(unsigned i) const;
    const std::vector<FieldElement>& coeffs() const { return c_; }

    FieldElement eval(const FieldElement& x) const;

    EPoly operator+(const EPoly& o) const;
    EPoly operator-(const EPoly& o) const;
    EPoly operator*(const EPoly& o) const;
    EPoly scaled(const FieldElement& s) const;

    // p(x + b)
    EPoly shift_arg(const FieldElement& b) const;

    // quotient of p by (x - root); throws unless root is actually a root
    EPoly divide_out_root(const FieldElement& root) const;

    friend bool operator==(const EPoly& a, const EPoly& b);
    friend bool operator!=(const EPoly& a, const EPoly& b) { return !(a == b); }

private:
    void trim();
    const Field* fld_;
    std::vector<FieldElement> c_;
};

// L_W(x), the monic polynomial whose roots are exactly the elements of W.
// For a subspace it has nonzero coefficients only at q-power degrees and is
// F-linear as a map on E.
EPoly subspace_polynomial(const Subspace& w);

}  // namespace rsrepair
