#include "rsrepair/poly.hpp"

#include <stdexcept>

#include "rsrepair/subspace.hpp"

namespace rsrepair {

EPoly::EPoly(const Field& fld, std::vector<FieldElement> coeffs)
    : fld_(&fld), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (&c.field() != &fld)
            throw std::invalid_argument("poly: coefficient from another field");
    trim();
}

void EPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

EPoly EPoly::monomial(const Field& fld, unsigned deg, const FieldElement& c) {
    std::vector<FieldElement> v(deg + 1, fld.zero());
    v[deg] = c;
    return EPoly(fld, std::move(v));
}

EPoly EPoly::constant(const Field& fld, const FieldElement& c) {
    return EPoly(fld, {c});
}

FieldElement EPoly::coeff(unsigned i) const {
    return i < c_.size() ? c_[i] : fld_->zero();
}

FieldElement EPoly::eval(const FieldElement& x) const {
    FieldElement acc = fld_->zero();
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

EPoly EPoly::operator+(const EPoly& o) const {
    std::vector<FieldElement> v(std::max(c_.size(), o.c_.size()), fld_->zero());
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return EPoly(*fld_, std::move(v));
}

EPoly EPoly::operator-(const EPoly& o) const {
    std::vector<FieldElement> v(std::max(c_.size(), o.c_.size()), fld_->zero());
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return EPoly(*fld_, std::move(v));
}

EPoly EPoly::operator*(const EPoly& o) const {
    if (c_.empty() || o.c_.empty()) return EPoly(*fld_);
    std::vector<FieldElement> v(c_.size() + o.c_.size() - 1, fld_->zero());
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return EPoly(*fld_, std::move(v));
}

EPoly EPoly::scaled(const FieldElement& s) const {
    std::vector<FieldElement> v = c_;
    for (auto& c : v) c *= s;
    return EPoly(*fld_, std::move(v));
}

EPoly EPoly::shift_arg(const FieldElement& b) const {
    // Horner on (x + b): acc = acc * (x + b) + c_i
    EPoly acc(*fld_);
    EPoly lin(*fld_, {b, fld_->one()});
    for (size_t i = c_.size(); i-- > 0;)
        acc = acc * lin + EPoly::constant(*fld_, c_[i]);
    return acc;
}

EPoly EPoly::divide_out_root(const FieldElement& root) const {
    if (c_.empty()) throw std::invalid_argument("poly: dividing the zero polynomial");
    std::vector<FieldElement> q(c_.size() - 1, fld_->zero());
    FieldElement carry = fld_->zero();
    for (size_t i = c_.size(); i-- > 1;) {
        carry = c_[i] + carry * root;
        q[i - 1] = carry;
    }
    FieldElement rem = c_[0] + carry * root;
    if (!rem.is_zero())
        throw std::invalid_argument("poly: element is not a root");
    return EPoly(*fld_, std::move(q));
}

bool operator==(const EPoly& a, const EPoly& b) {
    if (a.fld_ != b.fld_) throw std::logic_error("comparing polynomials over different fields");
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
        if (!(a.c_[i] == b.c_[i])) return false;
    return true;
}

EPoly subspace_polynomial(const Subspace& w) {
    const Field& fld = w.field();
    EPoly acc = EPoly::monomial(fld, 1, fld.one());  // x
    for (const FieldElement& omega : w.elements()) {
        if (omega.is_zero()) continue;
        acc = acc * EPoly(fld, {-omega, fld.one()});
    }
    return acc;
}

}  // namespace rsrepair
