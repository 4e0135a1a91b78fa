#include "rsrepair/field.hpp"

#include <algorithm>
#include <numeric>

namespace rsrepair {
namespace {

constexpr std::uint64_t kMaxOrder = 1u << 20;

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Polynomials over GF(p): coefficient vectors, constant term first, no
// trailing zeros. Only used for field bootstrap, so clarity over speed.
using PPoly = std::vector<unsigned>;

void pp_trim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pp_mulmod(const PPoly& a, const PPoly& b, const PPoly& mod, unsigned p) {
    if (a.empty() || b.empty()) return {};
    std::vector<unsigned> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    // reduce mod the monic modulus
    const size_t m = mod.size() - 1;
    for (size_t i = prod.size(); i-- > m;) {
        unsigned c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (size_t j = 0; j < m; ++j)
            prod[i - m + j] = (prod[i - m + j] + c * (p - mod[j] % p)) % p;
    }
    prod.resize(m);
    pp_trim(prod);
    return prod;
}

PPoly pp_powmod(PPoly base, std::uint64_t e, const PPoly& mod, unsigned p) {
    PPoly r = {1};
    while (e) {
        if (e & 1) r = pp_mulmod(r, base, mod, p);
        base = pp_mulmod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

PPoly pp_sub(PPoly a, const PPoly& b, unsigned p) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    pp_trim(a);
    return a;
}

PPoly pp_mod(PPoly a, const PPoly& b, unsigned p) {
    pp_trim(a);
    const size_t db = b.size() - 1;
    unsigned lead_inv = 1;
    for (unsigned t = 1; t < p; ++t)
        if (t * b.back() % p == 1) { lead_inv = t; break; }
    while (a.size() > db) {
        unsigned c = a.back() * lead_inv % p;
        size_t shift = a.size() - 1 - db;
        for (size_t j = 0; j < b.size(); ++j)
            a[shift + j] = (a[shift + j] + c * (p - b[j] % p)) % p;
        pp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

PPoly pp_gcd(PPoly a, PPoly b, unsigned p) {
    pp_trim(a);
    pp_trim(b);
    while (!b.empty()) {
        PPoly r = pp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin's test: m irreducible over GF(p) iff x^(p^n) = x (mod m) and
// gcd(x^(p^(n/r)) - x, m) = 1 for every prime r dividing n.
bool pp_irreducible(const PPoly& m, unsigned p) {
    const unsigned n = static_cast<unsigned>(m.size()) - 1;
    if (n == 0) return false;
    const PPoly x = {0, 1};
    auto ppow = [&](unsigned k) {  // p^k as uint64, k*log2(p) < 64 here
        std::uint64_t r = 1;
        for (unsigned i = 0; i < k; ++i) r *= p;
        return r;
    };
    for (std::uint64_t r : prime_factors(n)) {
        PPoly h = pp_powmod(x, ppow(static_cast<unsigned>(n / r)), m, p);
        PPoly g = pp_gcd(pp_sub(h, x, p), m, p);
        if (g.size() != 1) return false;
    }
    PPoly h = pp_powmod(x, ppow(n), m, p);
    return pp_sub(h, x, p).empty();
}

}  // namespace

Field::Field(unsigned p, unsigned d, unsigned ell,
             std::optional<std::vector<unsigned>> modulus)
    : p_(p), d_(d), ell_(ell) {
    if (!is_prime(p)) throw std::invalid_argument("field: p must be prime");
    if (d == 0 || ell == 0) throw std::invalid_argument("field: degrees must be positive");
    deg_ = d * ell;
    std::uint64_t q = 1, n = 1;
    for (unsigned i = 0; i < d; ++i) q *= p;
    for (unsigned i = 0; i < deg_; ++i) {
        n *= p;
        if (n > kMaxOrder) throw std::invalid_argument("field: order exceeds 2^20");
    }
    q_ = static_cast<std::uint32_t>(q);
    n_ = static_cast<std::uint32_t>(n);
    if (q_ > 255)
        throw std::invalid_argument("field: subfield order exceeds digit range");

    if (modulus) {
        modulus_ = *modulus;
        if (modulus_.size() != deg_ + 1)
            throw std::invalid_argument("field: modulus degree must equal d*ell");
        for (unsigned c : modulus_)
            if (c >= p) throw std::invalid_argument("field: modulus coefficient out of range");
        if (modulus_.back() != 1)
            throw std::invalid_argument("field: modulus must be monic");
        if (!pp_irreducible(modulus_, p))
            throw std::invalid_argument("field: modulus is reducible");
    } else {
        // least monic irreducible: coefficient vectors as base-p integers
        std::uint64_t count = 1;
        for (unsigned i = 0; i < deg_; ++i) count *= p;
        for (std::uint64_t t = 0;; ++t) {
            if (t == count)
                throw std::logic_error("field: no irreducible modulus found");
            PPoly cand(deg_ + 1, 0);
            cand[deg_] = 1;
            std::uint64_t v = t;
            for (unsigned i = 0; i < deg_; ++i) {
                cand[i] = static_cast<unsigned>(v % p);
                v /= p;
            }
            if (pp_irreducible(cand, p)) {
                modulus_ = cand;
                break;
            }
        }
    }

    one_idx_ = 1;

    // Bootstrap multiplication straight off the polynomial representation,
    // then freeze everything into exp/log tables.
    auto to_poly = [&](std::uint32_t idx) {
        PPoly v;
        while (idx) {
            v.push_back(idx % p);
            idx /= p;
        }
        return v;
    };
    auto from_poly = [&](const PPoly& v) {
        std::uint32_t idx = 0;
        for (size_t i = v.size(); i-- > 0;) idx = idx * p + v[i];
        return idx;
    };
    auto boot_mul = [&](std::uint32_t a, std::uint32_t b) {
        return from_poly(pp_mulmod(to_poly(a), to_poly(b), modulus_, p));
    };
    auto boot_pow = [&](std::uint32_t a, std::uint64_t e) {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = boot_mul(r, a);
            a = boot_mul(a, a);
            e >>= 1;
        }
        return r;
    };

    const std::uint64_t group = n_ - 1;
    auto factors = prime_factors(group);
    for (std::uint32_t cand = 1; cand < n_; ++cand) {
        bool primitive = true;
        for (std::uint64_t f : factors) {
            if (boot_pow(cand, group / f) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive && boot_pow(cand, group) == 1) {
            xi_ = cand;
            break;
        }
    }
    if (xi_ == 0) throw std::logic_error("field: no primitive element");

    exp_.resize(group);
    log_.assign(n_, 0);
    exp_[0] = 1;
    for (std::uint64_t i = 1; i < group; ++i) exp_[i] = boot_mul(exp_[i - 1], xi_);
    for (std::uint64_t i = 0; i < group; ++i) log_[exp_[i]] = static_cast<std::uint32_t>(i);

    inv_.assign(n_, 0);
    for (std::uint32_t a = 1; a < n_; ++a)
        inv_[a] = exp_[(group - log_[a]) % group];

    // F = {0} together with the subgroup of E* of order q-1.
    sub_idx_.push_back(0);
    if (q_ == n_) {
        for (std::uint32_t a = 1; a < n_; ++a) sub_idx_.push_back(a);
    } else {
        const std::uint64_t step = group / (q_ - 1);
        std::uint32_t zeta = exp_[step % group];
        std::uint32_t cur = 1;
        for (std::uint32_t i = 0; i + 1 < q_; ++i) {
            sub_idx_.push_back(cur);
            cur = boot_mul(cur, zeta);
        }
        std::sort(sub_idx_.begin(), sub_idx_.end());
    }
    if (sub_idx_.size() != q_) throw std::logic_error("field: bad subfield size");

    auto rank_of = [&](std::uint32_t idx) {
        auto it = std::lower_bound(sub_idx_.begin(), sub_idx_.end(), idx);
        if (it == sub_idx_.end() || *it != idx)
            throw std::logic_error("field: element not in subfield");
        return static_cast<Digit>(it - sub_idx_.begin());
    };

    fadd_.assign(static_cast<size_t>(q_) * q_, 0);
    fmul_.assign(static_cast<size_t>(q_) * q_, 0);
    fneg_.assign(q_, 0);
    finv_.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
        for (std::uint32_t b = 0; b < q_; ++b) {
            std::uint32_t sa = sub_idx_[a], sb = sub_idx_[b];
            fadd_[a * q_ + b] = rank_of(add_idx(sa, sb));
            fmul_[a * q_ + b] = rank_of(boot_mul(sa, sb));
        }
        fneg_[a] = rank_of(neg_idx(sub_idx_[a]));
        if (a) finv_[a] = rank_of(inv_[sub_idx_[a]]);
    }

    // Trace onto F, cached per element.
    tr_.assign(n_, 0);
    for (std::uint32_t a = 1; a < n_; ++a) {
        std::uint32_t acc = 0, t = a;
        for (unsigned i = 0; i < ell_; ++i) {
            acc = add_idx(acc, t);
            t = exp_[(static_cast<std::uint64_t>(log_[t]) * q_) % group];
        }
        tr_[a] = rank_of(acc);
    }

    // Reference basis (1, x, ..., x^(ell-1)); x's index is p.
    ref_basis_.reserve(ell_);
    std::uint32_t xp = 1;
    for (unsigned i = 0; i < ell_; ++i) {
        ref_basis_.emplace_back(this, xp);
        if (i + 1 < ell_) xp = boot_mul(xp, p);
    }

    if (d_ > 1) {
        // GF(p)-basis of F: powers of zeta = least generator exposed by
        // sub_idx_, i.e. the subgroup generator found above. Recompute it in
        // sorted-rank terms: use the element of F of multiplicative order q-1
        // with least index.
        std::uint32_t zeta = 0;
        for (std::uint32_t i = 1; i < q_; ++i) {
            std::uint32_t cand = sub_idx_[i];
            std::uint64_t ord = group / std::gcd<std::uint64_t>(group, log_[cand]);
            if (ord == q_ - 1u) {
                zeta = cand;
                break;
            }
        }
        if (zeta == 0) throw std::logic_error("field: no subfield generator");
        fbasis_idx_.resize(d_);
        std::uint32_t zp = 1;
        for (unsigned j = 0; j < d_; ++j) {
            fbasis_idx_[j] = zp;
            zp = boot_mul(zp, zeta);
        }
        // Columns of M: prime digits of fbasis[j] * x^i, column order i*d+j.
        std::vector<std::vector<unsigned>> m(deg_, std::vector<unsigned>(deg_, 0));
        for (unsigned i = 0; i < ell_; ++i) {
            for (unsigned j = 0; j < d_; ++j) {
                std::uint32_t v = boot_mul(ref_basis_[i].index(), fbasis_idx_[j]);
                for (unsigned t = 0; t < deg_; ++t) {
                    m[t][i * d_ + j] = v % p;
                    v /= p;
                }
            }
        }
        // invert over GF(p)
        std::vector<std::vector<unsigned>> inv(deg_, std::vector<unsigned>(deg_, 0));
        for (unsigned i = 0; i < deg_; ++i) inv[i][i] = 1;
        for (unsigned col = 0, row = 0; col < deg_; ++col, ++row) {
            unsigned piv = row;
            while (piv < deg_ && m[piv][col] == 0) ++piv;
            if (piv == deg_) throw std::logic_error("field: coordinate matrix singular");
            std::swap(m[piv], m[row]);
            std::swap(inv[piv], inv[row]);
            unsigned s = 1;
            for (unsigned t = 1; t < p; ++t)
                if (t * m[row][col] % p == 1) { s = t; break; }
            for (unsigned j = 0; j < deg_; ++j) {
                m[row][j] = m[row][j] * s % p;
                inv[row][j] = inv[row][j] * s % p;
            }
            for (unsigned r2 = 0; r2 < deg_; ++r2) {
                if (r2 == row || m[r2][col] == 0) continue;
                unsigned c = m[r2][col];
                for (unsigned j = 0; j < deg_; ++j) {
                    m[r2][j] = (m[r2][j] + c * (p - m[row][j])) % p;
                    inv[r2][j] = (inv[r2][j] + c * (p - inv[row][j])) % p;
                }
            }
        }
        refmat_inv_ = std::move(inv);
    }
}

FieldElement Field::element(std::uint32_t index) const {
    if (index >= n_) throw std::invalid_argument("field: element index out of range");
    return {this, index};
}

FieldElement Field::from_digits(std::span<const unsigned> digits) const {
    if (digits.size() > deg_) throw std::invalid_argument("field: too many digits");
    std::uint32_t idx = 0;
    for (size_t i = digits.size(); i-- > 0;) {
        if (digits[i] >= p_) throw std::invalid_argument("field: digit out of range");
        idx = idx * p_ + digits[i];
    }
    return {this, idx};
}

std::vector<unsigned> Field::digits(const FieldElement& a) const {
    check_same(a);
    std::vector<unsigned> out(deg_, 0);
    std::uint32_t v = a.index();
    for (unsigned i = 0; i < deg_; ++i) {
        out[i] = v % p_;
        v /= p_;
    }
    return out;
}

std::uint32_t Field::add_idx(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    std::uint32_t r = 0, mul = 1;
    while (a || b) {
        r += (a % p_ + b % p_) % p_ * mul;
        a /= p_;
        b /= p_;
        mul *= p_;
    }
    return r;
}

std::uint32_t Field::neg_idx(std::uint32_t a) const {
    if (p_ == 2) return a;
    std::uint32_t r = 0, mul = 1;
    while (a) {
        r += (p_ - a % p_) % p_ * mul;
        a /= p_;
        mul *= p_;
    }
    return r;
}

std::uint32_t Field::sub_idx(std::uint32_t a, std::uint32_t b) const {
    return add_idx(a, neg_idx(b));
}

std::uint32_t Field::mul_idx(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (n_ - 1)];
}

std::uint32_t Field::inv_idx(std::uint32_t a) const {
    if (a == 0) throw std::invalid_argument("field: division by zero");
    return inv_[a];
}

std::uint32_t Field::div_idx(std::uint32_t a, std::uint32_t b) const {
    return mul_idx(a, inv_idx(b));
}

std::uint32_t Field::pow_idx(std::uint32_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? one_idx_ : 0;
    const std::uint64_t group = n_ - 1;
    std::uint64_t le = (static_cast<std::uint64_t>(log_[a]) % group) * (e % group) % group;
    // exponent reduction mod group order is valid on E*
    return exp_[le];
}

std::uint32_t Field::frob_idx(std::uint32_t a) const {
    if (a == 0) return 0;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * q_) % (n_ - 1)];
}

FieldElement Field::trace(const FieldElement& a) const {
    return subfield_element(trace_digit(a));
}

Digit Field::trace_digit(const FieldElement& a) const {
    check_same(a);
    return tr_[a.index()];
}

bool Field::in_subfield(const FieldElement& a) const {
    check_same(a);
    return frob_idx(a.index()) == a.index();
}

Digit Field::subfield_rank(const FieldElement& a) const {
    check_same(a);
    auto it = std::lower_bound(sub_idx_.begin(), sub_idx_.end(), a.index());
    if (it == sub_idx_.end() || *it != a.index())
        throw std::invalid_argument("field: element not in subfield");
    return static_cast<Digit>(it - sub_idx_.begin());
}

FieldElement Field::subfield_element(Digit rank) const {
    if (rank >= q_) throw std::invalid_argument("field: subfield rank out of range");
    return {this, sub_idx_[rank]};
}

std::vector<FieldElement> Field::subfield_elements() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (std::uint32_t i : sub_idx_) out.emplace_back(this, i);
    return out;
}

Digit Field::finv(Digit a) const {
    if (a == 0) throw std::invalid_argument("field: division by zero");
    return finv_[a];
}

FVec Field::ref_coords(const FieldElement& a) const {
    check_same(a);
    return ref_coords(a.index());
}

FVec Field::ref_coords(std::uint32_t index) const {
    if (index >= n_) throw std::invalid_argument("field: element index out of range");
    FVec out(ell_, 0);
    if (d_ == 1) {
        std::uint32_t v = index;
        for (unsigned i = 0; i < ell_ && v; ++i) {
            out[i] = static_cast<Digit>(v % p_);
            v /= p_;
        }
        return out;
    }
    // y = refmat_inv * dv; block i of y holds the GF(p)-coordinates of c_i
    // over the fbasis powers.
    std::vector<unsigned> dv = digits(FieldElement(this, index));
    for (unsigned i = 0; i < ell_; ++i) {
        std::uint32_t ci = 0;
        for (unsigned j = 0; j < d_; ++j) {
            unsigned y = 0;
            for (unsigned t = 0; t < deg_; ++t)
                y = (y + refmat_inv_[i * d_ + j][t] * dv[t]) % p_;
            for (unsigned rep = 0; rep < y; ++rep) ci = add_idx(ci, fbasis_idx_[j]);
        }
        out[i] = subfield_rank(FieldElement(this, ci));
    }
    return out;
}

FieldElement Field::from_ref_coords(const FVec& coords) const {
    if (coords.size() != ell_)
        throw std::invalid_argument("field: coordinate vector has wrong length");
    std::uint32_t acc = 0;
    for (unsigned i = 0; i < ell_; ++i) {
        if (coords[i] >= q_) throw std::invalid_argument("field: coordinate out of range");
        acc = add_idx(acc, mul_idx(sub_idx_[coords[i]], ref_basis_[i].index()));
    }
    return {this, acc};
}

void Field::check_same(const FieldElement& a) const {
    if (&a.field() != this)
        throw std::logic_error("element belongs to a different field");
}

std::shared_ptr<const Field> make_field(unsigned p, unsigned d, unsigned ell,
                                        std::optional<std::vector<unsigned>> modulus) {
    return std::make_shared<const Field>(p, d, ell, std::move(modulus));
}

}  // namespace rsrepair
