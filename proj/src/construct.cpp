#include "rsrepair/construct.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "rsrepair/fqla.hpp"

namespace rsrepair {

Subspace default_w(const Field& fld, unsigned m) {
    if (m > fld.ext_degree())
        throw std::invalid_argument("construction: subspace dimension too large");
    std::vector<FieldElement> gens(fld.reference_basis().begin(),
                                   fld.reference_basis().begin() + m);
    return Subspace::span_of(fld, gens);
}

RepairScheme subspace_poly_scheme(const RsCode& code, const Subspace& w,
                                  const SubfieldBasis& b, unsigned target) {
    const Field& fld = code.field();
    if (&w.field() != &fld || &b.field() != &fld)
        throw std::invalid_argument("construction: field mismatch");
    if (!code.is_full_length())
        throw std::invalid_argument("construction: requires a full-length code");
    if (target == 0 || target > code.length())
        throw std::invalid_argument("construction: target position out of range");

    std::uint64_t qm = 1;
    for (unsigned i = 0; i < w.dim(); ++i) qm *= fld.subfield_order();
    if (qm != code.codim())
        throw std::invalid_argument(
            "construction: codimension must equal the subspace size q^m");

    const EPoly lw = subspace_polynomial(w);
    const FieldElement at = code.eval_points()[target - 1];

    // L_W is a linearized polynomial: L_W(y) = sum c_t y^(q^t). Substituting
    // y = b_i (x - at) term by term keeps everything sparse, and dividing out
    // the root at x = at drops the degree below the codimension.
    std::vector<EPoly> polys;
    polys.reserve(fld.ext_degree());
    for (const FieldElement& beta : b.elems()) {
        EPoly num(fld);
        std::uint64_t qp = 1;
        for (unsigned t = 0; t <= w.dim(); ++t) {
            FieldElement c = lw.coeff(static_cast<unsigned>(qp));
            if (!c.is_zero()) {
                FieldElement scale = c * beta.pow(qp);
                num = num + EPoly::monomial(fld, static_cast<unsigned>(qp), scale);
                num = num - EPoly::constant(fld, scale * at.pow(qp));
            }
            qp *= fld.subfield_order();
        }
        polys.push_back(num.divide_out_root(at));
    }
    return RepairScheme::for_rs(code, target, std::move(polys));
}

RepairScheme naive_scheme(const RsCode& code, unsigned target) {
    const Field& fld = code.field();
    if (target == 0 || target > code.length())
        throw std::invalid_argument("construction: target position out of range");
    if (code.codim() == 0)
        throw std::invalid_argument("construction: code admits no repair");
    // contacted helpers: first k positions != target; avoided: the rest
    std::vector<unsigned> avoided;
    unsigned kept = 0;
    for (unsigned j = 1; j <= code.length(); ++j) {
        if (j == target) continue;
        if (kept < code.dim()) {
            ++kept;
        } else {
            avoided.push_back(j);
        }
    }
    EPoly vanish = EPoly::constant(fld, fld.one());
    for (unsigned j : avoided) {
        FieldElement a = code.eval_points()[j - 1];
        vanish = vanish * EPoly(fld, {-a, fld.one()});
    }
    std::vector<EPoly> polys;
    for (const FieldElement& beta : fld.reference_basis())
        polys.push_back(vanish.scaled(beta));
    return RepairScheme::for_rs(code, target, std::move(polys));
}

SubfieldBasis optimal_local_basis(const RepairScheme& s, unsigned helper) {
    if (helper == s.target())
        throw std::invalid_argument("basis: the target is not a helper");
    const Field& fld = s.field();
    Subspace col = column_space(s, helper);
    std::vector<FieldElement> gamma = col.basis_elements();
    RankTracker tracker(fld);
    for (const auto& g : gamma) tracker.add(fld.ref_coords(g));
    for (std::uint32_t idx = 1;
         tracker.rank() < fld.ext_degree() && idx < fld.order(); ++idx) {
        FieldElement cand = fld.element(idx);
        if (tracker.add(fld.ref_coords(cand))) gamma.push_back(cand);
    }
    SubfieldBasis as_basis(fld, gamma);
    return SubfieldBasis(fld, as_basis.dual());
}

const RsCode& SchemeCollection::code() const {
    if (schemes.empty()) throw std::logic_error("collection: empty");
    const RsCode* rs = std::get_if<RsCode>(&schemes[0].code());
    if (!rs) throw std::logic_error("collection: not an RS collection");
    return *rs;
}

const Field& SchemeCollection::field() const { return code().field(); }

SchemeCollection collection_of_schemes(const RsCode& code, const Subspace& w,
                                       const SubfieldBasis& b) {
    SchemeCollection out;
    out.schemes.reserve(code.length());
    for (unsigned j = 1; j <= code.length(); ++j)
        out.schemes.push_back(subspace_poly_scheme(code, w, b, j));
    return out;
}

bool is_symmetric(const SchemeCollection& c) {
    const unsigned n = c.length();
    for (unsigned j = 1; j <= n; ++j) {
        for (unsigned j2 = j + 1; j2 <= n; ++j2) {
            if (!(column_space(c.schemes[j - 1], j2) ==
                  column_space(c.schemes[j2 - 1], j)))
                return false;
        }
    }
    return true;
}

Rational make_rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    long long g = std::gcd(num < 0 ? -num : num, den < 0 ? -den : den);
    if (g == 0) g = 1;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return {num / g, den / g};
}

namespace {

std::uint64_t ordered_basis_count(const Field& fld) {
    std::uint64_t total = 1, qi = 1;
    for (unsigned i = 0; i < fld.ext_degree(); ++i) {
        total *= fld.order() - qi;
        qi *= fld.subfield_order();
    }
    return total;
}

unsigned reads_for_node(const SchemeCollection& c, unsigned node,
                        const SubfieldBasis& basis) {
    unsigned total = 0;
    for (unsigned t = 1; t <= c.length(); ++t) {
        if (t == node) continue;
        const RepairScheme& s = c.schemes[t - 1];
        Subspace col = column_space(s, node);
        std::vector<char> hit(c.field().ext_degree(), 0);
        for (const auto& g : col.basis_elements()) {
            FVec w = basis.trace_weights(g);
            for (unsigned i = 0; i < w.size(); ++i)
                if (w[i]) hit[i] = 1;
        }
        total += static_cast<unsigned>(std::count(hit.begin(), hit.end(), 1));
    }
    return total;
}

}  // namespace

// Reads for one node depend on the basis only through its set of elements,
// so minimizing over these sets equals minimizing over ordered bases.
std::vector<std::vector<FieldElement>> all_basis_sets(const Field& fld) {
    if (ordered_basis_count(fld) > 1000000ull)
        throw std::invalid_argument("basis: sweep exceeds the 10^6 budget");
    const unsigned ell = fld.ext_degree();
    std::vector<std::vector<FieldElement>> out;
    std::vector<std::uint32_t> pick;
    std::function<void(std::uint32_t, RankTracker&)> rec =
        [&](std::uint32_t from, RankTracker& tracker) {
            if (pick.size() == ell) {
                std::vector<FieldElement> b;
                for (auto i : pick) b.push_back(fld.element(i));
                out.push_back(std::move(b));
                return;
            }
            for (std::uint32_t i = from; i < fld.order(); ++i) {
                RankTracker next = tracker;
                if (!next.add(fld.ref_coords(fld.element(i)))) continue;
                pick.push_back(i);
                rec(i + 1, next);
                pick.pop_back();
            }
        };
    RankTracker t(fld);
    rec(1, t);
    return out;
}

AverageIoResult average_io_exact(const SchemeCollection& c) {
    const Field& fld = c.field();
    AverageIoResult res;
    res.exact = true;
    res.ordered_bases = ordered_basis_count(fld);
    if (res.ordered_bases > 1000000ull)
        throw std::invalid_argument("average_io: basis sweep exceeds the 10^6 budget");
    auto sets = all_basis_sets(fld);
    long long grand = 0;
    for (unsigned node = 1; node <= c.length(); ++node) {
        unsigned best = ~0u;
        for (const auto& set : sets) {
            SubfieldBasis b(fld, set);
            best = std::min(best, reads_for_node(c, node, b));
        }
        res.per_node_reads.push_back(best);
        grand += best;
    }
    res.average = make_rational(grand, c.length());
    return res;
}

AverageIoResult average_io_heuristic(const SchemeCollection& c) {
    AverageIoResult res;
    res.exact = false;
    long long grand = 0;
    for (unsigned node = 1; node <= c.length(); ++node) {
        unsigned best = ~0u;
        std::set<std::vector<std::uint32_t>> tried;
        for (unsigned t = 1; t <= c.length(); ++t) {
            if (t == node) continue;
            SubfieldBasis cand = optimal_local_basis(c.schemes[t - 1], node);
            std::vector<std::uint32_t> key;
            for (const auto& e : cand.elems()) key.push_back(e.index());
            if (!tried.insert(key).second) continue;
            best = std::min(best, reads_for_node(c, node, cand));
        }
        res.per_node_reads.push_back(best);
        res.ordered_bases += tried.size();
        grand += best;
    }
    res.average = make_rational(grand, c.length());
    return res;
}

}  // namespace rsrepair
