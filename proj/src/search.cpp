#include "rsrepair/search.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rsrepair/basis.hpp"
#include "rsrepair/codes.hpp"
#include "rsrepair/subspace.hpp"

namespace rsrepair {

namespace {

constexpr std::uint64_t kClassBudget = 1000000;

std::uint64_t ipow(std::uint64_t base, unsigned e) {
    std::uint64_t v = 1;
    while (e--) v *= base;
    return v;
}

// Element index from packed reference coordinates. With a prime base field
// the index is the base-p value of the coordinate vector.
std::uint32_t decode_index(const Field& f, const Digit* dg, unsigned ell) {
    if (f.base_degree() == 1) {
        std::uint64_t v = 0;
        for (unsigned i = ell; i-- > 0;) v = v * f.characteristic() + dg[i];
        return static_cast<std::uint32_t>(v);
    }
    FVec coords(dg, dg + ell);
    return f.from_ref_coords(coords).index();
}

// Rank of bitmask vectors over GF(2).
unsigned rank_bits(const std::uint32_t* vals, unsigned cnt) {
    std::uint32_t basis[32] = {0};
    unsigned rank = 0;
    for (unsigned i = 0; i < cnt; ++i) {
        std::uint32_t v = vals[i];
        while (v != 0) {
            unsigned hb = std::bit_width(v) - 1;
            if (basis[hb] == 0) {
                basis[hb] = v;
                ++rank;
                break;
            }
            v ^= basis[hb];
        }
    }
    return rank;
}

unsigned rank_indices(const Field& f, const std::uint32_t* vals, unsigned cnt) {
    if (f.subfield_order() == 2) return rank_bits(vals, cnt);
    FMatrix m;
    m.reserve(cnt);
    for (unsigned i = 0; i < cnt; ++i) m.push_back(f.ref_coords(vals[i]));
    return static_cast<unsigned>(rank_of(f, m));
}

void require_class_budget(const Field& f, unsigned ambient, unsigned dim) {
    std::uint64_t cnt = subspace_count(f.subfield_order(), ambient, dim);
    if (cnt > kClassBudget) {
        std::ostringstream os;
        os << "search: " << cnt << " scheme classes exceed the enumeration budget of "
           << kClassBudget;
        throw std::invalid_argument(os.str());
    }
}

std::shared_ptr<const Field> field_for(unsigned p, unsigned d, unsigned ell) {
    return make_field(p, d, ell);
}

RsCode full_code(const std::shared_ptr<const Field>& f, unsigned r) {
    std::uint64_t n = f->order();
    if (r == 0 || r > n) throw std::invalid_argument("search: redundancy out of range");
    return RsCode::full_length(f, static_cast<unsigned>(n - r));
}

void set_common_params(VerifyReport& rep, unsigned p, unsigned d, unsigned ell) {
    rep.params["p"] = p;
    rep.params["d"] = d;
    rep.params["ell"] = ell;
}

// Counting criterion: helper column spaces, all of dimension ell-1, cover
// every hyperplane exactly q-1 times.
bool hyperplane_counts_ok(const RepairScheme& s) {
    const Field& f = s.field();
    unsigned ell = f.ext_degree();
    unsigned n = s.length();
    std::map<std::string, unsigned> mult;
    for (unsigned j = 1; j <= n; ++j) {
        if (j == s.target()) continue;
        Subspace col = column_space(s, j);
        if (col.dim() != ell - 1) return false;
        FMatrix key = col.rows();
        std::string flat;
        for (const auto& row : key)
            for (Digit dg : row) flat.push_back(static_cast<char>('0' + dg));
        ++mult[flat];
    }
    unsigned expect = f.subfield_order() - 1;
    std::uint64_t hyperplanes = subspace_count(f.subfield_order(), ell, ell - 1);
    if (mult.size() != hyperplanes) return false;
    for (const auto& [key, cnt] : mult)
        if (cnt != expect) return false;
    return true;
}

RepairScheme scheme_from_class(const RsCode& code, std::span<const Digit> rows,
                               unsigned target) {
    return RepairScheme::for_rs_trusted(code, target, class_polys(code, rows));
}

// Ordered enumeration of independent tuples (gamma_1..gamma_s) with a
// callback per prefix; returns total prefixes visited.
template <typename Fn>
std::uint64_t for_each_independent_tuple(const Field& f, unsigned max_len, Fn&& fn) {
    std::uint64_t visited = 0;
    std::vector<std::uint32_t> picked;
    std::vector<RankTracker> stack;
    stack.emplace_back(f);
    auto recurse = [&](auto&& self) -> void {
        if (picked.size() == max_len) return;
        for (std::uint32_t idx = 1; idx < f.order(); ++idx) {
            RankTracker next = stack.back();
            if (!next.add(f.ref_coords(idx))) continue;
            picked.push_back(idx);
            ++visited;
            fn(std::span<const std::uint32_t>(picked));
            stack.push_back(std::move(next));
            self(self);
            stack.pop_back();
            picked.pop_back();
        }
    };
    recurse(recurse);
    return visited;
}

std::uint64_t tuple_budget(const Field& f, unsigned max_len) {
    std::uint64_t total = 0, layer = 1, qi = 1;
    for (unsigned s = 0; s < max_len; ++s) {
        layer *= f.order() - qi;
        qi *= f.subfield_order();
        total += layer;
    }
    return total;
}

}  // namespace

PackedSubspaces enumerate_scheme_classes(const RsCode& code) {
    const Field& f = code.field();
    unsigned ell = f.ext_degree();
    unsigned r = code.length() - code.dim();
    unsigned ambient = r * ell;
    require_class_budget(f, ambient, ell);
    return enumerate_rref(f, ambient, ell);
}

std::vector<EPoly> class_polys(const RsCode& code, std::span<const Digit> rows) {
    const Field& f = code.field();
    unsigned ell = f.ext_degree();
    unsigned r = code.length() - code.dim();
    if (rows.size() != static_cast<std::size_t>(ell) * r * ell)
        throw std::invalid_argument("search: packed class has the wrong size");
    std::vector<EPoly> polys;
    polys.reserve(ell);
    for (unsigned i = 0; i < ell; ++i) {
        std::vector<FieldElement> coeffs;
        coeffs.reserve(r);
        for (unsigned t = 0; t < r; ++t) {
            const Digit* dg = rows.data() + static_cast<std::size_t>(i) * r * ell + t * ell;
            coeffs.push_back(f.element(decode_index(f, dg, ell)));
        }
        polys.emplace_back(f, std::move(coeffs));
    }
    return polys;
}

ClassScan scan_classes(const RsCode& code, unsigned target, unsigned workers) {
    const Field& f = code.field();
    unsigned ell = f.ext_degree();
    unsigned n = code.length();
    unsigned r = n - code.dim();
    if (target < 1 || target > n) throw std::invalid_argument("search: target out of range");
    PackedSubspaces packed = enumerate_scheme_classes(code);
    std::size_t count = packed.count();

    // alpha_j^t for every evaluation point, degree-major.
    std::vector<std::uint32_t> pw(static_cast<std::size_t>(n) * r);
    for (unsigned j = 0; j < n; ++j) {
        std::uint32_t base = code.eval_points()[j].index();
        std::uint32_t acc = f.one().index();
        for (unsigned t = 0; t < r; ++t) {
            pw[static_cast<std::size_t>(j) * r + t] = acc;
            acc = f.mul_idx(acc, base);
        }
    }

    auto run_range = [&](std::size_t lo, std::size_t hi, ClassScan& out) {
        std::vector<std::uint32_t> coeff(static_cast<std::size_t>(ell) * r);
        std::vector<std::uint32_t> vals(ell);
        for (std::size_t c = lo; c < hi; ++c) {
            auto rows = packed.at(c);
            for (unsigned i = 0; i < ell; ++i)
                for (unsigned t = 0; t < r; ++t)
                    coeff[static_cast<std::size_t>(i) * r + t] = decode_index(
                        f, rows.data() + static_cast<std::size_t>(i) * r * ell + t * ell, ell);
            auto eval_at = [&](unsigned j) {
                const std::uint32_t* pj = pw.data() + static_cast<std::size_t>(j) * r;
                for (unsigned i = 0; i < ell; ++i) {
                    std::uint32_t acc = 0;
                    const std::uint32_t* ci = coeff.data() + static_cast<std::size_t>(i) * r;
                    for (unsigned t = 0; t < r; ++t)
                        acc = f.add_idx(acc, f.mul_idx(ci[t], pj[t]));
                    vals[i] = acc;
                }
            };
            eval_at(target - 1);
            if (rank_indices(f, vals.data(), ell) != ell) {
                ++out.invalid;
                continue;
            }
            unsigned bw = 0;
            unsigned udim = 0;
            bool mixed = false, first = true;
            for (unsigned j = 1; j <= n; ++j) {
                if (j == target) continue;
                eval_at(j - 1);
                unsigned dim = rank_indices(f, vals.data(), ell);
                bw += dim;
                if (first) {
                    udim = dim;
                    first = false;
                } else if (dim != udim) {
                    mixed = true;
                }
            }
            out.valid.push_back({static_cast<std::uint32_t>(c),
                                 static_cast<std::uint16_t>(bw),
                                 static_cast<std::uint8_t>(mixed ? 255 : udim)});
        }
    };

    ClassScan scan;
    scan.total = count;
    if (workers <= 1 || count < 2048) {
        run_range(0, count, scan);
        return scan;
    }
    std::size_t chunk = (count + workers - 1) / workers;
    std::vector<ClassScan> parts(workers);
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = std::min<std::size_t>(count, static_cast<std::size_t>(w) * chunk);
        std::size_t hi = std::min<std::size_t>(count, lo + chunk);
        threads.emplace_back(run_range, lo, hi, std::ref(parts[w]));
    }
    for (auto& t : threads) t.join();
    for (auto& part : parts) {
        scan.invalid += part.invalid;
        scan.valid.insert(scan.valid.end(), part.valid.begin(), part.valid.end());
    }
    return scan;
}

VerifyReport check_rotational_io(unsigned p, unsigned d, unsigned ell, unsigned m,
                                 unsigned random_bases, std::uint64_t seed) {
    VerifyReport rep;
    rep.check = "thm1";
    set_common_params(rep, p, d, ell);
    rep.params["m"] = m;
    rep.params["seed"] = static_cast<long long>(seed);
    auto f = field_for(p, d, ell);
    if (m >= ell) throw std::invalid_argument("search: need m < ell");
    unsigned q = f->subfield_order();
    unsigned n = static_cast<unsigned>(f->order());
    unsigned r = static_cast<unsigned>(ipow(q, m));
    RsCode code = RsCode::full_length(f, n - r);
    unsigned target = 1;
    RepairScheme s = subspace_poly_scheme(code, default_w(*f, m),
                                          SubfieldBasis::standard(*f), target);
    long long expected = static_cast<long long>(ell) * (n - r);
    rep.counts["n"] = n;
    rep.counts["k"] = n - r;
    rep.counts["expected_reads"] = expected;
    rep.counts["bandwidth"] = bandwidth(s);

    auto witness = rotational_witness(s);
    if (!witness) {
        rep.violations.push_back("scheme has no rotation witness");
    } else if (!witness_is_valid(s, *witness)) {
        rep.violations.push_back("rotation witness failed validation");
    }

    std::vector<SubfieldBasis> bases;
    bases.push_back(SubfieldBasis::standard(*f));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> pick(1, n - 1);
    while (bases.size() < 1 + static_cast<std::size_t>(random_bases)) {
        std::vector<FieldElement> cand;
        RankTracker tracker(*f);
        while (cand.size() < ell) {
            std::uint32_t idx = pick(rng);
            if (tracker.add(f->ref_coords(idx))) cand.push_back(f->element(idx));
        }
        bases.emplace_back(*f, cand);
    }
    rep.counts["bases_checked"] = static_cast<long long>(bases.size());
    for (std::size_t b = 0; b < bases.size(); ++b) {
        CostReport cost = io_cost(s, bases[b]);
        if (static_cast<long long>(cost.total_reads) != expected) {
            std::ostringstream os;
            os << "basis " << b << ": reads " << cost.total_reads << " != " << expected;
            rep.violations.push_back(os.str());
        }
    }
    return rep;
}

VerifyReport check_symmetric_average(unsigned p, unsigned d, unsigned ell, unsigned m) {
    VerifyReport rep;
    rep.check = "thm2";
    set_common_params(rep, p, d, ell);
    rep.params["m"] = m;
    auto f = field_for(p, d, ell);
    if (m >= ell) throw std::invalid_argument("search: need m < ell");
    unsigned q = f->subfield_order();
    unsigned n = static_cast<unsigned>(f->order());
    unsigned r = static_cast<unsigned>(ipow(q, m));
    RsCode code = RsCode::full_length(f, n - r);
    SchemeCollection coll =
        collection_of_schemes(code, default_w(*f, m), SubfieldBasis::standard(*f));
    if (!is_symmetric(coll)) rep.violations.push_back("collection is not symmetric");
    AverageIoResult avg = average_io_exact(coll);
    rep.counts["n"] = n;
    rep.counts["k"] = n - r;
    rep.counts["ordered_bases"] = static_cast<long long>(avg.ordered_bases);
    rep.counts["average_num"] = avg.average.num;
    rep.counts["average_den"] = avg.average.den;
    long long expect = static_cast<long long>(n - r) * ell;
    rep.counts["expected_average"] = expect;
    if (!(avg.average.den == 1 && avg.average.num == expect)) {
        std::ostringstream os;
        os << "average reads " << avg.average.num << "/" << avg.average.den << " != "
           << expect;
        rep.violations.push_back(os.str());
    }
    return rep;
}

VerifyReport check_optimal_classes(unsigned p, unsigned d, unsigned ell,
                                   unsigned target, unsigned workers) {
    VerifyReport rep;
    rep.check = "thm3";
    set_common_params(rep, p, d, ell);
    rep.params["target"] = target;
    auto f = field_for(p, d, ell);
    unsigned q = f->subfield_order();
    rep.exploratory = (q != 2);
    RsCode code = full_code(f, 2);
    unsigned n = code.length();
    unsigned k = code.dim();
    ClassScan scan = scan_classes(code, target, workers);
    rep.counts["classes_total"] = static_cast<long long>(scan.total);
    rep.counts["classes_valid"] = static_cast<long long>(scan.valid.size());
    if (scan.valid.empty()) {
        rep.violations.push_back("no valid scheme classes");
        return rep;
    }
    unsigned min_bw = scan.valid[0].bandwidth;
    for (const auto& rec : scan.valid) min_bw = std::min<unsigned>(min_bw, rec.bandwidth);
    rep.counts["min_bandwidth"] = min_bw;
    if (q == 2) {
        long long expect_bw = static_cast<long long>(n - 1) * (ell - 1);
        if (min_bw != expect_bw) {
            std::ostringstream os;
            os << "min bandwidth " << min_bw << " != " << expect_bw;
            rep.violations.push_back(os.str());
        }
    }

    PackedSubspaces packed = enumerate_scheme_classes(code);
    SubfieldBasis std_basis = SubfieldBasis::standard(*f);
    long long optimal = 0, rotational = 0;
    long long io_min = -1, io_max = -1;
    for (const auto& rec : scan.valid) {
        if (rec.bandwidth != min_bw) continue;
        ++optimal;
        RepairScheme s = scheme_from_class(code, packed.at(rec.index), target);
        auto witness = rotational_witness(s);
        bool criterion = hyperplane_counts_ok(s);
        if (witness) ++rotational;
        CostReport cost = io_cost(s, std_basis);
        long long reads = cost.total_reads;
        io_min = (io_min < 0) ? reads : std::min(io_min, reads);
        io_max = (io_max < 0) ? reads : std::max(io_max, reads);
        if (witness.has_value() != criterion) {
            std::ostringstream os;
            os << "class " << rec.index << ": witness and hyperplane counts disagree";
            rep.violations.push_back(os.str());
        }
        if (q != 2) continue;
        if (!witness) {
            std::ostringstream os;
            os << "class " << rec.index << ": bandwidth-optimal but not rotational";
            rep.violations.push_back(os.str());
            continue;
        }
        if (!witness_is_valid(s, *witness)) {
            std::ostringstream os;
            os << "class " << rec.index << ": invalid rotation witness";
            rep.violations.push_back(os.str());
        }
        if (reads != static_cast<long long>(k) * ell) {
            std::ostringstream os;
            os << "class " << rec.index << ": reads " << reads << " != " << k * ell;
            rep.violations.push_back(os.str());
        }
        if (ell == 2) {
            for (const auto& elems : all_basis_sets(*f)) {
                SubfieldBasis other(*f, elems);
                CostReport c2 = io_cost(s, other);
                if (c2.total_reads != static_cast<unsigned>(k) * ell) {
                    std::ostringstream os;
                    os << "class " << rec.index << ": reads " << c2.total_reads
                       << " under an alternate basis";
                    rep.violations.push_back(os.str());
                }
            }
        }
    }
    rep.counts["optimal_classes"] = optimal;
    rep.counts["optimal_rotational"] = rotational;
    rep.counts["optimal_reads_min"] = io_min;
    rep.counts["optimal_reads_max"] = io_max;
    return rep;
}

VerifyReport check_optimal_column_dims(unsigned p, unsigned d, unsigned ell,
                                       unsigned m, unsigned target, unsigned workers) {
    VerifyReport rep;
    rep.check = "lemma10";
    set_common_params(rep, p, d, ell);
    rep.params["m"] = m;
    rep.params["target"] = target;
    auto f = field_for(p, d, ell);
    if (m == 0 || m >= ell) throw std::invalid_argument("search: need 1 <= m < ell");
    unsigned q = f->subfield_order();
    unsigned r = static_cast<unsigned>(ipow(q, m));
    RsCode code = full_code(f, r);
    unsigned n = code.length();
    ClassScan scan = scan_classes(code, target, workers);
    rep.counts["classes_total"] = static_cast<long long>(scan.total);
    rep.counts["classes_valid"] = static_cast<long long>(scan.valid.size());
    if (scan.valid.empty()) {
        rep.violations.push_back("no valid scheme classes");
        return rep;
    }
    unsigned min_bw = scan.valid[0].bandwidth;
    for (const auto& rec : scan.valid) min_bw = std::min<unsigned>(min_bw, rec.bandwidth);
    long long expect_bw = static_cast<long long>(n - 1) * (ell - m);
    rep.counts["min_bandwidth"] = min_bw;
    rep.counts["expected_min_bandwidth"] = expect_bw;
    if (min_bw != expect_bw) {
        std::ostringstream os;
        os << "min bandwidth " << min_bw << " != " << expect_bw;
        rep.violations.push_back(os.str());
    }
    long long optimal = 0;
    for (const auto& rec : scan.valid) {
        if (rec.bandwidth != min_bw) continue;
        ++optimal;
        if (rec.uniform_dim != ell - m) {
            std::ostringstream os;
            os << "class " << rec.index << ": column dimensions are not all " << (ell - m);
            rep.violations.push_back(os.str());
        }
    }
    rep.counts["optimal_classes"] = optimal;
    return rep;
}

VerifyReport check_hyperplane_multiplicity(unsigned p, unsigned d, unsigned ell,
                                           unsigned r, unsigned workers) {
    VerifyReport rep;
    rep.check = "lemma7";
    set_common_params(rep, p, d, ell);
    rep.params["r"] = r;
    auto f = field_for(p, d, ell);
    RsCode code = full_code(f, r);
    unsigned target = 1;
    ClassScan scan = scan_classes(code, target, workers);
    PackedSubspaces packed = enumerate_scheme_classes(code);
    rep.counts["classes_total"] = static_cast<long long>(scan.total);
    rep.counts["classes_valid"] = static_cast<long long>(scan.valid.size());
    long long candidates = 0, rotational = 0, criterion_true = 0;
    for (const auto& rec : scan.valid) {
        if (rec.uniform_dim != ell - 1) continue;
        ++candidates;
        RepairScheme s = scheme_from_class(code, packed.at(rec.index), target);
        bool wit = rotational_witness(s).has_value();
        bool crit = hyperplane_counts_ok(s);
        if (wit) ++rotational;
        if (crit) ++criterion_true;
        if (wit != crit) {
            std::ostringstream os;
            os << "class " << rec.index << ": witness " << (wit ? "exists" : "missing")
               << " but hyperplane counts say " << (crit ? "rotational" : "not rotational");
            rep.violations.push_back(os.str());
        }
    }
    rep.counts["candidates"] = candidates;
    rep.counts["rotational"] = rotational;
    rep.counts["criterion_true"] = criterion_true;
    return rep;
}

VerifyReport check_kernel_intersections(unsigned p, unsigned d, unsigned ell) {
    VerifyReport rep;
    rep.check = "lemma5";
    set_common_params(rep, p, d, ell);
    auto f = field_for(p, d, ell);
    if (tuple_budget(*f, ell) > kClassBudget)
        throw std::invalid_argument("search: too many tuples to enumerate");
    std::vector<Subspace> stack;  // running kernel intersections per prefix
    std::uint64_t tuples = for_each_independent_tuple(
        *f, ell, [&](std::span<const std::uint32_t> tuple) {
            std::size_t s = tuple.size();
            Subspace kern = trace_kernel(*f, f->element(tuple.back()));
            Subspace inter = (s == 1)
                                 ? kern
                                 : intersect(std::vector<Subspace>{stack[s - 2], kern});
            stack.erase(stack.begin() + static_cast<std::ptrdiff_t>(s) - 1, stack.end());
            stack.push_back(inter);
            if (inter.dim() != ell - s) {
                std::ostringstream os;
                os << "tuple (";
                for (std::size_t i = 0; i < s; ++i)
                    os << (i ? "," : "") << tuple[i];
                os << "): intersection dim " << inter.dim() << " != " << (ell - s);
                rep.violations.push_back(os.str());
            }
        });
    rep.counts["tuples"] = static_cast<long long>(tuples);
    return rep;
}

VerifyReport check_indicator_sums(unsigned p, unsigned d, unsigned ell) {
    VerifyReport rep;
    rep.check = "lemma6";
    set_common_params(rep, p, d, ell);
    auto f = field_for(p, d, ell);
    if (tuple_budget(*f, ell) > kClassBudget)
        throw std::invalid_argument("search: too many tuples to enumerate");
    unsigned q = f->subfield_order();
    std::uint32_t xi = f->primitive().index();
    std::uint64_t n = f->order();
    std::uint64_t tuples = for_each_independent_tuple(
        *f, ell, [&](std::span<const std::uint32_t> tuple) {
            std::size_t s = tuple.size();
            long long sum = 0;
            std::uint32_t pw = f->one().index();
            for (std::uint64_t j = 0; j + 1 < n; ++j) {
                bool nonzero = false;
                for (std::uint32_t g : tuple)
                    if (f->trace_digit(f->mul_idx(g, pw)) != 0) {
                        nonzero = true;
                        break;
                    }
                sum += nonzero ? 1 : 0;
                pw = f->mul_idx(pw, xi);
            }
            long long expect =
                static_cast<long long>(n) - static_cast<long long>(ipow(q, ell - s));
            if (sum != expect) {
                std::ostringstream os;
                os << "tuple (";
                for (std::size_t i = 0; i < s; ++i)
                    os << (i ? "," : "") << tuple[i];
                os << "): indicator sum " << sum << " != " << expect;
                rep.violations.push_back(os.str());
            }
        });
    rep.counts["tuples"] = static_cast<long long>(tuples);
    return rep;
}

VerifyReport check_counterexample() {
    VerifyReport rep;
    rep.check = "counterexample";
    set_common_params(rep, 2, 1, 2);
    auto f = make_field(2, 1, 2);
    FieldElement one = f->one();
    FieldElement zero = f->zero();
    FieldElement xi = f->primitive();
    std::vector<Codeword> dual_rows = {
        {one, zero, one, one},
        {xi, one, zero, one},
    };
    LinearCode code = LinearCode::from_dual_span(f, dual_rows, 4);
    rep.counts["n"] = code.length();
    rep.counts["k"] = code.dim();
    if (code.dim() != 2) rep.violations.push_back("code dimension is not 2");
    unsigned dist = min_distance(code);
    rep.counts["min_distance"] = dist;
    if (!is_mds(code)) rep.violations.push_back("code is not MDS");
    RepairScheme s = RepairScheme::for_linear(code, 1, dual_rows);
    unsigned bw = bandwidth(s);
    rep.counts["bandwidth"] = bw;
    if (bw != 3) rep.violations.push_back("bandwidth is not the optimal 3");
    auto witness = rotational_witness(s);
    rep.counts["rotational"] = witness.has_value() ? 1 : 0;
    if (witness) rep.violations.push_back("scheme unexpectedly has a rotation witness");
    CostReport cost = io_cost(s, SubfieldBasis::standard(*f));
    rep.counts["reads_standard_basis"] = cost.total_reads;
    return rep;
}

std::vector<ParetoPoint> pareto_front(const RsCode& code, unsigned target,
                                      const SubfieldBasis& basis) {
    PackedSubspaces packed = enumerate_scheme_classes(code);
    ClassScan scan = scan_classes(code, target, 1);
    std::map<std::pair<unsigned, unsigned>, std::uint32_t> best;  // (bw, reads) -> index
    for (const auto& rec : scan.valid) {
        RepairScheme s = scheme_from_class(code, packed.at(rec.index), target);
        CostReport cost = io_cost(s, basis);
        std::pair<unsigned, unsigned> key{rec.bandwidth, cost.total_reads};
        if (!best.count(key)) best[key] = rec.index;
    }
    std::vector<ParetoPoint> front;
    for (const auto& [key, idx] : best) {
        auto [bw, reads] = key;
        bool dominated = false;
        for (const auto& [other, oidx] : best) {
            auto [obw, oreads] = other;
            if ((obw < bw && oreads <= reads) || (obw <= bw && oreads < reads)) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            front.push_back({bw, reads, idx, class_polys(code, packed.at(idx))});
    }
    std::sort(front.begin(), front.end(), [](const ParetoPoint& a, const ParetoPoint& b) {
        return a.bandwidth < b.bandwidth;
    });
    return front;
}

}  // namespace rsrepair
