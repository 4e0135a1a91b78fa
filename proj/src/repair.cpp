#include "rsrepair/repair.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "rsrepair/fqla.hpp"

namespace rsrepair {

const Field& code_field(const AnyCode& code) {
    return std::visit([](const auto& c) -> const Field& { return c.field(); }, code);
}

std::shared_ptr<const Field> code_field_ptr(const AnyCode& code) {
    return std::visit([](const auto& c) { return c.field_ptr(); }, code);
}

unsigned code_length(const AnyCode& code) {
    return std::visit([](const auto& c) { return c.length(); }, code);
}

unsigned code_dim(const AnyCode& code) {
    return std::visit([](const auto& c) { return c.dim(); }, code);
}

bool code_is_full_length(const AnyCode& code) {
    return code_length(code) == code_field(code).order();
}

namespace {

void check_target_rank(const Field& fld, const std::vector<Codeword>& words,
                       unsigned target) {
    RankTracker tracker(fld);
    for (const auto& w : words)
        tracker.add(fld.ref_coords(w[target - 1]));
    if (tracker.rank() != fld.ext_degree())
        throw std::invalid_argument(
            "scheme: values at the target do not span the field");
}

void check_dual_membership(const Field& fld, const std::vector<Codeword>& gen_rows,
                           const std::vector<Codeword>& words) {
    for (size_t i = 0; i < words.size(); ++i) {
        for (const auto& row : gen_rows) {
            FieldElement acc = fld.zero();
            for (size_t j = 0; j < row.size(); ++j) acc += row[j] * words[i][j];
            if (!acc.is_zero())
                throw std::invalid_argument("scheme: word " + std::to_string(i + 1) +
                                            " is not in the dual code");
        }
    }
}

}  // namespace

RepairScheme RepairScheme::for_rs(RsCode code, unsigned target, std::vector<EPoly> polys) {
    const Field& fld = code.field();
    if (target == 0 || target > code.length())
        throw std::invalid_argument("scheme: target position out of range");
    if (polys.size() != fld.ext_degree())
        throw std::invalid_argument("scheme: expected one polynomial per subfield row");
    const unsigned r = code.codim();
    std::vector<Codeword> words;
    words.reserve(polys.size());
    for (size_t i = 0; i < polys.size(); ++i) {
        if (&polys[i].field() != &fld)
            throw std::invalid_argument("scheme: polynomial over another field");
        if (polys[i].degree() >= static_cast<int>(r))
            throw std::invalid_argument("scheme: word " + std::to_string(i + 1) +
                                        " is not in the dual code");
        Codeword w;
        w.reserve(code.length());
        for (const auto& a : code.eval_points()) w.push_back(polys[i].eval(a));
        words.push_back(std::move(w));
    }
    check_dual_membership(fld, code.generator_rows(), words);
    check_target_rank(fld, words, target);
    return RepairScheme(AnyCode(std::move(code)), target, std::move(words),
                        std::move(polys));
}

RepairScheme RepairScheme::for_rs_trusted(RsCode code, unsigned target,
                                          std::vector<EPoly> polys) {
    const Field& fld = code.field();
    std::vector<Codeword> words;
    words.reserve(polys.size());
    for (const auto& p : polys) {
        Codeword w;
        w.reserve(code.length());
        for (const auto& a : code.eval_points()) w.push_back(p.eval(a));
        words.push_back(std::move(w));
    }
    check_target_rank(fld, words, target);
    return RepairScheme(AnyCode(std::move(code)), target, std::move(words),
                        std::move(polys));
}

RepairScheme RepairScheme::for_linear(LinearCode code, unsigned target,
                                      std::vector<Codeword> dual_words) {
    const Field& fld = code.field();
    if (target == 0 || target > code.length())
        throw std::invalid_argument("scheme: target position out of range");
    if (dual_words.size() != fld.ext_degree())
        throw std::invalid_argument("scheme: expected one dual word per subfield row");
    for (const auto& w : dual_words)
        if (w.size() != code.length())
            throw std::invalid_argument("scheme: dual word length mismatch");
    check_dual_membership(fld, code.generator_rows(), dual_words);
    check_target_rank(fld, dual_words, target);
    return RepairScheme(AnyCode(std::move(code)), target, std::move(dual_words), {});
}

Subspace column_space(const RepairScheme& s, unsigned j) {
    if (j == 0 || j > s.length())
        throw std::invalid_argument("scheme: position out of range");
    const Field& fld = s.field();
    std::vector<FieldElement> vals;
    vals.reserve(s.words().size());
    for (const auto& w : s.words()) vals.push_back(w[j - 1]);
    return Subspace::span_of(fld, vals);
}

unsigned bandwidth(const RepairScheme& s) {
    unsigned total = 0;
    for (unsigned j = 1; j <= s.length(); ++j) {
        if (j == s.target()) continue;
        total += column_space(s, j).dim();
    }
    return total;
}

namespace {

CostRow cost_row_for(const RepairScheme& s, unsigned j, const SubfieldBasis& b) {
    const Field& fld = s.field();
    Subspace col = column_space(s, j);
    CostRow row;
    row.helper = j;
    row.bandwidth = col.dim();
    std::vector<char> hit(fld.ext_degree(), 0);
    for (const auto& g : col.basis_elements()) {
        FVec w = b.trace_weights(g);
        for (unsigned i = 0; i < w.size(); ++i)
            if (w[i]) hit[i] = 1;
    }
    for (unsigned i = 0; i < hit.size(); ++i)
        if (hit[i]) row.read_positions.push_back(i + 1);
    row.reads = static_cast<unsigned>(row.read_positions.size());
    return row;
}

}  // namespace

CostReport io_cost(const RepairScheme& s, const SubfieldBasis& b) {
    std::vector<SubfieldBasis> bases(s.length(), b);
    return io_cost(s, bases);
}

CostReport io_cost(const RepairScheme& s, const std::vector<SubfieldBasis>& bases) {
    if (bases.size() != s.length())
        throw std::invalid_argument("io_cost: need one basis per node");
    CostReport rep;
    rep.target = s.target();
    for (unsigned j = 1; j <= s.length(); ++j) {
        if (j == s.target()) continue;
        CostRow row = cost_row_for(s, j, bases[j - 1]);
        rep.total_bandwidth += row.bandwidth;
        rep.total_reads += row.reads;
        rep.helpers.push_back(std::move(row));
    }
    return rep;
}

RepairResult execute_repair(const RepairScheme& s, const DamagedCodeword& w,
                            const SubfieldBasis& b) {
    std::vector<SubfieldBasis> bases(s.length(), b);
    return execute_repair(s, w, bases);
}

RepairResult execute_repair(const RepairScheme& s, const DamagedCodeword& w,
                            const std::vector<SubfieldBasis>& bases) {
    const Field& fld = s.field();
    const unsigned ell = fld.ext_degree();
    if (w.symbols.size() != s.length())
        throw std::invalid_argument("repair: codeword length mismatch");
    if (w.hole != s.target())
        throw std::invalid_argument("repair: hole does not match the scheme target");
    if (bases.size() != s.length())
        throw std::invalid_argument("repair: need one basis per node");

    // Right-hand sides of the trace equations, accumulated over helpers.
    FVec rhs(ell, 0);
    ReadLog log;

    for (unsigned j = 1; j <= s.length(); ++j) {
        if (j == s.target()) continue;
        const SubfieldBasis& basis = bases[j - 1];

        // Helper j ships traces for the first by-row independent subset of
        // its column values; everything else is an F-combination of those.
        std::vector<unsigned> sel;
        RankTracker tracker(fld);
        for (unsigned i = 0; i < ell; ++i)
            if (tracker.add(fld.ref_coords(s.words()[i][j - 1]))) sel.push_back(i);

        ReadLogRow lrow;
        lrow.helper = j;
        lrow.traces_sent = static_cast<unsigned>(sel.size());

        // The storage node holds coords under its own basis; reads touch
        // exactly the union of trace-weight supports.
        FVec stored = basis.coords(w.at(j));
        std::vector<char> touched(ell, 0);
        FVec traces(sel.size(), 0);
        for (size_t t = 0; t < sel.size(); ++t) {
            FVec wt = basis.trace_weights(s.words()[sel[t]][j - 1]);
            Digit acc = 0;
            for (unsigned i = 0; i < ell; ++i) {
                if (wt[i] == 0) continue;
                touched[i] = 1;
                acc = fld.fadd(acc, fld.fmul(wt[i], stored[i]));
            }
            traces[t] = acc;
        }
        for (unsigned i = 0; i < ell; ++i)
            if (touched[i]) lrow.positions.push_back(i + 1);
        log.total_read += static_cast<unsigned>(lrow.positions.size());
        log.total_sent += lrow.traces_sent;

        // Collector: rebuild Tr(g_i(a_j) c_j) for every i from the shipped
        // traces, then fold into the right-hand sides.
        FMatrix sel_coords;
        for (unsigned idx : sel) sel_coords.push_back(fld.ref_coords(s.words()[idx][j - 1]));
        for (unsigned i = 0; i < ell; ++i) {
            FVec target = fld.ref_coords(s.words()[i][j - 1]);
            auto combo = solve_combination(fld, sel_coords, target);
            if (!combo) throw std::logic_error("repair: column basis inconsistent");
            Digit ti = 0;
            for (size_t t = 0; t < combo->size(); ++t)
                ti = fld.fadd(ti, fld.fmul((*combo)[t], traces[t]));
            rhs[i] = fld.fadd(rhs[i], ti);
        }
        log.helpers.push_back(std::move(lrow));
    }

    // Tr(g_i(a_t) c_t) = -sum over helpers; the target values form a basis,
    // so trace recovery closes the loop.
    std::vector<FieldElement> target_vals;
    target_vals.reserve(ell);
    for (const auto& word : s.words()) target_vals.push_back(word[s.target() - 1]);
    SubfieldBasis target_basis(fld, target_vals);
    FVec traces(ell, 0);
    for (unsigned i = 0; i < ell; ++i) traces[i] = fld.fneg(rhs[i]);
    return {target_basis.recover_from_traces(traces), std::move(log)};
}

std::optional<RotationalWitness> rotational_witness(const RepairScheme& s) {
    if (!code_is_full_length(s.code()))
        throw std::invalid_argument("rotational: requires a full-length code");
    const Field& fld = s.field();
    const unsigned n = s.length();
    std::vector<unsigned> helpers;
    for (unsigned j = 1; j <= n; ++j)
        if (j != s.target()) helpers.push_back(j);
    // n - 1 helpers must absorb all of E*, one multiplier each
    const std::uint32_t group = fld.order() - 1;
    if (helpers.size() != group) return std::nullopt;

    Subspace base = column_space(s, helpers[0]);
    // orbit of base under E*, grouped by resulting subspace
    std::map<FVec, std::vector<std::uint32_t>> orbit;
    for (std::uint32_t g = 1; g < fld.order(); ++g)
        orbit[base.scaled(fld.element(g)).key()].push_back(g);

    std::vector<std::vector<std::uint32_t>> cand(helpers.size());
    for (size_t h = 0; h < helpers.size(); ++h) {
        auto it = orbit.find(column_space(s, helpers[h]).key());
        if (it == orbit.end()) return std::nullopt;
        cand[h] = it->second;
    }

    // bipartite matching helpers -> multipliers (augmenting paths)
    std::map<std::uint32_t, int> owner;  // multiplier -> helper slot
    std::vector<std::uint32_t> match(helpers.size(), 0);
    std::function<bool(size_t, std::set<std::uint32_t>&)> try_assign =
        [&](size_t h, std::set<std::uint32_t>& visited) -> bool {
        for (std::uint32_t g : cand[h]) {
            if (visited.count(g)) continue;
            visited.insert(g);
            auto it = owner.find(g);
            if (it == owner.end() || try_assign(static_cast<size_t>(it->second), visited)) {
                owner[g] = static_cast<int>(h);
                match[h] = g;
                return true;
            }
        }
        return false;
    };
    for (size_t h = 0; h < helpers.size(); ++h) {
        std::set<std::uint32_t> visited;
        if (!try_assign(h, visited)) return std::nullopt;
    }

    RotationalWitness wit{base, {}};
    for (size_t h = 0; h < helpers.size(); ++h)
        wit.multipliers.emplace_back(helpers[h], fld.element(match[h]));
    return wit;
}

bool witness_is_valid(const RepairScheme& s, const RotationalWitness& w) {
    const Field& fld = s.field();
    std::set<std::uint32_t> seen;
    if (w.multipliers.size() != static_cast<size_t>(fld.order() - 1)) return false;
    for (const auto& [helper, rho] : w.multipliers) {
        if (rho.is_zero()) return false;
        if (!seen.insert(rho.index()).second) return false;
        if (!(column_space(s, helper) == w.base.scaled(rho))) return false;
    }
    return true;
}

RepairScheme translate_to_position_one(const RepairScheme& s) {
    const RsCode* rs = std::get_if<RsCode>(&s.code());
    if (!rs || !rs->is_full_length())
        throw std::invalid_argument("translate: requires a full-length RS scheme");
    if (!s.polys())
        throw std::invalid_argument("translate: scheme has no polynomial form");
    const FieldElement shift = rs->eval_points()[s.target() - 1];
    std::vector<EPoly> moved;
    moved.reserve(s.polys()->size());
    for (const auto& p : *s.polys()) moved.push_back(p.shift_arg(shift));
    return RepairScheme::for_rs(*rs, 1, std::move(moved));
}

}  // namespace rsrepair
