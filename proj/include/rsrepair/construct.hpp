#pragma once

#include <cstdint>
#include <vector>

#include "rsrepair/repair.hpp"

namespace rsrepair {

// Scheme built from the subspace polynomial of an m-dimensional W: the dual
// words are L_W(b_i (x - a_t)) / (x - a_t) over the target's basis b. Needs a
// full-length code with codimension exactly q^m; every helper then has
// column space im(L_W) / (a_j - a_t), which is (ell - m)-dimensional.
RepairScheme subspace_poly_scheme(const RsCode& code, const Subspace& w,
                                  const SubfieldBasis& b, unsigned target);

// Default W: the span of the first m reference basis elements.
Subspace default_w(const Field& fld, unsigned m);

// Baseline repair: contact the first dim() positions outside the target and
// download their full symbols; the remaining r-1 positions are avoided by
// putting roots there.
RepairScheme naive_scheme(const RsCode& code, unsigned target);

// Storage basis making helper j's reads hit the floor: reads_j equals the
// column dimension. Built as the dual of the column basis extended greedily
// by least field elements.
SubfieldBasis optimal_local_basis(const RepairScheme& s, unsigned helper);

struct SchemeCollection {
    std::vector<RepairScheme> schemes;  // schemes[j-1] repairs position j

    const RsCode& code() const;
    const Field& field() const;
    unsigned length() const { return static_cast<unsigned>(schemes.size()); }
};

// One subspace-polynomial scheme per position, sharing W and b.
SchemeCollection collection_of_schemes(const RsCode& code, const Subspace& w,
                                       const SubfieldBasis& b);

// Column space at j of the scheme for j' equals the column space at j' of
// the scheme for j, for every pair.
bool is_symmetric(const SchemeCollection& c);

// Every basis of E over F as a set, ascending by element indices. Guarded at
// 10^6 sets.
std::vector<std::vector<FieldElement>> all_basis_sets(const Field& fld);

struct Rational {
    long long num = 0;
    long long den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};
Rational make_rational(long long num, long long den);

struct AverageIoResult {
    Rational average;
    bool exact = false;
    std::uint64_t ordered_bases = 0;       // bases in the per-node minimization
    std::vector<unsigned> per_node_reads;  // minimized read totals, node order
};

// Average over nodes of the read-minimizing storage basis per node. Exact
// mode sweeps every ordered basis of E over F (deduplicated up to order,
// which leaves the minimum unchanged); guarded at 10^6 bases.
AverageIoResult average_io_exact(const SchemeCollection& c);

// Evaluates only the dual-extension candidates from optimal_local_basis and
// reports an upper bound.
AverageIoResult average_io_heuristic(const SchemeCollection& c);

}  // namespace rsrepair
