#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rsrepair/construct.hpp"
#include "rsrepair/fqla.hpp"
#include "rsrepair/repair.hpp"

namespace rsrepair {

// A scheme class: an ell-dimensional F-subspace of the degree-<r polynomial
// space over E, stored as a packed RREF matrix with r*ell columns (each
// coefficient contributes ell reference coordinates). Bandwidth, reads, and
// rotationality are class invariants, so enumeration walks classes, not
// individual dual-codeword tuples.

// All scheme classes for the code, ascending canonical order. Guarded at
// 10^6 classes.
PackedSubspaces enumerate_scheme_classes(const RsCode& code);

// Decode one packed class into its row polynomials.
std::vector<EPoly> class_polys(const RsCode& code, std::span<const Digit> rows);

struct ClassRecord {
    std::uint32_t index = 0;      // position in the enumeration
    std::uint16_t bandwidth = 0;  // sum of helper column dimensions
    std::uint8_t uniform_dim = 0; // common helper dimension, or 255 if mixed
};

struct ClassScan {
    std::uint64_t total = 0;
    std::uint64_t invalid = 0;  // counted but skipped: no basis at the target
    std::vector<ClassRecord> valid;
};

// Validity and bandwidth for every class; workers split the index range.
ClassScan scan_classes(const RsCode& code, unsigned target, unsigned workers = 1);

struct VerifyReport {
    std::string check;
    bool exploratory = false;
    std::map<std::string, long long> params;
    std::map<std::string, long long> counts;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Rotational schemes read the same total under every storage basis:
// ell * (q^ell - q^m) for the subspace-polynomial scheme of an m-dim W.
VerifyReport check_rotational_io(unsigned p, unsigned d, unsigned ell, unsigned m,
                                 unsigned random_bases, std::uint64_t seed);

// A full collection of subspace-polynomial schemes is symmetric and its
// exact basis-minimized average read total equals k * ell.
VerifyReport check_symmetric_average(unsigned p, unsigned d, unsigned ell, unsigned m);

// Exhaustive sweep at codimension 2: every bandwidth-optimal class must be
// rotational with reads k * ell under the standard basis. Non-binary fields
// run in exploratory mode (reported, not asserted).
VerifyReport check_optimal_classes(unsigned p, unsigned d, unsigned ell,
                                   unsigned target, unsigned workers);

// Exhaustive sweep at codimension q^m: every bandwidth-optimal class has all
// helper columns of dimension ell - m, and the optimum is (n-1)(ell-m).
VerifyReport check_optimal_column_dims(unsigned p, unsigned d, unsigned ell,
                                       unsigned m, unsigned target, unsigned workers);

// For classes whose helper columns all have dimension ell - 1, a witness
// exists iff every hyperplane shows up exactly q - 1 times; the matcher and
// the counting criterion must agree.
VerifyReport check_hyperplane_multiplicity(unsigned p, unsigned d, unsigned ell,
                                           unsigned r, unsigned workers);

// dim of the intersection of trace kernels K/g_t over any F-independent
// tuple is ell - s.
VerifyReport check_kernel_intersections(unsigned p, unsigned d, unsigned ell);

// Summing the nonzero-trace indicators over E* gives q^ell - q^(ell-s).
VerifyReport check_indicator_sums(unsigned p, unsigned d, unsigned ell);

// The [4,2] MDS code over GF(4) whose dual is spanned by (1,0,1,1) and
// (xi,1,0,1): bandwidth-optimal at position 1 yet not rotational.
VerifyReport check_counterexample();

struct ParetoPoint {
    unsigned bandwidth = 0;
    unsigned reads = 0;
    std::uint32_t class_index = 0;
    std::vector<EPoly> polys;
};

// Nondominated (bandwidth, reads) pairs over all valid classes under the
// given storage basis, ascending bandwidth, least class index as the
// representative.
std::vector<ParetoPoint> pareto_front(const RsCode& code, unsigned target,
                                      const SubfieldBasis& basis);

}  // namespace rsrepair
