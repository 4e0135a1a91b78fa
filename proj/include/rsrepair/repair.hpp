#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "rsrepair/basis.hpp"
#include "rsrepair/codes.hpp"
#include "rsrepair/poly.hpp"
#include "rsrepair/subspace.hpp"

namespace rsrepair {

using AnyCode = std::variant<RsCode, LinearCode>;

const Field& code_field(const AnyCode& code);
std::shared_ptr<const Field> code_field_ptr(const AnyCode& code);
unsigned code_length(const AnyCode& code);
unsigned code_dim(const AnyCode& code);
bool code_is_full_length(const AnyCode& code);

// A one-erasure repair scheme: ell dual codewords whose values at the target
// position span E over F. Helpers ship subfield traces; the collector glues
// them back into the lost symbol.
class RepairScheme {
public:
    // RS path: dual codewords given as polynomials evaluated over the code's
    // points. Validates degrees, dual membership, and the rank at the target.
    static RepairScheme for_rs(RsCode code, unsigned target, std::vector<EPoly> polys);

    // Generic path: dual codewords given verbatim.
    static RepairScheme for_linear(LinearCode code, unsigned target,
                                   std::vector<Codeword> dual_words);

    // Fast path for enumeration loops; callers must have established dual
    // membership structurally. The target rank is still checked.
    static RepairScheme for_rs_trusted(RsCode code, unsigned target,
                                       std::vector<EPoly> polys);

    const AnyCode& code() const { return code_; }
    const Field& field() const { return code_field(code_); }
    unsigned length() const { return code_length(code_); }
    unsigned target() const { return target_; }
    // words()[i][j-1] = value of dual codeword i at position j
    const std::vector<Codeword>& words() const { return words_; }
    const std::vector<EPoly>* polys() const { return polys_.empty() ? nullptr : &polys_; }

private:
    RepairScheme(AnyCode code, unsigned target, std::vector<Codeword> words,
                 std::vector<EPoly> polys)
        : code_(std::move(code)), target_(target), words_(std::move(words)),
          polys_(std::move(polys)) {}

    AnyCode code_;
    unsigned target_;
    std::vector<Codeword> words_;
    std::vector<EPoly> polys_;
};

// Span over F of the scheme's dual-codeword values at position j. For the
// target this is all of E by construction.
Subspace column_space(const RepairScheme& s, unsigned j);

// Total subfield symbols transferred: sum of column dimensions over helpers.
unsigned bandwidth(const RepairScheme& s);

struct CostRow {
    unsigned helper = 0;
    unsigned bandwidth = 0;
    unsigned reads = 0;
    std::vector<unsigned> read_positions;  // 1-based sub-symbol indices
};

struct CostReport {
    unsigned target = 0;
    std::vector<CostRow> helpers;  // ascending, target excluded
    unsigned total_bandwidth = 0;
    unsigned total_reads = 0;
};

// Disk traffic when every node stores coordinates under basis b: helper j
// must read the union of trace-weight supports across its column space.
CostReport io_cost(const RepairScheme& s, const SubfieldBasis& b);
// Per-node storage bases; bases[j-1] is the basis node j stores under.
CostReport io_cost(const RepairScheme& s, const std::vector<SubfieldBasis>& bases);

struct ReadLogRow {
    unsigned helper = 0;
    std::vector<unsigned> positions;  // sub-symbols actually read, 1-based
    unsigned traces_sent = 0;
};

struct ReadLog {
    std::vector<ReadLogRow> helpers;
    unsigned total_read = 0;
    unsigned total_sent = 0;
};

struct RepairResult {
    FieldElement recovered;
    ReadLog log;
};

// Run the repair protocol against a damaged codeword whose hole matches the
// scheme's target. The log records every sub-symbol access.
RepairResult execute_repair(const RepairScheme& s, const DamagedCodeword& w,
                            const SubfieldBasis& b);
RepairResult execute_repair(const RepairScheme& s, const DamagedCodeword& w,
                            const std::vector<SubfieldBasis>& bases);

// Witness that the column spaces are one subspace orbit: spaces[j] = rho_j S
// with the multipliers running over all of E* exactly once.
struct RotationalWitness {
    Subspace base;
    std::vector<std::pair<unsigned, FieldElement>> multipliers;  // (helper, rho)
};

// Requires a full-length code. Searches for a witness via bipartite matching
// between helpers and candidate multipliers.
std::optional<RotationalWitness> rotational_witness(const RepairScheme& s);

bool witness_is_valid(const RepairScheme& s, const RotationalWitness& w);

// Same scheme re-rooted at position 1 by substituting x + alpha_target for x.
// Requires a full-length RS scheme. Bandwidth and read totals are preserved;
// column spaces get permuted across helpers.
RepairScheme translate_to_position_one(const RepairScheme& s);

}  // namespace rsrepair
