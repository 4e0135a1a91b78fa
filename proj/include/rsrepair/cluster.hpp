#pragma once

#include <cstdint>
#include <vector>

#include "rsrepair/codes.hpp"
#include "rsrepair/repair.hpp"

namespace rsrepair {

// In-memory storage nodes. Node j keeps the ell subfield coordinates of its
// code symbol under its own storage basis; every coordinate read is counted.
class Cluster {
public:
    Cluster(RsCode code, std::vector<SubfieldBasis> bases);

    // Every node stores under the reference basis.
    static Cluster with_standard_basis(RsCode code);

    const RsCode& code() const { return code_; }
    unsigned nodes() const { return code_.length(); }
    const SubfieldBasis& node_basis(unsigned j) const;

    // Distributes a codeword across the nodes.
    void load(const Codeword& w);
    bool loaded() const { return loaded_; }

    // Administrative views; they bypass read counting.
    FieldElement node_symbol(unsigned j) const;
    Codeword snapshot() const;

    void fail_node(unsigned j);
    bool node_failed(unsigned j) const;

    // Counted access to one stored coordinate, 1-based.
    Digit read(unsigned j, unsigned pos);
    std::uint64_t reads_at(unsigned j) const;

    void write_symbol(unsigned j, const FieldElement& a);

private:
    struct NodeState {
        FVec digits;
        bool failed = false;
        std::uint64_t reads = 0;
    };

    void require_node(unsigned j) const;

    RsCode code_;
    std::vector<SubfieldBasis> bases_;
    std::vector<NodeState> nodes_;
    bool loaded_ = false;
};

struct TranscriptRow {
    unsigned helper = 0;
    std::vector<unsigned> positions;  // coordinates read, 1-based, ascending
    unsigned traces_sent = 0;
};

struct RepairTranscript {
    unsigned failed = 0;  // position that was repaired
    std::vector<TranscriptRow> rows;
    unsigned total_read = 0;
    unsigned total_sent = 0;
    FieldElement recovered;
    bool success = false;  // recovered the lost symbol and the word still checks
};

// Fails the scheme's target node, runs the trace protocol against the digit
// stores, and writes the recovered symbol back. The transcript records every
// coordinate access, so its totals are directly comparable with io_cost and
// bandwidth predictions.
RepairTranscript simulate_repair(Cluster& cl, const RepairScheme& s);

}  // namespace rsrepair
