#include "rsrepair/cluster.hpp"

#include <algorithm>
#include <stdexcept>

#include "rsrepair/fqla.hpp"

namespace rsrepair {

Cluster::Cluster(RsCode code, std::vector<SubfieldBasis> bases)
    : code_(std::move(code)), bases_(std::move(bases)) {
    if (bases_.size() != code_.length())
        throw std::invalid_argument("cluster: one storage basis per node required");
    for (const auto& b : bases_)
        if (&b.field() != &code_.field())
            throw std::invalid_argument("cluster: basis field mismatch");
    nodes_.resize(code_.length());
    for (auto& st : nodes_) st.digits.assign(code_.field().ext_degree(), 0);
}

Cluster Cluster::with_standard_basis(RsCode code) {
    const Field& fld = code.field();
    std::vector<SubfieldBasis> bases(code.length(), SubfieldBasis::standard(fld));
    return Cluster(std::move(code), std::move(bases));
}

const SubfieldBasis& Cluster::node_basis(unsigned j) const {
    require_node(j);
    return bases_[j - 1];
}

void Cluster::require_node(unsigned j) const {
    if (j < 1 || j > nodes_.size())
        throw std::invalid_argument("cluster: node index out of range");
}

void Cluster::load(const Codeword& w) {
    if (!rs_contains(code_, w))
        throw std::invalid_argument("cluster: word is not in the code");
    for (unsigned j = 1; j <= nodes_.size(); ++j) {
        nodes_[j - 1].digits = bases_[j - 1].coords(w[j - 1]);
        nodes_[j - 1].failed = false;
        nodes_[j - 1].reads = 0;
    }
    loaded_ = true;
}

FieldElement Cluster::node_symbol(unsigned j) const {
    require_node(j);
    if (!loaded_) throw std::logic_error("cluster: nothing loaded");
    if (nodes_[j - 1].failed) throw std::invalid_argument("cluster: node has failed");
    return bases_[j - 1].from_coords(nodes_[j - 1].digits);
}

Codeword Cluster::snapshot() const {
    Codeword w;
    w.reserve(nodes_.size());
    for (unsigned j = 1; j <= nodes_.size(); ++j) w.push_back(node_symbol(j));
    return w;
}

void Cluster::fail_node(unsigned j) {
    require_node(j);
    auto& st = nodes_[j - 1];
    st.failed = true;
    st.digits.assign(st.digits.size(), 0);
}

bool Cluster::node_failed(unsigned j) const {
    require_node(j);
    return nodes_[j - 1].failed;
}

Digit Cluster::read(unsigned j, unsigned pos) {
    require_node(j);
    auto& st = nodes_[j - 1];
    if (!loaded_) throw std::logic_error("cluster: nothing loaded");
    if (st.failed) throw std::invalid_argument("cluster: node has failed");
    if (pos < 1 || pos > st.digits.size())
        throw std::invalid_argument("cluster: coordinate index out of range");
    ++st.reads;
    return st.digits[pos - 1];
}

std::uint64_t Cluster::reads_at(unsigned j) const {
    require_node(j);
    return nodes_[j - 1].reads;
}

void Cluster::write_symbol(unsigned j, const FieldElement& a) {
    require_node(j);
    nodes_[j - 1].digits = bases_[j - 1].coords(a);
    nodes_[j - 1].failed = false;
}

RepairTranscript simulate_repair(Cluster& cl, const RepairScheme& s) {
    const Field& fld = cl.code().field();
    const RsCode* rs = std::get_if<RsCode>(&s.code());
    if (!rs || &rs->field() != &fld || rs->length() != cl.code().length() ||
        rs->dim() != cl.code().dim())
        throw std::invalid_argument("cluster: scheme is for a different code");
    for (unsigned j = 1; j <= cl.nodes(); ++j)
        if (rs->eval_points()[j - 1].index() != cl.code().eval_points()[j - 1].index())
            throw std::invalid_argument("cluster: scheme is for a different code");
    unsigned target = s.target();
    if (cl.node_failed(target))
        throw std::invalid_argument("cluster: target node already failed");

    const unsigned ell = fld.ext_degree();
    const unsigned n = cl.nodes();
    FieldElement expected = cl.node_symbol(target);
    cl.fail_node(target);

    RepairTranscript tr;
    tr.failed = target;

    // Per helper: pick dual words whose values there form a column basis,
    // read the coordinates their trace weights touch, and emit one trace
    // digit per picked word.
    struct HelperShare {
        std::vector<unsigned> senders;  // word indices with independent values
        FVec traces;                    // one digit per sender
    };
    std::vector<HelperShare> shares(n);
    for (unsigned j = 1; j <= n; ++j) {
        if (j == target) continue;
        const SubfieldBasis& b = cl.node_basis(j);
        HelperShare& share = shares[j - 1];
        RankTracker tracker(fld);
        std::vector<FVec> weights;
        for (unsigned i = 0; i < ell; ++i) {
            const FieldElement& v = s.words()[i][j - 1];
            if (!tracker.add(fld.ref_coords(v))) continue;
            share.senders.push_back(i);
            weights.push_back(b.trace_weights(v));
        }
        std::vector<char> needed(ell, 0);
        for (const FVec& w : weights)
            for (unsigned pos = 0; pos < ell; ++pos)
                if (w[pos] != 0) needed[pos] = 1;
        TranscriptRow row;
        row.helper = j;
        FVec stored(ell, 0);
        for (unsigned pos = 1; pos <= ell; ++pos) {
            if (!needed[pos - 1]) continue;
            stored[pos - 1] = cl.read(j, pos);
            row.positions.push_back(pos);
        }
        for (const FVec& w : weights) {
            Digit t = 0;
            for (unsigned pos = 0; pos < ell; ++pos)
                t = fld.fadd(t, fld.fmul(w[pos], stored[pos]));
            share.traces.push_back(t);
        }
        row.traces_sent = static_cast<unsigned>(share.traces.size());
        tr.total_read += static_cast<unsigned>(row.positions.size());
        tr.total_sent += row.traces_sent;
        tr.rows.push_back(std::move(row));
    }

    // Collector: every word's trace at helper j is an F-combination of the
    // traces that j actually sent, because traces are F-linear in the value.
    FVec rhs(ell, 0);
    for (unsigned j = 1; j <= n; ++j) {
        if (j == target) continue;
        const HelperShare& share = shares[j - 1];
        FMatrix sent_coords;
        for (unsigned i : share.senders)
            sent_coords.push_back(fld.ref_coords(s.words()[i][j - 1]));
        for (unsigned i = 0; i < ell; ++i) {
            auto combo = solve_combination(fld, sent_coords,
                                           fld.ref_coords(s.words()[i][j - 1]));
            if (!combo) throw std::logic_error("cluster: trace reconstruction failed");
            Digit t = 0;
            for (std::size_t u = 0; u < combo->size(); ++u)
                t = fld.fadd(t, fld.fmul((*combo)[u], share.traces[u]));
            rhs[i] = fld.fadd(rhs[i], t);
        }
    }

    std::vector<FieldElement> target_vals;
    for (unsigned i = 0; i < ell; ++i) target_vals.push_back(s.words()[i][target - 1]);
    SubfieldBasis target_basis(fld, target_vals);
    FVec traces(ell, 0);
    for (unsigned i = 0; i < ell; ++i) traces[i] = fld.fneg(rhs[i]);
    tr.recovered = target_basis.recover_from_traces(traces);

    cl.write_symbol(target, tr.recovered);
    tr.success = (tr.recovered == expected) && rs_contains(cl.code(), cl.snapshot());
    return tr;
}

}  // namespace rsrepair
