#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncpart/catalan_sequences.hpp"
#include "ncpart/partition.hpp"

namespace ncpart {

/// d_1..d_{2n+1}: d_i is the distance from i to the next element of its
/// block, or 0 when i is the largest element of its block.
struct DiffSeq {
    std::vector<int> diffs;

    bool operator==(const DiffSeq&) const = default;
};

/// Throws ValidationError if p is not special.
DiffSeq difference_sequence(const Partition& p);

/// Special partition of [2n+1] -> element of S_n: keep the nonzero
/// differences in position order, reverse them and halve each.
CatSeq forward(const Partition& p);

/// Chain (1,3),(3,5),...,(2n-1,2n+1) on 2n+1 points.
ArcDiagram initial_diagram(int n);

/// One arc-stretching step. The arc_index-th arc (1-based, ascending left
/// endpoint) must be (p, p+2) and the next value-1 arcs must continue the
/// chain (p+2, p+4), ..., (p+2(value-1), p+2value). The chosen arc becomes
/// (p, p+2value) and each following chain arc (q, q+2) drops to (q-1, q+1).
/// Throws StructureError when the layout does not match.
ArcDiagram stretch_step(const ArcDiagram& d, int arc_index, int value);

struct TraceStep {
    int index = 0;  // step i, stretching the i-th arc
    int value = 0;  // s_{n-i+1}
    Arc before;
    Arc after;
    std::vector<std::pair<Arc, Arc>> shifted;
    ArcDiagram result;
};

/// D_1 followed by one step per sequence entry, consumed right to left.
struct ConstructionTrace {
    CatSeq sequence;
    ArcDiagram initial;
    std::vector<TraceStep> steps;

    /// D_1..D_{n+1}.
    std::vector<ArcDiagram> diagrams() const;
};

ConstructionTrace inverse_trace(const CatSeq& s);

/// Element of S_n -> special partition of [2n+1].
Partition inverse(const CatSeq& s);

/// One line per step: "<i> <s value> <arc before>-><arc after> shifted=[...] <partition>".
std::string trace_to_text(const ConstructionTrace& t);

nlohmann::json trace_to_json(const ConstructionTrace& t);

}  // namespace ncpart
