#include "ncpart/bijection.hpp"

#include <algorithm>

#include "ncpart/error.hpp"

namespace ncpart {

namespace {

std::string arc_text(const Arc& a) {
    return "(" + std::to_string(a.left) + "," + std::to_string(a.right) + ")";
}

nlohmann::json arc_json(const Arc& a) { return nlohmann::json::array({a.left, a.right}); }

}  // namespace

DiffSeq difference_sequence(const Partition& p) {
    if (auto why = special_violation(p)) {
        throw ValidationError("partition " + p.to_string() + " is not special (" + *why + ")");
    }
    DiffSeq d;
    d.diffs.assign(static_cast<std::size_t>(p.ground_size()), 0);
    for (const Block& b : p.blocks()) {
        for (std::size_t k = 0; k + 1 < b.size(); ++k) d.diffs[b[k] - 1] = b[k + 1] - b[k];
    }
    return d;
}

CatSeq forward(const Partition& p) {
    const DiffSeq d = difference_sequence(p);
    std::vector<int> a;
    for (int x : d.diffs) {
        if (x != 0) a.push_back(x / 2);
    }
    std::reverse(a.begin(), a.end());
    return CatSeq(std::move(a));
}

ArcDiagram initial_diagram(int n) {
    if (n < 0) throw ValidationError("n must be non-negative");
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) arcs.push_back({2 * k + 1, 2 * k + 3});
    return ArcDiagram(2 * n + 1, std::move(arcs));
}

namespace {

// Applies the step and records what moved; `step` may be null.
ArcDiagram stretch_impl(const ArcDiagram& d, int arc_index, int value, TraceStep* step) {
    std::vector<Arc> arcs = d.arcs();
    const auto count = static_cast<int>(arcs.size());
    if (value < 1) throw StructureError("stretch length must be at least 1");
    if (arc_index < 1 || arc_index > count) {
        throw StructureError("no arc number " + std::to_string(arc_index));
    }
    const Arc chosen = arcs[arc_index - 1];
    if (chosen.span() != 2) {
        throw StructureError("arc " + arc_text(chosen) + " has already been stretched");
    }
    if (arc_index - 1 + value > count) {
        throw StructureError("stretching " + arc_text(chosen) + " by " + std::to_string(value) +
                             " runs past the last arc");
    }
    const int p = chosen.left;
    for (int k = 1; k < value; ++k) {
        const Arc expected{p + 2 * k, p + 2 * k + 2};
        if (arcs[arc_index - 1 + k] != expected) {
            throw StructureError("stretching " + arc_text(chosen) + " by " + std::to_string(value) +
                                 " needs " + arc_text(expected) + " but found " +
                                 arc_text(arcs[arc_index - 1 + k]));
        }
    }
    arcs[arc_index - 1] = {p, p + 2 * value};
    if (step) {
        step->before = chosen;
        step->after = arcs[arc_index - 1];
        step->shifted.clear();
    }
    for (int k = 1; k < value; ++k) {
        Arc& a = arcs[arc_index - 1 + k];
        const Arc moved{a.left - 1, a.right - 1};
        if (step) step->shifted.emplace_back(a, moved);
        a = moved;
    }
    return ArcDiagram(d.point_count(), std::move(arcs));
}

}  // namespace

ArcDiagram stretch_step(const ArcDiagram& d, int arc_index, int value) {
    return stretch_impl(d, arc_index, value, nullptr);
}

std::vector<ArcDiagram> ConstructionTrace::diagrams() const {
    std::vector<ArcDiagram> out{initial};
    for (const TraceStep& s : steps) out.push_back(s.result);
    return out;
}

ConstructionTrace inverse_trace(const CatSeq& s) {
    const int n = static_cast<int>(s.size());
    ConstructionTrace trace{s, initial_diagram(n), {}};
    ArcDiagram current = trace.initial;
    for (int i = 1; i <= n; ++i) {
        TraceStep step{i, s.at(static_cast<std::size_t>(n - i + 1)), {}, {}, {}, current};
        step.result = stretch_impl(current, i, step.value, &step);
        current = step.result;
        trace.steps.push_back(std::move(step));
    }
    return trace;
}

Partition inverse(const CatSeq& s) {
    const int n = static_cast<int>(s.size());
    ArcDiagram current = initial_diagram(n);
    for (int i = 1; i <= n; ++i) {
        current = stretch_step(current, i, s.at(static_cast<std::size_t>(n - i + 1)));
    }
    return from_arcs(current);
}

std::string trace_to_text(const ConstructionTrace& t) {
    std::string out = "0 - - shifted=[] " + from_arcs(t.initial).to_string() + "\n";
    for (const TraceStep& s : t.steps) {
        out += std::to_string(s.index) + " " + std::to_string(s.value) + " " + arc_text(s.before) +
               "->" + arc_text(s.after) + " shifted=[";
        for (std::size_t k = 0; k < s.shifted.size(); ++k) {
            if (k) out += ",";
            out += arc_text(s.shifted[k].first) + "->" + arc_text(s.shifted[k].second);
        }
        out += "] " + from_arcs(s.result).to_string() + "\n";
    }
    return out;
}

nlohmann::json trace_to_json(const ConstructionTrace& t) {
    nlohmann::json steps = nlohmann::json::array();
    steps.push_back({{"step", 0}, {"partition", from_arcs(t.initial).to_string()}});
    for (const TraceStep& s : t.steps) {
        nlohmann::json shifted = nlohmann::json::array();
        for (const auto& [from, to] : s.shifted) {
            shifted.push_back({{"from", arc_json(from)}, {"to", arc_json(to)}});
        }
        steps.push_back({{"step", s.index},
                         {"value", s.value},
                         {"arc_before", arc_json(s.before)},
                         {"arc_after", arc_json(s.after)},
                         {"shifted", shifted},
                         {"partition", from_arcs(s.result).to_string()}});
    }
    return steps;
}

}  // namespace ncpart
