#include "ncpart/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace ncpart {

namespace {

std::vector<int> arc_rows(const ArcDiagram& d) {
    const auto& arcs = d.arcs();
    std::vector<std::size_t> order(arcs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return arcs[a].span() < arcs[b].span();
    });
    std::vector<int> row(arcs.size(), 0);
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
        const Arc& a = arcs[order[oi]];
        int r = 1;
        for (std::size_t ob = 0; ob < oi; ++ob) {
            const Arc& b = arcs[order[ob]];
            if (b.span() == a.span()) continue;
            const bool inside = a.left <= b.left && b.right <= a.right;
            const bool touching = b.right == a.left || b.left == a.right;
            if (inside || touching) r = std::max(r, row[order[ob]] + 1);
        }
        row[order[oi]] = r;
    }
    return row;
}

std::string num(double v) {
    char buf[32];
    if (v == static_cast<double>(static_cast<long long>(v))) {
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
        return buf;
    }
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s;
}

struct Layout {
    double width = 0;
    double height = 0;
    double baseline = 0;
};

constexpr double kLabelBand = 18.0;
constexpr double kCaptionBand = 20.0;

Layout layout_for(const ArcDiagram& d, const RenderSpec& spec) {
    int widest = 0;
    for (const Arc& a : d.arcs()) widest = std::max(widest, a.span());
    const double radius = widest * spec.spacing / 2.0;
    Layout l;
    l.width = 2 * spec.margin + (d.point_count() - 1) * spec.spacing;
    l.baseline = spec.margin + radius;
    l.height = l.baseline + spec.margin + (spec.labels ? kLabelBand : 0.0);
    return l;
}

void write_body(std::ostringstream& out, const ArcDiagram& d, const RenderSpec& spec,
                const Layout& l) {
    auto x_of = [&](int k) { return spec.margin + (k - 1) * spec.spacing; };
    const std::string y = num(l.baseline);
    out << "<line x1=\"" << num(x_of(1)) << "\" y1=\"" << y << "\" x2=\""
        << num(x_of(d.point_count())) << "\" y2=\"" << y
        << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    for (const Arc& a : d.arcs()) {
        const std::string r = num(a.span() * spec.spacing / 2.0);
        out << "<path d=\"M " << num(x_of(a.left)) << ' ' << y << " A " << r << ' ' << r
            << " 0 0 1 " << num(x_of(a.right)) << ' ' << y
            << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
    for (int k = 1; k <= d.point_count(); ++k) {
        out << "<circle cx=\"" << num(x_of(k)) << "\" cy=\"" << y
            << "\" r=\"3\" fill=\"black\"/>\n";
    }
    if (spec.labels) {
        const std::string ty = num(l.baseline + 16);
        for (int k = 1; k <= d.point_count(); ++k) {
            out << "<text x=\"" << num(x_of(k)) << "\" y=\"" << ty
                << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << k
                << "</text>\n";
        }
    }
}

void check_spec(const RenderSpec& spec) {
    if (!(spec.spacing > 0)) throw std::invalid_argument("point spacing must be positive");
    if (spec.margin < 0) throw std::invalid_argument("margin must be non-negative");
}

}  // namespace

int ascii_row_count(const ArcDiagram& d) {
    const auto rows = arc_rows(d);
    return rows.empty() ? 0 : *std::max_element(rows.begin(), rows.end());
}

std::string render_ascii(const ArcDiagram& d) {
    const int m = d.point_count();
    const auto cell = static_cast<int>(std::to_string(m).size()) + 1;
    auto col = [&](int k) { return static_cast<std::size_t>((k - 1) * cell); };
    const auto rows = arc_rows(d);
    const int height = ascii_row_count(d);
    std::vector<std::string> grid(static_cast<std::size_t>(height),
                                  std::string(col(m) + 1, ' '));
    const auto& arcs = d.arcs();
    // Legs first so corners drawn later win at shared endpoints.
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        for (int line = height - rows[i] + 1; line < height; ++line) {
            for (int end : {arcs[i].left, arcs[i].right}) {
                char& c = grid[line][col(end)];
                if (c == ' ') c = '|';
            }
        }
    }
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        std::string& line = grid[height - rows[i]];
        for (std::size_t c = col(arcs[i].left) + 1; c < col(arcs[i].right); ++c) line[c] = '-';
        line[col(arcs[i].left)] = '+';
        line[col(arcs[i].right)] = '+';
    }
    std::string out;
    for (std::string& line : grid) {
        line.erase(line.find_last_not_of(' ') + 1);
        out += line + "\n";
    }
    std::string base(col(m) + std::to_string(m).size(), ' ');
    for (int k = 1; k <= m; ++k) {
        const std::string label = std::to_string(k);
        base.replace(col(k), label.size(), label);
    }
    base.erase(base.find_last_not_of(' ') + 1);
    return out + base + "\n";
}

std::string render_svg(const ArcDiagram& d, const RenderSpec& spec) {
    check_spec(spec);
    const Layout l = layout_for(d, spec);
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(l.width)
        << "\" height=\"" << num(l.height) << "\" viewBox=\"0 0 " << num(l.width) << ' '
        << num(l.height) << "\">\n";
    write_body(out, d, spec, l);
    out << "</svg>\n";
    return out.str();
}

std::string render_trace(const ConstructionTrace& t, const RenderSpec& spec) {
    check_spec(spec);
    const auto diagrams = t.diagrams();
    const auto n = static_cast<int>(t.sequence.size());
    struct Panel {
        std::size_t first;
        std::size_t last;
    };
    std::vector<Panel> panels;
    for (std::size_t k = 0; k < diagrams.size(); ++k) {
        if (!panels.empty() && diagrams[k] == diagrams[panels.back().first]) {
            panels.back().last = k;
        } else {
            panels.push_back({k, k});
        }
    }
    // All diagrams share the point count; size every panel like the widest.
    Layout frame;
    for (const ArcDiagram& d : diagrams) {
        const Layout l = layout_for(d, spec);
        frame.width = std::max(frame.width, l.width);
        if (l.height > frame.height) frame = Layout{frame.width, l.height, l.baseline};
    }
    const double panel_height = kCaptionBand + frame.height;
    const double total = panel_height * static_cast<double>(panels.size());

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(frame.width)
        << "\" height=\"" << num(total) << "\" viewBox=\"0 0 " << num(frame.width) << ' '
        << num(total) << "\">\n";
    for (std::size_t pi = 0; pi < panels.size(); ++pi) {
        const Panel& p = panels[pi];
        const double top = panel_height * static_cast<double>(pi);
        std::string caption = "D" + std::to_string(p.first + 1);
        if (p.last != p.first) caption += " = ... = D" + std::to_string(p.last + 1);
        if (p.first > 0) {
            const TraceStep& s = t.steps[p.first - 1];
            caption += ": step " + std::to_string(s.index) + ", s" +
                       std::to_string(n - s.index + 1) + " = " + std::to_string(s.value);
        } else {
            caption += ": initial chain";
        }
        out << "<text x=\"" << num(spec.margin) << "\" y=\"" << num(top + 14)
            << "\" font-family=\"sans-serif\" font-size=\"13\">" << caption << "</text>\n";
        out << "<svg x=\"0\" y=\"" << num(top + kCaptionBand) << "\" width=\"" << num(frame.width)
            << "\" height=\"" << num(frame.height) << "\">\n";
        write_body(out, diagrams[p.first], spec, frame);
        out << "</svg>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace ncpart
