#include "strandlab/exporters.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace strandlab {

namespace {

constexpr double kSpacing = 60.0;
constexpr double kMargin = 40.0;
constexpr double kLane = 22.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

double px(int point) { return kMargin + kSpacing * point; }

// nesting depth of s: number of strands properly enclosing it
int depth_of(const Strand& s, const std::vector<Strand>& all) {
    int d = 0;
    for (const Strand& o : all)
        if (!(o == s) && o.a <= s.a && s.b <= o.b) ++d;
    return d;
}

// y offset of the arc of s near interior or endpoint p (svg y grows downward)
double side_y(double base, char sign, double magnitude) {
    return sign == '+' ? base + magnitude : base - magnitude;
}

std::string arc_path(const Strand& s, const SignVector& eps, double base, double lane) {
    std::ostringstream path;
    path << "M " << num(px(s.a)) << " " << num(base);
    // leave the left endpoint on its own side, wiggle past interior points,
    // land on the right endpoint from its side
    std::vector<std::pair<double, double>> pts;
    pts.emplace_back(px(s.a) + kSpacing * 0.25, side_y(base, eps.at(s.a), lane * 0.6));
    for (int p = s.a + 1; p < s.b; ++p)
        pts.emplace_back(px(p), side_y(base, eps.at(p), lane));
    pts.emplace_back(px(s.b) - kSpacing * 0.25, side_y(base, eps.at(s.b), lane * 0.6));
    for (auto [x, y] : pts) path << " L " << num(x) << " " << num(y);
    path << " L " << num(px(s.b)) << " " << num(base);
    return path.str();
}

std::string svg_header(double width, double height) {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
        << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
    return out.str();
}

std::string points_row(const SignVector& eps, double base) {
    std::ostringstream out;
    for (int p = 0; p <= eps.n(); ++p) {
        out << "<circle cx=\"" << num(px(p)) << "\" cy=\"" << num(base)
            << "\" r=\"3\" fill=\"black\"/>\n";
        out << "<text x=\"" << num(px(p)) << "\" y=\"" << num(base + 18.0)
            << "\" text-anchor=\"middle\" font-size=\"12\">" << p << eps.at(p) << "</text>\n";
    }
    return out.str();
}

std::string strand_arcs(const std::vector<Strand>& strands, const SignVector& eps, double base,
                        bool arrows, const std::vector<int>* labels,
                        const std::vector<bool>* reversed) {
    std::ostringstream out;
    for (std::size_t idx = 0; idx < strands.size(); ++idx) {
        const Strand& s = strands[idx];
        double lane = kLane * (1 + depth_of(s, strands));
        std::string path = arc_path(s, eps, base, lane);
        out << "<path d=\"" << path << "\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\"";
        if (arrows) {
            bool rev = reversed && (*reversed)[idx];
            out << " marker-" << (rev ? "start" : "end") << "=\"url(#arrow"
                << (rev ? "-rev" : "") << ")\"";
        }
        out << "/>\n";
        if (labels) {
            double mid = (px(s.a) + px(s.b)) / 2.0;
            double y = side_y(base, eps.at(std::min(s.a + 1, s.b)), lane + 6.0);
            if (s.b == s.a + 1) y = side_y(base, eps.at(s.a), lane + 6.0);
            out << "<text x=\"" << num(mid) << "\" y=\"" << num(y)
                << "\" text-anchor=\"middle\" font-size=\"11\" fill=\"firebrick\">"
                << (*labels)[idx] << "</text>\n";
        }
    }
    return out.str();
}

std::string arrow_defs() {
    return "<defs>"
           "<marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" "
           "markerHeight=\"6\" orient=\"auto-start-reverse\">"
           "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"steelblue\"/></marker>"
           "<marker id=\"arrow-rev\" viewBox=\"0 0 10 10\" refX=\"1\" refY=\"5\" markerWidth=\"6\" "
           "markerHeight=\"6\" orient=\"auto\">"
           "<path d=\"M 10 0 L 0 5 L 10 10 z\" fill=\"steelblue\"/></marker>"
           "</defs>\n";
}

std::string svg_of_strands(const std::vector<Strand>& strands, const SignVector& eps, bool arrows,
                           const std::vector<int>* labels, const std::vector<bool>* reversed) {
    int maxdepth = 0;
    for (const Strand& s : strands) maxdepth = std::max(maxdepth, depth_of(s, strands));
    double band = kLane * (maxdepth + 2);
    double base = kMargin + band;
    double width = 2 * kMargin + kSpacing * eps.n();
    double height = 2 * base + kMargin;
    std::ostringstream out;
    out << svg_header(width, height);
    if (arrows) out << arrow_defs();
    out << points_row(eps, base);
    out << strand_arcs(strands, eps, base, arrows, labels, reversed);
    out << "</svg>\n";
    return out.str();
}

} // namespace

std::string svg_of_diagram(const Diagram& d) {
    return svg_of_strands(d.strands, d.eps, false, nullptr, nullptr);
}

std::string svg_of_labeled(const LabeledDiagram& ld) {
    std::vector<Strand> ss;
    std::vector<int> labels;
    for (const LabeledStrand& s : ld.strands) {
        ss.push_back(s.s);
        labels.push_back(s.label);
    }
    return svg_of_strands(ss, ld.eps, false, &labels, nullptr);
}

std::string svg_of_oriented(const OrientedDiagram& od) {
    std::vector<Strand> ss;
    std::vector<bool> reversed;
    for (const OrientedStrand& s : od.strands) {
        ss.push_back(s.underlying());
        reversed.push_back(s.from > s.to);
    }
    return svg_of_strands(ss, od.eps, true, nullptr, &reversed);
}

std::string svg_of_mct(const MixedCobinaryTree& t) {
    Rational lo = t.heights.front(), hi = t.heights.front();
    for (const Rational& h : t.heights) {
        if (h < lo) lo = h;
        if (hi < h) hi = h;
    }
    auto yd = [&](const Rational& h) {
        double v = static_cast<double>(h.num()) / static_cast<double>(h.den());
        return v;
    };
    double span = std::max(1.0, yd(hi) - yd(lo));
    double height = 2 * kMargin + 40.0 * span;
    double width = 2 * kMargin + kSpacing * t.eps.n();
    auto ypix = [&](const Rational& h) { return height - kMargin - 40.0 * (yd(h) - yd(lo)); };
    std::ostringstream out;
    out << svg_header(width, height + 24.0);
    for (auto [a, b] : t.edges)
        out << "<line x1=\"" << num(px(a)) << "\" y1=\""
            << num(ypix(t.heights[static_cast<std::size_t>(a)])) << "\" x2=\"" << num(px(b))
            << "\" y2=\"" << num(ypix(t.heights[static_cast<std::size_t>(b)]))
            << "\" stroke=\"steelblue\" stroke-width=\"1.5\"/>\n";
    for (int p = 0; p <= t.eps.n(); ++p) {
        out << "<circle cx=\"" << num(px(p)) << "\" cy=\""
            << num(ypix(t.heights[static_cast<std::size_t>(p)]))
            << "\" r=\"3\" fill=\"black\"/>\n";
        out << "<text x=\"" << num(px(p)) << "\" y=\"" << num(height + 12.0)
            << "\" text-anchor=\"middle\" font-size=\"12\">" << p << t.eps.at(p) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

namespace {

std::string strand_name(const Strand& s) {
    return "c(" + std::to_string(s.a) + "," + std::to_string(s.b) + ")";
}

} // namespace

std::string dot_of_poset(const DiagramPoset& p) {
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n";
    for (const Strand& s : p.elements)
        out << "  \"" << strand_name(s) << "\";\n";
    for (auto [lo, hi] : p.order.covers())
        out << "  \"" << strand_name(p.elements[static_cast<std::size_t>(lo)]) << "\" -> \""
            << strand_name(p.elements[static_cast<std::size_t>(hi)]) << "\";\n";
    out << "}\n";
    return out.str();
}

std::string dot_of_exchange_graph(const ExchangeGraph& g) {
    std::ostringstream out;
    out << "graph exchange {\n";
    for (std::size_t idx = 0; idx < g.states.size(); ++idx) {
        CMatrix c = c_matrix(g.states[idx]);
        out << "  s" << idx << " [label=\"";
        for (std::size_t r = 0; r < c.size(); ++r) {
            if (r) out << "\\n";
            for (std::size_t cc = 0; cc < c[r].size(); ++cc) {
                if (cc) out << " ";
                out << c[r][cc];
            }
        }
        out << "\"];\n";
    }
    for (auto [a, b] : g.edges) out << "  s" << a << " -- s" << b << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace strandlab
