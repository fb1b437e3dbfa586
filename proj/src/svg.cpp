#include "cak/svg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "cak/error.hpp"

namespace cak {

namespace {

void check(const RenderSpec& spec) {
    if (spec.width <= 0 || spec.height <= 0 || spec.margin < 0 || 2 * spec.margin >= std::min(spec.width, spec.height))
        fail(ErrorKind::InvalidInput, "render dimensions must be positive and larger than the margins");
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

// One color per label, stable for a fixed seed.
std::vector<std::string> palette(size_t n, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> jitter(0.0, 1.0);
    const double offset = jitter(rng);
    std::vector<std::string> out;
    for (size_t i = 0; i < n; ++i) {
        const double hue = std::fmod(offset + static_cast<double>(i) * 0.618033988749895, 1.0) * 360.0;
        std::ostringstream s;
        s << "hsl(" << static_cast<int>(hue) << ",70%,45%)";
        out.push_back(s.str());
    }
    return out;
}

class Document {
public:
    explicit Document(const RenderSpec& spec) : spec_(spec) {
        out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
             << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width << "\" height=\""
             << spec.height << "\" viewBox=\"0 0 " << spec.width << " " << spec.height << "\">\n"
             << "<rect x=\"0\" y=\"0\" width=\"" << spec.width << "\" height=\"" << spec.height << "\" fill=\"white\"/>\n";
    }

    std::ostringstream& raw() { return out_; }

    void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& color, bool closed, double width = 1.5) {
        out_ << (closed ? "<polygon" : "<polyline") << " points=\"";
        for (const auto& [x, y] : pts) out_ << x << "," << y << " ";
        out_ << "\" fill=\"" << (closed ? color : "none") << "\" fill-opacity=\"" << (closed ? 0.25 : 0)
             << "\" stroke=\"" << color << "\" stroke-width=\"" << width << "\"/>\n";
    }

    void circle(double x, double y, double r, const std::string& color) {
        out_ << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << r << "\" fill=\"" << color << "\"/>\n";
    }

    void text(double x, double y, const std::string& s, const std::string& color = "black") {
        if (!spec_.show_labels) return;
        out_ << "<text x=\"" << x << "\" y=\"" << y << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << color
             << "\">" << escape(s) << "</text>\n";
    }

    std::string finish() {
        out_ << "</svg>\n";
        return out_.str();
    }

private:
    RenderSpec spec_;
    std::ostringstream out_;
};

// Affine map of a box onto the drawable area, y axis up, aspect ratio kept.
struct Frame {
    double x0, y0, scale, ox, oy;

    Frame(double xmin, double xmax, double ymin, double ymax, const RenderSpec& spec, bool keep_aspect) {
        const double w = std::max(xmax - xmin, 1e-9), h = std::max(ymax - ymin, 1e-9);
        const double aw = spec.width - 2.0 * spec.margin, ah = spec.height - 2.0 * spec.margin;
        x0 = xmin;
        y0 = ymin;
        if (keep_aspect) {
            scale = std::min(aw / w, ah / h);
            sx = sy = scale;
        } else {
            scale = 1;
            sx = aw / w;
            sy = ah / h;
        }
        ox = spec.margin + (aw - w * sx) / 2;
        oy = spec.height - spec.margin - (ah - h * sy) / 2;
    }

    std::pair<double, double> operator()(double x, double y) const { return {ox + (x - x0) * sx, oy - (y - y0) * sy}; }

    double sx = 1, sy = 1;
};

double support(const Polygon& p, double t) {
    const double c = std::cos(t), s = std::sin(t);
    double best = -INFINITY;
    for (const auto& v : p.vertices()) best = std::max(best, c * v.x.get_d() + s * v.y.get_d());
    return best;
}

}  // namespace

std::string render_arrangement(const Arrangement& arrangement, const RenderSpec& spec) {
    check(spec);
    double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
    for (const auto& [l, p] : arrangement.bodies)
        for (const auto& v : p.vertices()) {
            xmin = std::min(xmin, v.x.get_d());
            xmax = std::max(xmax, v.x.get_d());
            ymin = std::min(ymin, v.y.get_d());
            ymax = std::max(ymax, v.y.get_d());
        }
    Frame f(xmin, xmax, ymin, ymax, spec, true);
    Document doc(spec);
    const auto colors = palette(arrangement.bodies.size(), spec.color_seed);
    size_t i = 0;
    for (const auto& [l, p] : arrangement.bodies) {
        std::vector<std::pair<double, double>> pts;
        for (const auto& v : p.vertices()) pts.push_back(f(v.x.get_d(), v.y.get_d()));
        const auto& color = colors[i++];
        if (pts.size() == 1)
            doc.circle(pts[0].first, pts[0].second, 3, color);
        else
            doc.polyline(pts, color, pts.size() > 2);
        doc.text(pts[0].first + 4, pts[0].second - 4, l, color);
    }
    return doc.finish();
}

std::string render_dual(const Arrangement& arrangement, const RenderSpec& spec) {
    check(spec);
    constexpr int samples = 720;
    const double two_pi = 2 * std::numbers::pi;
    std::vector<std::vector<double>> values;
    double lo = INFINITY, hi = -INFINITY;
    for (const auto& [l, p] : arrangement.bodies) {
        std::vector<double> v;
        for (int s = 1; s <= samples; ++s) {
            const double h = support(p, two_pi * s / samples);
            v.push_back(h);
            lo = std::min(lo, h);
            hi = std::max(hi, h);
        }
        values.push_back(std::move(v));
    }
    Frame f(0, two_pi, lo, hi, spec, false);
    Document doc(spec);
    const auto colors = palette(arrangement.bodies.size(), spec.color_seed);
    size_t i = 0;
    for (const auto& [l, p] : arrangement.bodies) {
        std::vector<std::pair<double, double>> pts;
        for (int s = 1; s <= samples; ++s) pts.push_back(f(two_pi * s / samples, values[i][static_cast<size_t>(s - 1)]));
        doc.polyline(pts, colors[i], false);
        doc.text(pts.back().first - 14, pts.back().second - 4, l, colors[i]);
        ++i;
    }
    const auto config = support_configuration(arrangement);
    for (const auto& c : config.crossings) {
        const double t = c.dir.radians();
        const auto [x, y] = f(t, support(arrangement.bodies.at(c.first), t));
        doc.circle(x, y, 2.5, "black");
    }
    return doc.finish();
}

std::string render_wiring(const SwapPair& sp, const RenderSpec& spec) {
    check(spec);
    const size_t n = sp.n(), N = sp.N();
    Frame f(0, static_cast<double>(N + 1), 0, static_cast<double>(std::max<size_t>(n, 2) - 1), spec, false);
    Document doc(spec);
    const auto colors = palette(n, spec.color_seed);
    std::map<Label, size_t> color_of;
    for (size_t i = 0; i < n; ++i) color_of[sp.rho[i]] = i;
    std::map<Label, std::vector<std::pair<double, double>>> paths;
    std::vector<Label> order = sp.rho;
    for (size_t i = 0; i < n; ++i) paths[order[i]].push_back(f(0, static_cast<double>(i)));
    for (size_t t = 0; t < N; ++t) {
        const auto h = static_cast<size_t>(sp.sigma[t]);
        for (size_t i = 0; i < n; ++i) paths[order[i]].push_back(f(static_cast<double>(t) + 0.6, static_cast<double>(i)));
        std::swap(order[h - 1], order[h]);
        for (size_t i = 0; i < n; ++i) paths[order[i]].push_back(f(static_cast<double>(t) + 1.4, static_cast<double>(i)));
    }
    for (size_t i = 0; i < n; ++i) paths[order[i]].push_back(f(static_cast<double>(N + 1), static_cast<double>(i)));
    for (const auto& [l, pts] : paths) {
        doc.polyline(pts, colors[color_of[l]], false, 2);
        doc.text(pts.front().first - 14, pts.front().second + 4, l, colors[color_of[l]]);
    }
    return doc.finish();
}

}  // namespace cak
