#include "gridsub/svg.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gridsub {

namespace {

constexpr int kUnit = 80;
constexpr int kMargin = 40;

class Canvas {
public:
    explicit Canvas(const PointConfiguration& cfg) {
        for (const auto& p : cfg.points()) {
            max_x_ = std::max(max_x_, p.x);
            max_y_ = std::max(max_y_, p.y);
        }
    }

    std::int64_t sx(const LatticePoint& p) const { return kMargin + p.x * kUnit; }
    std::int64_t sy(const LatticePoint& p) const { return kMargin + (max_y_ - p.y) * kUnit; }

    void line(const Edge& e, const char* cls) {
        body_ << "  <line class=\"" << cls << "\" x1=\"" << sx(e.a()) << "\" y1=\"" << sy(e.a()) << "\" x2=\""
              << sx(e.b()) << "\" y2=\"" << sy(e.b()) << "\"/>\n";
    }

    void point(const LatticePoint& p) {
        body_ << "  <circle cx=\"" << sx(p) << "\" cy=\"" << sy(p) << "\" r=\"5\"/>\n";
    }

    std::string finish(const std::string& title) const {
        const auto w = 2 * kMargin + max_x_ * kUnit;
        const auto h = 2 * kMargin + max_y_ * kUnit;
        std::ostringstream os;
        os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 "
           << w << ' ' << h << "\">\n"
           << "  <title>" << title << "</title>\n"
           << "  <style>line{stroke:#222;stroke-width:3;stroke-linecap:round}"
              "line.hull{stroke:#000;stroke-width:4}line.negative{stroke:#d62728}circle{fill:#1f77b4}</style>\n"
           << body_.str() << "</svg>\n";
        return os.str();
    }

private:
    std::int64_t max_x_ = 0;
    std::int64_t max_y_ = 0;
    std::ostringstream body_;
};

const char* edge_class(const Edge& e, const char* normal) { return is_bimonotone(e) ? normal : "negative"; }

}  // namespace

std::string render_svg(const Subdivision& s) {
    Canvas c(s.cfg);
    const auto hull = s.cfg.hull_corners();
    const std::size_t sides = hull.size() == 2 ? 1 : (hull.size() > 2 ? hull.size() : 0);
    for (std::size_t i = 0; i < sides; ++i) {
        const Edge side(hull[i], hull[(i + 1) % hull.size()]);
        c.line(side, edge_class(side, "hull"));
    }
    for (const auto& e : s.edges) c.line(e, edge_class(e, "internal"));
    for (const auto& p : s.cfg.points()) c.point(p);
    return c.finish("subdivision of " + s.cfg.descriptor());
}

std::string render_svg(const Triangulation& t) {
    Canvas c(t.cfg());
    for (const auto& e : t.edges())
        c.line(e, t.cfg().on_hull_boundary(e.a(), e.b()) ? "hull" : edge_class(e, "internal"));
    for (const auto& p : t.cfg().points()) c.point(p);
    return c.finish("triangulation of " + t.cfg().descriptor());
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << content;
    out.close();
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace gridsub
