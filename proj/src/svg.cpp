#include "diact/svg.hpp"

#include <algorithm>
#include <sstream>

#include "diact/csv.hpp"

namespace diact {

namespace {

constexpr int kCell = 28;
constexpr int kMargin = 96;

std::string escape_xml(const std::string& s) {
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

}  // namespace

std::string heatmap_svg(const Matrix& m, const std::vector<std::string>& labels,
                        const std::string& title) {
    if (!m.square()) throw std::invalid_argument("heatmap requires a square matrix");
    if (labels.size() != m.rows())
        throw std::invalid_argument("heatmap label count must match matrix size");

    const std::size_t n = m.rows();
    const double max = std::max(m.max_entry(), 0.0);
    const int width = kMargin + static_cast<int>(n) * kCell + 8;
    const int height = kMargin + static_cast<int>(n) * kCell + 8;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<metadata>" << escape_xml(title)
        << "; row-to-column convention (producer in row, consumer in column); "
           "single-hue linear ramp from white at 0 to #08519c at the matrix maximum "
        << format_number(max) << "</metadata>\n";

    for (std::size_t k = 0; k < n; ++k) {
        const int cx = kMargin + static_cast<int>(k) * kCell + kCell / 2;
        svg << "<text class=\"label\" x=\"" << cx << "\" y=\"" << kMargin - 8
            << "\" font-size=\"10\" text-anchor=\"end\" transform=\"rotate(-45 " << cx << " "
            << kMargin - 8 << ")\">" << escape_xml(labels[k]) << "</text>\n";
    }
    for (std::size_t i = 0; i < n; ++i) {
        const int cy = kMargin + static_cast<int>(i) * kCell + kCell / 2 + 4;
        svg << "<text class=\"label\" x=\"" << kMargin - 8 << "\" y=\"" << cy
            << "\" font-size=\"10\" text-anchor=\"end\">" << escape_xml(labels[i]) << "</text>\n";
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const double t = max > 0.0 ? std::clamp(m(i, k) / max, 0.0, 1.0) : 0.0;
            // white -> #08519c
            const int r = static_cast<int>(255 + t * (8 - 255));
            const int g = static_cast<int>(255 + t * (81 - 255));
            const int b = static_cast<int>(255 + t * (156 - 255));
            svg << "<rect class=\"cell\" x=\"" << kMargin + static_cast<int>(k) * kCell
                << "\" y=\"" << kMargin + static_cast<int>(i) * kCell << "\" width=\"" << kCell
                << "\" height=\"" << kCell << "\" fill=\"rgb(" << r << "," << g << "," << b
                << ")\" stroke=\"#cccccc\"><title>" << format_number(m(i, k))
                << "</title></rect>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace diact
