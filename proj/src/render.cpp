#include "vbraid/render.hpp"

#include <sstream>

#include "vbraid/numbering.hpp"

namespace vbraid {

  namespace {
    constexpr int column = 80;
    constexpr int row    = 60;
    constexpr int pad    = 30;

    int x_of(int position) {
      return column * (position - 1) + column / 2;
    }

    void line(std::ostream& os, int x1, int y1, int x2, int y2, char const* extra = "") {
      os << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
         << "\" y2=\"" << y2 << "\"" << extra << "/>\n";
    }

    void label(std::ostream& os, int x, int y, int value) {
      os << "  <text x=\"" << x << "\" y=\"" << y
         << "\" font-size=\"11\" fill=\"#b00\" stroke=\"none\">" << value
         << "</text>\n";
    }
  }  // namespace

  std::string render_svg(BraidWord const& w, RenderOptions const& opts) {
    int const width  = column * w.strands();
    int const height = row * static_cast<int>(w.size()) + 2 * pad;
    auto const numbering = integer_numbering(w);

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
       << height << "\">\n";
    os << "<g stroke=\"black\" stroke-width=\"2\" fill=\"none\">\n";

    int const bottom = height - pad;
    for (int p = 1; p <= w.strands(); ++p) {
      line(os, x_of(p), bottom, x_of(p), height);
      line(os, x_of(p), 0, x_of(p), pad);
      if (opts.numbers) {
        label(os, x_of(p) + 4, height - 4, p);
        label(os, x_of(p) + 4, 12, numbering.top_numbers[p - 1]);
      }
    }

    for (std::size_t k = 0; k < w.size(); ++k) {
      Letter const& l  = w[k];
      int const     y0 = bottom - row * static_cast<int>(k);
      int const     y1 = y0 - row;
      int const     xl = x_of(l.index);
      int const     xr = x_of(l.index + 1);

      for (int p = 1; p <= w.strands(); ++p) {
        if (p != l.index && p != l.index + 1) {
          line(os, x_of(p), y0, x_of(p), y1);
        }
      }

      if (l.is_virtual()) {
        line(os, xl, y0, xr, y1);
        line(os, xr, y0, xl, y1);
        os << "  <circle cx=\"" << (xl + xr) / 2 << "\" cy=\"" << (y0 + y1) / 2
           << "\" r=\"6\"/>\n";
        continue;
      }

      // For s_i the strand entering on the left passes over; for s_i^-1 the
      // one entering on the right does. The white halo cuts the under-strand.
      bool const left_over = l.sign > 0;
      int const  ux0 = left_over ? xr : xl, ux1 = left_over ? xl : xr;
      int const  ox0 = left_over ? xl : xr, ox1 = left_over ? xr : xl;
      line(os, ux0, y0, ux1, y1);
      line(os, ox0, y0, ox1, y1, " stroke=\"white\" stroke-width=\"10\"");
      line(os, ox0, y0, ox1, y1);

      if (opts.numbers) {
        auto const& in = *numbering.crossings[k].numbers;
        label(os, xl - 14, y0 - 4, in.lambda);
        label(os, xr + 4, y0 - 4, in.mu);
        label(os, xl - 14, y1 + 12, in.mu - 1);
        label(os, xr + 4, y1 + 12, in.lambda + 1);
      }
    }
    os << "</g>\n</svg>\n";
    return os.str();
  }

}  // namespace vbraid
