// src/heatmap.cc

// Copyright 2026  The vsm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "vsm/heatmap.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

#include "vsm/error.h"
#include "vsm/text.h"

namespace vsm {

namespace {

constexpr Rgb kBlack{0, 0, 0};
constexpr Rgb kWhite{255, 255, 255};

// 5x7 glyphs, one byte per row, bit 4 is the leftmost column.
constexpr std::array<std::uint8_t, 7> kGlyphO = {0x0E, 0x11, 0x11, 0x11,
                                                 0x11, 0x11, 0x0E};
constexpr std::array<std::uint8_t, 7> kGlyphP = {0x1E, 0x11, 0x11, 0x1E,
                                                 0x10, 0x10, 0x10};

std::uint8_t Channel(std::uint8_t low, std::uint8_t high, double s) {
  double v = low + s * (static_cast<double>(high) - static_cast<double>(low));
  return static_cast<std::uint8_t>(std::floor(v + 0.5));
}

void CheckLayout(const CompositeLayout &layout) {
  if (layout.cell_size < 1 || layout.label_margin < 0)
    throw Error(ErrorCode::kInvalidConfig,
                "cell size must be >= 1 and label margin >= 0");
}

void CheckShared(const SimilarityMatrix &oo, const SimilarityMatrix &op,
                 const SimilarityMatrix &pp) {
  if (oo.speakers() != op.speakers() || oo.speakers() != pp.speakers())
    throw Error(ErrorCode::kSpeakerOrderMismatch,
                "the three matrices do not share one speaker order");
  if (oo.n() == 0)
    throw Error(ErrorCode::kTooFewSpeakers, "cannot render an empty matrix");
}

void FillCell(Image &img, int x0, int y0, int size, Rgb c) {
  for (int y = y0; y < y0 + size; ++y)
    for (int x = x0; x < x0 + size; ++x) img.set(x, y, c);
}

// Draws `glyph` with its center at (cx, cy), clipped to the image.
void DrawGlyph(Image &img, const std::array<std::uint8_t, 7> &glyph, int cx,
               int cy, int scale) {
  int x0 = cx - (5 * scale) / 2, y0 = cy - (7 * scale) / 2;
  for (int row = 0; row < 7; ++row)
    for (int col = 0; col < 5; ++col) {
      if (!(glyph[row] & (0x10 >> col))) continue;
      for (int dy = 0; dy < scale; ++dy)
        for (int dx = 0; dx < scale; ++dx) {
          int x = x0 + col * scale + dx, y = y0 + row * scale + dy;
          if (x >= 0 && y >= 0 && x < img.width && y < img.height)
            img.set(x, y, kBlack);
        }
    }
}

std::string Hex(Rgb c) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", c.r, c.g, c.b);
  return buf;
}

// Minimal SVG writer over integer coordinates.
class Svg {
 public:
  Svg(int width, int height) {
    out_ = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(height) +
           "\" viewBox=\"0 0 " + std::to_string(width) + " " +
           std::to_string(height) + "\" shape-rendering=\"crispEdges\">\n";
    Rect(0, 0, width, height, "#ffffff");
  }
  void Rect(int x, int y, int w, int h, const std::string &fill) {
    out_ += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
            "\" width=\"" + std::to_string(w) + "\" height=\"" +
            std::to_string(h) + "\" fill=\"" + fill + "\"/>\n";
  }
  void Line(int x1, int y1, int x2, int y2) {
    out_ += "<line x1=\"" + std::to_string(x1) + "\" y1=\"" +
            std::to_string(y1) + "\" x2=\"" + std::to_string(x2) +
            "\" y2=\"" + std::to_string(y2) +
            "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  }
  void Text(int x, int y, const std::string &anchor, int size,
            const std::string &text) {
    out_ += "<text x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
            "\" font-family=\"sans-serif\" font-size=\"" +
            std::to_string(size) + "\" text-anchor=\"" + anchor + "\">" +
            text + "</text>\n";
  }
  void Raw(const std::string &s) { out_ += s; }
  std::string Finish() { return out_ + "</svg>\n"; }

 private:
  std::string out_;
};

constexpr int kSvgLeft = 48, kSvgTop = 12, kSvgBottom = 44, kSvgBar = 96;

// Vertical colorbar to the right of a plot `plot_h` pixels tall.
void SvgColorbar(Svg &svg, int x, int y, int plot_h) {
  svg.Raw(
      "<defs><linearGradient id=\"vsm-cmap\" x1=\"0\" y1=\"1\" x2=\"0\" "
      "y2=\"0\"><stop offset=\"0\" stop-color=\"" +
      Hex(kColorLow) + "\"/><stop offset=\"1\" stop-color=\"" + Hex(kColorHigh) +
      "\"/></linearGradient></defs>\n");
  constexpr int kWidth = 14;
  svg.Raw("<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
          "\" width=\"" + std::to_string(kWidth) + "\" height=\"" +
          std::to_string(plot_h) +
          "\" fill=\"url(#vsm-cmap)\" stroke=\"#000000\"/>\n");
  for (int k = 0; k <= 5; ++k) {
    int ty = y + plot_h - (plot_h * k) / 5;
    svg.Line(x + kWidth, ty, x + kWidth + 4, ty);
    svg.Text(x + kWidth + 6, ty + 4, "start", 10,
             FormatFixed(static_cast<double>(k) / 5.0, 1));
  }
  svg.Text(x + kWidth / 2, y + plot_h + 16, "middle", 11, "S(i,j)");
}

// Speaker index ticks 1..n along one half-axis, thinned to about ten.
template <typename Fn>
void ForEachTick(std::size_t n, Fn fn) {
  std::size_t step = (n + 9) / 10;
  for (std::size_t i = 0; i < n; i += step) fn(i);
  if ((n - 1) % step != 0) fn(n - 1);
}

}  // namespace

Rgb ColorOf(double s) {
  if (!(s >= 0.0 && s <= 1.0))
    throw Error(ErrorCode::kOutOfRange,
                "similarity " + FormatShortest(s) + " is outside [0, 1]");
  return {Channel(kColorLow.r, kColorHigh.r, s),
          Channel(kColorLow.g, kColorHigh.g, s),
          Channel(kColorLow.b, kColorHigh.b, s)};
}

Image::Image(int w, int h, Rgb fill)
    : width(w), height(h), pixels(static_cast<std::size_t>(w) * h * 3) {
  for (std::size_t p = 0; p < pixels.size(); p += 3) {
    pixels[p] = fill.r;
    pixels[p + 1] = fill.g;
    pixels[p + 2] = fill.b;
  }
}

Rgb Image::at(int x, int y) const {
  std::size_t p = (static_cast<std::size_t>(y) * width + x) * 3;
  return {pixels[p], pixels[p + 1], pixels[p + 2]};
}

void Image::set(int x, int y, Rgb c) {
  std::size_t p = (static_cast<std::size_t>(y) * width + x) * 3;
  pixels[p] = c.r;
  pixels[p + 1] = c.g;
  pixels[p + 2] = c.b;
}

Image RasterizeComposite(const SimilarityMatrix &oo, const SimilarityMatrix &op,
                         const SimilarityMatrix &pp,
                         const CompositeLayout &layout) {
  CheckLayout(layout);
  CheckShared(oo, op, pp);
  const int n = static_cast<int>(oo.n());
  const int cs = layout.cell_size;
  const int half = n * cs;
  const int core = 2 * half + 1;
  const int margin = layout.label_margin;

  Image img(core + margin, core + margin, kWhite);
  // Core occupies x in [margin, margin + core), y in [0, core).
  auto origin = [&](int half_index, int cell) {
    return half_index * (half + 1) + cell * cs;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      FillCell(img, margin + origin(0, j), origin(0, i), cs, ColorOf(oo.at(i, j)));
      FillCell(img, margin + origin(1, j), origin(0, i), cs, ColorOf(op.at(i, j)));
      FillCell(img, margin + origin(0, j), origin(1, i), cs, ColorOf(op.at(j, i)));
      FillCell(img, margin + origin(1, j), origin(1, i), cs, ColorOf(pp.at(i, j)));
    }
  for (int k = 0; k < core; ++k) {
    img.set(margin + half, k, kBlack);
    img.set(margin + k, half, kBlack);
  }

  if (margin > 0) {
    int scale = std::max(1, margin / 9);
    int mid0 = half / 2, mid1 = half + 1 + half / 2;
    DrawGlyph(img, kGlyphO, margin / 2, mid0, scale);
    DrawGlyph(img, kGlyphP, margin / 2, mid1, scale);
    DrawGlyph(img, kGlyphO, margin + mid0, core + margin / 2, scale);
    DrawGlyph(img, kGlyphP, margin + mid1, core + margin / 2, scale);
  }
  return img;
}

Image RasterizeSingle(const SimilarityMatrix &m, const CompositeLayout &layout) {
  CheckLayout(layout);
  if (m.n() == 0)
    throw Error(ErrorCode::kTooFewSpeakers, "cannot render an empty matrix");
  const int n = static_cast<int>(m.n());
  const int cs = layout.cell_size;
  Image img(n * cs, n * cs, kWhite);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) FillCell(img, j * cs, i * cs, cs, ColorOf(m.at(i, j)));
  return img;
}

std::string EncodePpm(const Image &image) {
  std::string out = "P6\n" + std::to_string(image.width) + " " +
                    std::to_string(image.height) + "\n255\n";
  out.append(reinterpret_cast<const char *>(image.pixels.data()),
             image.pixels.size());
  return out;
}

std::string RenderComposite(const SimilarityMatrix &oo,
                            const SimilarityMatrix &op,
                            const SimilarityMatrix &pp,
                            const CompositeLayout &layout, ImageFormat format) {
  if (format == ImageFormat::kPpm)
    return EncodePpm(RasterizeComposite(oo, op, pp, layout));

  CheckLayout(layout);
  CheckShared(oo, op, pp);
  const int n = static_cast<int>(oo.n());
  const int cs = layout.cell_size;
  const int half = n * cs;
  const int core = 2 * half + 1;
  Svg svg(kSvgLeft + core + kSvgBar, kSvgTop + core + kSvgBottom);
  auto origin = [&](int half_index, int cell) {
    return half_index * (half + 1) + cell * cs;
  };
  const SimilarityMatrix *quadrant[2][2] = {{&oo, &op}, {&op, &pp}};
  for (int qr = 0; qr < 2; ++qr)
    for (int qc = 0; qc < 2; ++qc)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          bool transpose = qr == 1 && qc == 0;
          double s = transpose ? quadrant[qr][qc]->at(j, i)
                               : quadrant[qr][qc]->at(i, j);
          svg.Rect(kSvgLeft + origin(qc, j), kSvgTop + origin(qr, i), cs, cs,
                   Hex(ColorOf(s)));
        }
  svg.Line(kSvgLeft + half, kSvgTop, kSvgLeft + half, kSvgTop + core);
  svg.Line(kSvgLeft, kSvgTop + half, kSvgLeft + core, kSvgTop + half);

  for (int h = 0; h < 2; ++h) {
    ForEachTick(oo.n(), [&](std::size_t i) {
      int c = origin(h, static_cast<int>(i)) + cs / 2;
      svg.Text(kSvgLeft + c, kSvgTop + core + 12, "middle", 9,
               std::to_string(i + 1));
      svg.Text(kSvgLeft - 4, kSvgTop + c + 3, "end", 9, std::to_string(i + 1));
    });
    const char *name = h == 0 ? "O" : "P";
    int mid = origin(h, 0) + half / 2;
    svg.Text(kSvgLeft + mid, kSvgTop + core + 32, "middle", 14, name);
    svg.Text(14, kSvgTop + mid + 5, "middle", 14, name);
  }
  SvgColorbar(svg, kSvgLeft + core + 20, kSvgTop, core);
  return svg.Finish();
}

std::string RenderSingle(const SimilarityMatrix &m,
                         const CompositeLayout &layout, ImageFormat format) {
  if (format == ImageFormat::kPpm) return EncodePpm(RasterizeSingle(m, layout));

  CheckLayout(layout);
  if (m.n() == 0)
    throw Error(ErrorCode::kTooFewSpeakers, "cannot render an empty matrix");
  const int n = static_cast<int>(m.n());
  const int cs = layout.cell_size;
  const int side = n * cs;
  Svg svg(kSvgLeft + side + kSvgBar, kSvgTop + side + kSvgBottom);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      svg.Rect(kSvgLeft + j * cs, kSvgTop + i * cs, cs, cs, Hex(ColorOf(m.at(i, j))));
  ForEachTick(m.n(), [&](std::size_t i) {
    int c = static_cast<int>(i) * cs + cs / 2;
    svg.Text(kSvgLeft + c, kSvgTop + side + 12, "middle", 9, std::to_string(i + 1));
    svg.Text(kSvgLeft - 4, kSvgTop + c + 3, "end", 9, std::to_string(i + 1));
  });
  svg.Text(kSvgLeft + side / 2, kSvgTop + side + 32, "middle", 14,
           "M_" + std::string(KindName(m.kind())));
  SvgColorbar(svg, kSvgLeft + side + 20, kSvgTop, side);
  return svg.Finish();
}

}  // namespace vsm
