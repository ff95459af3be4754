// include/vsm/heatmap.h

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

#ifndef VSM_HEATMAP_H_
#define VSM_HEATMAP_H_

#include <cstdint>
#include <string>
#include <vector>

#include "vsm/similarity.h"

namespace vsm {

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  bool operator==(const Rgb &) const = default;
};

// Two-stop colormap: S = 0 is (255, 247, 0), S = 1 is (209, 20, 20), each
// channel interpolated linearly and rounded half up.
inline constexpr Rgb kColorLow{255, 247, 0};
inline constexpr Rgb kColorHigh{209, 20, 20};

// Throws OutOfRange unless 0 <= s <= 1.
Rgb ColorOf(double s);

struct CompositeLayout {
  int cell_size = 8;     // pixels per matrix cell, >= 1
  int label_margin = 0;  // PPM only: left/bottom strip for the O/P labels
};

/// Packed 8-bit RGB raster, rows top to bottom.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  Image() = default;
  Image(int w, int h, Rgb fill);
  Rgb at(int x, int y) const;
  void set(int x, int y, Rgb c);
};

/**
   Composite 2N x 2N view.  Quadrants: M_OO top-left, M_OP top-right, the
   transpose of M_OP bottom-left and M_PP bottom-right; row i / column j of
   a quadrant is cell (i, j) of its matrix.  A one-pixel black line
   separates the halves in both directions, so the raster is
   (2 N cell_size + 1) pixels square, plus `label_margin` on the left and
   bottom when requested.
*/
Image RasterizeComposite(const SimilarityMatrix &oo, const SimilarityMatrix &op,
                         const SimilarityMatrix &pp,
                         const CompositeLayout &layout);

// Single N x N matrix, no separators or margins.
Image RasterizeSingle(const SimilarityMatrix &m, const CompositeLayout &layout);

// Binary PPM: "P6\n<w> <h>\n255\n" followed by the raw pixels.
std::string EncodePpm(const Image &image);

enum class ImageFormat { kPpm, kSvg };

std::string RenderComposite(const SimilarityMatrix &oo,
                            const SimilarityMatrix &op,
                            const SimilarityMatrix &pp,
                            const CompositeLayout &layout, ImageFormat format);
std::string RenderSingle(const SimilarityMatrix &m,
                         const CompositeLayout &layout, ImageFormat format);

}  // namespace vsm

#endif  // VSM_HEATMAP_H_
