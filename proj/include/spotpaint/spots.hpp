#ifndef SPOTPAINT_SPOTS_HPP
#define SPOTPAINT_SPOTS_HPP

#include <vector>

#include "spotpaint/raster.hpp"
#include "spotpaint/sampler.hpp"

namespace spotpaint {

/// Sizing parameters for contrast-driven rectangular spots. lambda is both
/// the probe distance used to measure local contrast and the side of the
/// neutral (low contrast) spot; lambda_small and lambda_big are the sides
/// used when contrast crosses the tau threshold.
struct RectParams {
    int lambda = 3;
    int lambda_small = 2;
    int lambda_big = 5;
    double tau = 0.1;
};

/// Throws std::invalid_argument unless 1 <= lambda_small < lambda < lambda_big and tau >= 0.
void validate(const RectParams& p);

/// Parameters for threshold-region spots: half-size of the square
/// neighbourhood scanned around the spot centre, and the relative tone
/// difference below which a neighbour is repainted.
struct ThresholdParams {
    int half_size = 4;
    double tau = 0.05;
};

/// Throws std::invalid_argument unless half_size >= 1 and tau >= 0.
void validate(const ThresholdParams& p);

/// Which point of a SamplePoint the tone comparison (and painted tone) comes
/// from: the original grid point or the randomly displaced one.
enum class SpotVariant { Source, Displaced };

/// Relative tone difference |other - reference| / reference. A reference of
/// zero yields 0 when other is also zero and +infinity otherwise, so a black
/// reference against any non-black neighbour always exceeds any threshold.
double relative_diff(std::uint8_t reference, std::uint8_t other);

/// Horizontal and vertical relative contrast at p, measured probe pixels to
/// the right and probe pixels below. Out-of-image reads clamp to the border.
struct ContrastPair {
    double horiz = 0.0;
    double vert = 0.0;
};
ContrastPair contrast_pair(const Raster& src, PixelCoord p, int probe, Channel c);

/// Spot sides selected from the contrast pair:
///   both flat          -> lambda x lambda
///   both contrasted    -> lambda_small x lambda_small
///   flat horizontally  -> lambda_big wide, lambda_small tall
///   flat vertically    -> lambda_small wide, lambda_big tall
/// "Flat" means contrast <= tau; the boundary counts as flat.
struct SpotSize {
    int width = 0;
    int height = 0;
    bool operator==(const SpotSize&) const = default;
};
SpotSize rect_dims(double contrast_h, double contrast_v, const RectParams& p);

// Painters stamp one spot onto the canvas and return the pixels they wrote,
// in scan order. All tone reads come from the immutable source image, never
// from the canvas, so overlapping spots resolve as last-write-wins without
// feedback. Regions are clipped to the image.

/// Disc of the given radius centred on the displaced point, filled with the
/// grid point's tones on every selected channel.
std::vector<PixelCoord> paint_circle(Raster& canvas, const Raster& src,
                                     const SamplePoint& sp, int radius,
                                     const ChannelMask& mask);

/// Axis-aligned rectangle centred on the displaced point (floor offsets for
/// even sides), sized by the local contrast at the variant's point and filled
/// with that point's tone on channel c.
std::vector<PixelCoord> paint_rect(Raster& canvas, const Raster& src,
                                   const SamplePoint& sp, const RectParams& p,
                                   SpotVariant variant, Channel c);

/// Scans the square neighbourhood of the displaced point and repaints, on
/// channel c, every pixel whose relative difference from the variant point's
/// tone is within tau. May paint nothing.
std::vector<PixelCoord> paint_threshold(Raster& canvas, const Raster& src,
                                        const SamplePoint& sp, const ThresholdParams& p,
                                        SpotVariant variant, Channel c);

}  // namespace spotpaint

#endif
