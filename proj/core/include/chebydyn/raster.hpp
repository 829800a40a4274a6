#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chebydyn/analysis.hpp"
#include "chebydyn/operators.hpp"
#include "chebydyn/orbits.hpp"
#include "chebydyn/rational_map.hpp"

namespace chebydyn {

/// Rectangle of the complex plane sampled at pixel centers. Row 0 is the top
/// (largest imaginary part).
struct RenderRegion {
  double re_min = -5.0, re_max = 5.0, im_min = -5.0, im_max = 5.0;
  int width = 200, height = 200;

  /// Throws std::invalid_argument on an empty rectangle or grid.
  static RenderRegion make(double re_min, double re_max, double im_min, double im_max, int width, int height);
  Complex pixel_center(int i, int j) const;
};

enum class PixelClass : std::uint8_t { kRed, kGreen, kYellow, kBlack, kWhite };
char class_letter(PixelClass c);

struct Pixel {
  PixelClass cls = PixelClass::kBlack;
  int iters = 0;
  std::uint8_t level = 0;  ///< channel intensity written to the image

  friend bool operator==(const Pixel&, const Pixel&) = default;
};

struct RasterGrid {
  RenderRegion region;
  int max_iters = 0;
  std::vector<Pixel> pixels;  ///< row-major, width * height

  const Pixel& at(int i, int j) const { return pixels[std::size_t(j) * std::size_t(region.width) + std::size_t(i)]; }
  std::size_t count(PixelClass c) const;
  double fraction(PixelClass c) const;
};

/// 255 - floor(200 iters / max_iters): faster convergence is brighter and a
/// converged pixel never drops below 55.
std::uint8_t shade(int iters, int max_iters);

/// Dynamical plane of S(z; K). Roots 0 (red) and infinity (green), attracting
/// strange fixed points yellow, everything else black.
class DynamicalPlaneKernel {
 public:
  DynamicalPlaneKernel(const RatioParam& k, const OrbitConfig& cfg);
  OrbitOutcome outcome(Complex seed) const;
  Pixel pixel(Complex seed) const;
  const OrbitTargets& targets() const { return targets_; }

 private:
  RationalMap map_;
  OrbitConfig cfg_;
  OrbitTargets targets_;
};

/// Basins of G(z; K): roots 1 (red) and -1 (green), attracting strange
/// fixed points yellow, everything else black.
class BasinKernel {
 public:
  BasinKernel(const RatioParam& k, const OrbitConfig& cfg);
  OrbitOutcome outcome(Complex seed) const;
  Pixel pixel(Complex seed) const;
  const OrbitTargets& targets() const { return targets_; }

 private:
  RationalMap map_;
  OrbitConfig cfg_;
  OrbitTargets targets_;
};

/// Parameter space: each pixel is a K, seeded at the requested critical
/// point of S. Strange-attractor landings count as black (three-color legend).
/// Missing critical points and K = 0 give black with iters 0.
class ParameterSpaceKernel {
 public:
  ParameterSpaceKernel(CriticalLabel which, const OrbitConfig& cfg) : which_(which), cfg_(cfg) {}
  Pixel pixel(Complex k) const;

 private:
  CriticalLabel which_;
  OrbitConfig cfg_;
};

enum class StabilityTarget { kZ1, kZ2, kZ3 };

/// Stability functions over K: value < 1 red with level 255 (1 - value),
/// value = 1 white, undefined black.
class StabilityKernel {
 public:
  explicit StabilityKernel(StabilityTarget which) : which_(which) {}
  Pixel pixel(Complex k) const;
  std::optional<double> value(Complex k) const;

 private:
  StabilityTarget which_;
};

/// workers <= 0 picks the hardware concurrency. Output never depends on it.
RasterGrid render_dynamical_plane(const RatioParam& k, const RenderRegion& region, const OrbitConfig& cfg,
                                  int workers = 0);
RasterGrid render_parameter_space(CriticalLabel which, const RenderRegion& region, const OrbitConfig& cfg,
                                  int workers = 0);
RasterGrid render_basins_G(const RatioParam& k, const RenderRegion& region, const OrbitConfig& cfg,
                           int workers = 0);
RasterGrid render_stability_regions(StabilityTarget which, const RenderRegion& region, int workers = 0);

/// Binary PPM: "P6\n<w> <h>\n255\n" then RGB triples from the top row.
std::vector<std::uint8_t> encode_ppm(const RasterGrid& grid);

/// "i,j,class,iters" per pixel, row-major, class in {R,G,Y,B,W}.
std::string encode_csv(const RasterGrid& grid);

}  // namespace chebydyn
