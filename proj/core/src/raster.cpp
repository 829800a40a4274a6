#include "chebydyn/raster.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

namespace chebydyn {

RenderRegion RenderRegion::make(double re_min, double re_max, double im_min, double im_max, int width,
                                int height) {
  if (!(re_min < re_max) || !(im_min < im_max)) throw std::invalid_argument("empty render region");
  if (width < 1 || height < 1) throw std::invalid_argument("grid dimensions must be positive");
  return {re_min, re_max, im_min, im_max, width, height};
}

Complex RenderRegion::pixel_center(int i, int j) const {
  const double re = re_min + (i + 0.5) * (re_max - re_min) / width;
  const double im = im_max - (j + 0.5) * (im_max - im_min) / height;
  return {re, im};
}

char class_letter(PixelClass c) {
  switch (c) {
    case PixelClass::kRed: return 'R';
    case PixelClass::kGreen: return 'G';
    case PixelClass::kYellow: return 'Y';
    case PixelClass::kBlack: return 'B';
    case PixelClass::kWhite: return 'W';
  }
  return '?';
}

std::size_t RasterGrid::count(PixelClass c) const {
  return static_cast<std::size_t>(std::count_if(pixels.begin(), pixels.end(), [c](const Pixel& p) { return p.cls == c; }));
}

double RasterGrid::fraction(PixelClass c) const {
  return pixels.empty() ? 0.0 : double(count(c)) / double(pixels.size());
}

std::uint8_t shade(int iters, int max_iters) {
  const int drop = static_cast<int>(std::floor(200.0 * iters / max_iters));
  return static_cast<std::uint8_t>(std::clamp(255 - drop, 0, 255));
}

namespace {

Pixel to_pixel(const OrbitOutcome& o, int max_iters, bool strange_is_black) {
  switch (o.status) {
    case OrbitStatus::kRootA: return {PixelClass::kRed, o.iters, shade(o.iters, max_iters)};
    case OrbitStatus::kRootB: return {PixelClass::kGreen, o.iters, shade(o.iters, max_iters)};
    case OrbitStatus::kStrange:
      if (!strange_is_black) return {PixelClass::kYellow, o.iters, shade(o.iters, max_iters)};
      break;
    case OrbitStatus::kNoConvergence: break;
  }
  return {PixelClass::kBlack, max_iters, 0};
}

std::vector<SpherePoint> attracting_strange(const std::vector<FixedPointReport>& reports) {
  std::vector<SpherePoint> out;
  for (const auto& r : reports)
    if (r.kind == FixedPointKind::kStrange && is_attracting(r.stability)) out.push_back(r.location);
  return out;
}

template <typename PixelFn>
RasterGrid render(const RenderRegion& region, int max_iters, int workers, const PixelFn& pixel_at) {
  RasterGrid grid{region, max_iters, std::vector<Pixel>(std::size_t(region.width) * std::size_t(region.height))};
  if (workers <= 0) workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = std::min(workers, region.height);

  // Rows are dealt round-robin; every pixel lands at its own index.
  auto run = [&](int first) {
    for (int j = first; j < region.height; j += workers)
      for (int i = 0; i < region.width; ++i)
        grid.pixels[std::size_t(j) * std::size_t(region.width) + std::size_t(i)] = pixel_at(region.pixel_center(i, j));
  };
  if (workers == 1) {
    run(0);
    return grid;
  }
  std::vector<std::jthread> pool;
  pool.reserve(std::size_t(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
  return grid;
}

}  // namespace

DynamicalPlaneKernel::DynamicalPlaneKernel(const RatioParam& k, const OrbitConfig& cfg)
    : map_(build_S(k)), cfg_(cfg), targets_(OrbitTargets::conjugate_plane(attracting_strange(fixed_points_S(k)))) {}

OrbitOutcome DynamicalPlaneKernel::outcome(Complex seed) const { return iterate_orbit(map_, seed, cfg_, targets_); }

Pixel DynamicalPlaneKernel::pixel(Complex seed) const { return to_pixel(outcome(seed), cfg_.max_iters, false); }

BasinKernel::BasinKernel(const RatioParam& k, const OrbitConfig& cfg)
    : map_(build_G(k)), cfg_(cfg), targets_(OrbitTargets::two_root_plane(attracting_strange(fixed_points_G(k)))) {}

OrbitOutcome BasinKernel::outcome(Complex seed) const { return iterate_orbit(map_, seed, cfg_, targets_); }

Pixel BasinKernel::pixel(Complex seed) const { return to_pixel(outcome(seed), cfg_.max_iters, false); }

Pixel ParameterSpaceKernel::pixel(Complex k) const {
  const Complex snapped = snap_ratio(k);
  if (snapped == Complex{}) return {PixelClass::kBlack, 0, 0};
  const RatioParam param(snapped);
  const auto seed = critical_point_S(param, which_);
  if (!seed) return {PixelClass::kBlack, 0, 0};
  const OrbitOutcome o = iterate_orbit(build_S(param), *seed, cfg_, OrbitTargets::conjugate_plane());
  return to_pixel(o, cfg_.max_iters, true);
}

std::optional<double> StabilityKernel::value(Complex k) const {
  const StabilityMins mins = stability_min_fns(snap_ratio(k));
  switch (which_) {
    case StabilityTarget::kZ1: return mins.s1;
    case StabilityTarget::kZ2:
      if (mins.s23) return mins.s23->first;
      break;
    case StabilityTarget::kZ3:
      if (mins.s23) return mins.s23->second;
      break;
  }
  return std::nullopt;
}

Pixel StabilityKernel::pixel(Complex k) const {
  const auto v = value(k);
  if (!v) return {PixelClass::kBlack, 0, 0};
  if (*v < 1.0 - kNeutralBand)
    return {PixelClass::kRed, 0, static_cast<std::uint8_t>(std::floor(255.0 * (1.0 - *v)))};
  return {PixelClass::kWhite, 0, 255};
}

RasterGrid render_dynamical_plane(const RatioParam& k, const RenderRegion& region, const OrbitConfig& cfg,
                                  int workers) {
  const DynamicalPlaneKernel kernel(k, cfg);
  return render(region, cfg.max_iters, workers, [&](Complex z) { return kernel.pixel(z); });
}

RasterGrid render_parameter_space(CriticalLabel which, const RenderRegion& region, const OrbitConfig& cfg,
                                  int workers) {
  const ParameterSpaceKernel kernel(which, cfg);
  return render(region, cfg.max_iters, workers, [&](Complex k) { return kernel.pixel(k); });
}

RasterGrid render_basins_G(const RatioParam& k, const RenderRegion& region, const OrbitConfig& cfg, int workers) {
  const BasinKernel kernel(k, cfg);
  return render(region, cfg.max_iters, workers, [&](Complex z) { return kernel.pixel(z); });
}

RasterGrid render_stability_regions(StabilityTarget which, const RenderRegion& region, int workers) {
  const StabilityKernel kernel(which);
  return render(region, 1, workers, [&](Complex k) { return kernel.pixel(k); });
}

std::vector<std::uint8_t> encode_ppm(const RasterGrid& grid) {
  const std::string header =
      "P6\n" + std::to_string(grid.region.width) + " " + std::to_string(grid.region.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(out.size() + 3 * grid.pixels.size());
  for (const Pixel& p : grid.pixels) {
    const std::uint8_t c = p.level;
    std::uint8_t rgb[3] = {0, 0, 0};
    switch (p.cls) {
      case PixelClass::kRed: rgb[0] = c; break;
      case PixelClass::kGreen: rgb[1] = c; break;
      case PixelClass::kYellow: rgb[0] = rgb[1] = c; break;
      case PixelClass::kWhite: rgb[0] = rgb[1] = rgb[2] = 255; break;
      case PixelClass::kBlack: break;
    }
    out.insert(out.end(), rgb, rgb + 3);
  }
  return out;
}

std::string encode_csv(const RasterGrid& grid) {
  std::string out;
  out.reserve(grid.pixels.size() * 14);
  char line[64];
  for (int j = 0; j < grid.region.height; ++j) {
    for (int i = 0; i < grid.region.width; ++i) {
      const Pixel& p = grid.at(i, j);
      const int n = std::snprintf(line, sizeof line, "%d,%d,%c,%d\n", i, j, class_letter(p.cls), p.iters);
      out.append(line, std::size_t(n));
    }
  }
  return out;
}

}  // namespace chebydyn
