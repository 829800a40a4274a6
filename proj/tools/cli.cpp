#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <system_error>

#include "CLI11.hpp"
#include "chebydyn/errors.hpp"

namespace chebydyn::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const char* subcommand_name(Subcommand s) {
  switch (s) {
    case Subcommand::kFixedPoints: return "fixed-points";
    case Subcommand::kCriticalPoints: return "critical-points";
    case Subcommand::kRenderPlane: return "render-plane";
    case Subcommand::kRenderParam: return "render-param";
    case Subcommand::kRenderBasins: return "render-basins";
    case Subcommand::kRenderStability: return "render-stability";
    case Subcommand::kVerify: return "verify";
  }
  return "";
}

bool is_render(Subcommand s) {
  return s == Subcommand::kRenderPlane || s == Subcommand::kRenderParam || s == Subcommand::kRenderBasins ||
         s == Subcommand::kRenderStability;
}

double parse_double(std::string_view text, const std::string& what) {
  // from_chars does not accept a leading '+'.
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw UsageError("invalid number '" + std::string(text) + "' in " + what);
  return v;
}

template <typename Int>
Int parse_integer(std::string_view text, const std::string& what) {
  Int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw UsageError("invalid integer '" + std::string(text) + "' in " + what);
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

void write_file(const std::string& path, std::string_view bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  f.close();
  if (!f) throw IoError("failed writing '" + path + "'");
}

/// Text output goes to --out when given, else to the stream.
void emit_text(const CommandSpec& spec, const std::string& text, std::ostream& out) {
  if (spec.out.empty())
    out << text;
  else
    write_file(spec.out, text);
}

void emit_grid(const CommandSpec& spec, const RasterGrid& grid, std::ostream& out) {
  const std::vector<std::uint8_t> ppm = encode_ppm(grid);
  write_file(spec.out, std::string_view(reinterpret_cast<const char*>(ppm.data()), ppm.size()));
  if (!spec.csv.empty()) write_file(spec.csv, encode_csv(grid));
  out << spec.out << ": " << grid.region.width << "x" << grid.region.height << " R=" << grid.count(PixelClass::kRed)
      << " G=" << grid.count(PixelClass::kGreen) << " Y=" << grid.count(PixelClass::kYellow)
      << " B=" << grid.count(PixelClass::kBlack) << " W=" << grid.count(PixelClass::kWhite) << "\n";
}

std::string examples_text() {
  std::string s = "Examples:\n";
  for (const auto& ex : help_examples()) {
    s += "  chebydyn";
    for (const auto& a : ex) s += " " + a;
    s += "\n";
  }
  s +=
      "\nThe default region [-5,5]x[-5,5] for render-param and render-stability is an\n"
      "arbitrary choice of this tool, not a window taken from published figures.\n";
  return s;
}

}  // namespace

OrbitConfig CommandSpec::orbit_config() const { return OrbitConfig::make(iters, tol, inf_threshold.value_or(0.0)); }

Complex parse_complex(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() == 1) return {parse_double(parts[0], "--k"), 0.0};
  if (parts.size() != 2) throw UsageError("expected RE,IM but got '" + text + "'");
  return {parse_double(parts[0], "--k"), parse_double(parts[1], "--k")};
}

std::array<double, 4> parse_region(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw UsageError("expected re_min,re_max,im_min,im_max but got '" + text + "'");
  std::array<double, 4> r{};
  for (std::size_t i = 0; i < 4; ++i) r[i] = parse_double(parts[i], "--region");
  return r;
}

std::pair<int, int> parse_grid(const std::string& text) {
  const auto parts = split(text, 'x');
  if (parts.size() != 2) throw UsageError("expected WxH but got '" + text + "'");
  return {parse_integer<int>(parts[0], "--grid"), parse_integer<int>(parts[1], "--grid")};
}

const std::vector<std::vector<std::string>>& help_examples() {
  static const std::vector<std::vector<std::string>> examples = {
      {"fixed-points", "--k", "2,0"},
      {"fixed-points", "--k", "1,0", "--map", "g"},
      {"critical-points", "--k", "3,0"},
      {"render-plane", "--k", "0.6,0", "--grid", "200x200", "--out", "plane_k0.6.ppm"},
      {"render-plane", "--k", "0,-0.2", "--out", "plane_k-0.2i.ppm", "--csv", "plane_k-0.2i.csv"},
      {"render-param", "--critical", "c2", "--region", "-5,5,-5,5", "--out", "param_c2.ppm"},
      {"render-basins", "--k", "1.5,0", "--iters", "30", "--tol", "1e-5", "--out", "basins_k1.5.ppm"},
      {"render-stability", "--which", "z1", "--region", "-5,5,-5,5", "--out", "stability_z1.ppm"},
      {"verify", "--csv", "verify.csv"},
  };
  return examples;
}

CommandSpec parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Dynamics of the modified Chebyshev family for multiple roots", "chebydyn"};
  app.require_subcommand(1, 1);
  app.footer(examples_text());

  std::string k_text, region_text, grid_text, map_text, critical_text, which_text, out_text, csv_text;
  // Numeric flags are taken as text and parsed with from_chars (no locale).
  std::string iters_text, workers_text, tol_text, inf_text, seed_text;

  struct Entry {
    Subcommand id;
    CLI::App* app;
  };
  std::vector<Entry> subs;
  auto add = [&](Subcommand id, const char* help) {
    CLI::App* s = app.add_subcommand(subcommand_name(id), help);
    subs.push_back({id, s});
    return s;
  };
  auto add_k = [&](CLI::App* s) { s->add_option("--k", k_text, "Multiplicity ratio K as RE,IM (default 1,0)"); };
  auto add_region = [&](CLI::App* s) {
    s->add_option("--region", region_text, "re_min,re_max,im_min,im_max (default -5,5,-5,5)");
    s->add_option("--grid", grid_text, "Raster size WxH (default 200x200)");
    s->add_option("--out", out_text, "Output PPM path (default <subcommand>.ppm)");
    s->add_option("--csv", csv_text, "Optional per-pixel CSV sidecar");
    s->add_option("--workers", workers_text, "Worker threads; output never depends on it (env CHEBYDYN_WORKERS)");
  };
  auto add_orbit = [&](CLI::App* s) {
    s->add_option("--iters", iters_text, "Maximum iterations per orbit");
    s->add_option("--tol", tol_text, "Convergence tolerance");
    s->add_option("--inf-threshold", inf_text, "Escape radius for infinity (default 1/tol)");
  };
  auto add_map = [&](CLI::App* s) {
    s->add_option("--map", map_text, "s (conjugate family, default) or g (operator with roots 1, -1)");
    s->add_option("--out", out_text, "Write the records here instead of stdout");
  };

  CLI::App* fp = add(Subcommand::kFixedPoints, "Fixed points with multipliers and stability");
  add_k(fp);
  add_map(fp);
  CLI::App* cp = add(Subcommand::kCriticalPoints, "Free critical points");
  add_k(cp);
  add_map(cp);
  CLI::App* rp = add(Subcommand::kRenderPlane, "Dynamical plane of S (iters 50, tol 1e-20)");
  add_k(rp);
  add_region(rp);
  add_orbit(rp);
  CLI::App* rpar = add(Subcommand::kRenderParam, "Parameter space seeded at a critical point (iters 50, tol 1e-2)");
  rpar->add_option("--critical", critical_text, "c1, c2 or c3 (default c1)");
  add_region(rpar);
  add_orbit(rpar);
  CLI::App* rb = add(Subcommand::kRenderBasins, "Basins of attraction of G (iters 30, tol 1e-5)");
  add_k(rb);
  add_region(rb);
  add_orbit(rb);
  CLI::App* rs = add(Subcommand::kRenderStability, "Attraction zones of the strange fixed points over K");
  rs->add_option("--which", which_text, "z1, z2 or z3 (default z1)");
  add_region(rs);
  CLI::App* vf = add(Subcommand::kVerify, "Run the numerical oracle suite");
  vf->add_option("--seed", seed_text, "Random seed for the sampled oracles");
  vf->add_option("--csv", csv_text, "Also write the report as CSV");
  vf->add_option("--out", out_text, "Write the table here instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  CommandSpec spec;
  for (const Entry& e : subs)
    if (e.app->parsed()) spec.subcommand = e.id;

  if (!k_text.empty()) spec.k = parse_complex(k_text);
  if (!map_text.empty()) {
    if (map_text == "s")
      spec.map = MapChoice::kS;
    else if (map_text == "g")
      spec.map = MapChoice::kG;
    else
      throw UsageError("--map must be s or g");
  }
  if (!critical_text.empty()) {
    if (critical_text == "c1")
      spec.critical = CriticalLabel::kC1;
    else if (critical_text == "c2")
      spec.critical = CriticalLabel::kC2;
    else if (critical_text == "c3")
      spec.critical = CriticalLabel::kC3;
    else
      throw UsageError("--critical must be c1, c2 or c3");
  }
  if (!which_text.empty()) {
    if (which_text == "z1")
      spec.which = StabilityTarget::kZ1;
    else if (which_text == "z2")
      spec.which = StabilityTarget::kZ2;
    else if (which_text == "z3")
      spec.which = StabilityTarget::kZ3;
    else
      throw UsageError("--which must be z1, z2 or z3");
  }

  std::array<double, 4> r{-5.0, 5.0, -5.0, 5.0};
  if (!region_text.empty()) r = parse_region(region_text);
  std::pair<int, int> g{200, 200};
  if (!grid_text.empty()) g = parse_grid(grid_text);
  try {
    spec.region = RenderRegion::make(r[0], r[1], r[2], r[3], g.first, g.second);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  switch (spec.subcommand) {
    case Subcommand::kRenderPlane:
      spec.iters = 50;
      spec.tol = 1e-20;
      break;
    case Subcommand::kRenderBasins:
      spec.iters = 30;
      spec.tol = 1e-5;
      break;
    default:
      spec.iters = 50;
      spec.tol = 1e-2;
      break;
  }
  if (!iters_text.empty()) spec.iters = parse_integer<int>(iters_text, "--iters");
  if (!tol_text.empty()) spec.tol = parse_double(tol_text, "--tol");
  if (!inf_text.empty()) spec.inf_threshold = parse_double(inf_text, "--inf-threshold");
  if (is_render(spec.subcommand) && spec.subcommand != Subcommand::kRenderStability) {
    try {
      (void)spec.orbit_config();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  spec.out = out_text;
  if (spec.out.empty() && is_render(spec.subcommand)) spec.out = std::string(subcommand_name(spec.subcommand)) + ".ppm";
  spec.csv = csv_text;

  if (!workers_text.empty()) {
    spec.workers = parse_integer<int>(workers_text, "--workers");
  } else if (const char* env = std::getenv("CHEBYDYN_WORKERS"); env != nullptr && *env != '\0') {
    spec.workers = parse_integer<int>(env, "CHEBYDYN_WORKERS");
  }
  if (spec.workers < 0) throw UsageError("--workers must be >= 0");
  if (!seed_text.empty()) spec.seed = parse_integer<std::uint64_t>(seed_text, "--seed");
  return spec;
}

int run(const CommandSpec& spec, std::ostream& out) {
  switch (spec.subcommand) {
    case Subcommand::kFixedPoints: {
      const RatioParam k(spec.k);
      const auto reports = spec.map == MapChoice::kS ? fixed_points_S(k) : fixed_points_G(k);
      std::string text;
      for (const auto& r : reports) text += format_record(k.value(), r) + "\n";
      for (const auto& d : closed_form_discrepancies(k)) text += format_record(d) + "\n";
      emit_text(spec, text, out);
      return kExitOk;
    }
    case Subcommand::kCriticalPoints: {
      const RatioParam k(spec.k);
      const auto points = spec.map == MapChoice::kS ? critical_points_S(k) : critical_points_G(k);
      std::string text;
      for (const auto& c : points) text += format_record(k.value(), c) + "\n";
      emit_text(spec, text, out);
      return kExitOk;
    }
    case Subcommand::kRenderPlane:
      emit_grid(spec, render_dynamical_plane(RatioParam(spec.k), spec.region, spec.orbit_config(), spec.workers),
                out);
      return kExitOk;
    case Subcommand::kRenderParam:
      emit_grid(spec, render_parameter_space(spec.critical, spec.region, spec.orbit_config(), spec.workers), out);
      return kExitOk;
    case Subcommand::kRenderBasins:
      emit_grid(spec, render_basins_G(RatioParam(spec.k), spec.region, spec.orbit_config(), spec.workers), out);
      return kExitOk;
    case Subcommand::kRenderStability:
      emit_grid(spec, render_stability_regions(spec.which, spec.region, spec.workers), out);
      return kExitOk;
    case Subcommand::kVerify: {
      const auto reports = run_oracle_suite(spec.seed);
      emit_text(spec, format_table(reports), out);
      if (!spec.csv.empty()) write_file(spec.csv, format_csv(reports));
      return suite_ok(reports) ? kExitOk : kExitDomain;
    }
  }
  return kExitUsage;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandSpec spec;
  try {
    spec = parse_args(args);
  } catch (const HelpRequested& h) {
    out << h.what();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    return run(spec, out);
  } catch (const DegenerateParam& e) {
    err << e.what() << "\n";
    return kExitDomain;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace chebydyn::cli
