#include "fbcs/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <initializer_list>
#include <optional>
#include <string_view>

#include "fbcs/filters.hpp"
#include "fbcs/io.hpp"
#include "fbcs/mflgen.hpp"
#include "fbcs/render.hpp"

namespace fbcs::cli {
namespace {

namespace fs = std::filesystem;

// Bad flag values the parser cannot catch by type; reported like any other usage error.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<double> to_double(std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    return std::nullopt;
  }
  return value;
}

void require_extension(const fs::path& path, std::initializer_list<std::string_view> allowed) {
  const std::string ext = extension_of(path);
  if (std::find(allowed.begin(), allowed.end(), ext) != allowed.end()) {
    return;
  }
  std::string list;
  for (const std::string_view a : allowed) {
    list += list.empty() ? "" : ", ";
    list += a;
  }
  throw FormatError(path.string() + ": unsupported output extension '" + ext + "' (expected " +
                    list + ")");
}

bool is_image_path(const fs::path& path) {
  const std::string ext = extension_of(path);
  return ext == ".png" || ext == ".ppm";
}

void write_scalar_output(const ScalarField2D& s, const fs::path& out) {
  require_extension(out, {".png", ".ppm", ".sf2d"});
  render_scalar(s, out);
}

ScalePolicy parse_scale(const std::string& text) {
  if (text == "auto") {
    return ScalePolicy::automatic();
  }
  const auto value = to_double(text);
  if (!value) {
    throw UsageError("--scale expects 'auto' or a positive number, got '" + text + "'");
  }
  return ScalePolicy::fixed(*value);
}

std::pair<std::size_t, std::size_t> parse_size(const std::string& text) {
  const auto x = text.find_first_of("xX");
  std::size_t w = 0;
  std::size_t h = 0;
  bool ok = x != std::string::npos;
  if (ok) {
    const char* begin = text.data();
    const auto rw = std::from_chars(begin, begin + x, w);
    const auto rh = std::from_chars(begin + x + 1, begin + text.size(), h);
    ok = rw.ec == std::errc() && rw.ptr == begin + x && rh.ec == std::errc() &&
         rh.ptr == begin + text.size() && w > 0 && h > 0;
  }
  if (!ok) {
    throw UsageError("--size expects WxH with positive integers, got '" + text + "'");
  }
  return {w, h};
}

PlanarVector parse_background(const std::string& text) {
  const auto comma = text.find(',');
  if (comma != std::string::npos) {
    const auto p = to_double(std::string_view(text).substr(0, comma));
    const auto q = to_double(std::string_view(text).substr(comma + 1));
    if (p && q) {
      return {*p, *q};
    }
  }
  throw UsageError("--background expects P,Q, got '" + text + "'");
}

struct Options {
  std::string in;
  std::string in2;
  std::string out;
  bool linearize = false;
  std::string scale = "auto";
  double beta = 0.0;
  std::string size;
  std::string pits;
  std::string background = "0,0";
  std::optional<std::size_t> stride;
};

void cmd_img2field(const Options& o) {
  require_extension(o.out, {".vf2d"});
  ImageGrid img = read_image(o.in);
  if (o.linearize) {
    for (RgbIntensity& px : img.cells()) {
      px = linearize(px);
    }
  }
  write_field(forward_map(img), o.out);
}

void cmd_field2img(const Options& o) {
  const ScalePolicy policy = parse_scale(o.scale);
  require_extension(o.out, {".png", ".ppm"});
  write_image(backward_map(read_field(o.in), policy), o.out);
}

void cmd_achrofilter(const Options& o) {
  require_extension(o.out, {".png", ".ppm"});
  write_image(achromatic_filter(read_image(o.in), o.beta), o.out);
}

void cmd_achromap(const Options& o) {
  require_extension(o.out, {".png", ".ppm", ".sf2d"});
  write_scalar_output(achromatic_map(read_image(o.in)), o.out);
}

void cmd_achrograd(const Options& o) {
  require_extension(o.out, {".png", ".ppm"});
  write_image(achromatic_gradient_image(read_image(o.in)), o.out);
}

void cmd_div(const Options& o) {
  require_extension(o.out, {".png", ".ppm", ".sf2d"});
  write_scalar_output(divergence(read_field(o.in)), o.out);
}

void cmd_curl(const Options& o) {
  require_extension(o.out, {".png", ".ppm", ".sf2d"});
  write_scalar_output(curl_z(read_field(o.in)), o.out);
}

void cmd_grad(const Options& o) {
  require_extension(o.out, {".vf2d"});
  write_field(gradient(read_scalar_field(o.in)), o.out);
}

void cmd_compose(const Options& o) {
  require_extension(o.out, {".png", ".ppm", ".vf2d"});
  const VectorField2D f = compose(read_scalar_field(o.in), read_scalar_field(o.in2));
  if (is_image_path(o.out)) {
    write_image(backward_map(f, ScalePolicy::automatic()), o.out);
  } else {
    write_field(f, o.out);
  }
}

void cmd_genmfl(const Options& o) {
  const auto [width, height] = parse_size(o.size);
  const PlanarVector background = parse_background(o.background);
  require_extension(o.out, {".vf2d"});
  write_field(generate_mfl(parse_pits(o.pits), width, height, background), o.out);
}

void cmd_quiver(const Options& o) {
  require_extension(o.out, {".svg"});
  const VectorField2D f = read_field(o.in);
  const std::size_t stride = o.stride.value_or(std::max<std::size_t>(1, f.width() / 50));
  render_quiver(f, o.out, stride);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maps color images to 2D vector fields and back through the fiber-bundle color "
               "space, with achromatic filtering and vector-calculus operators.",
               "fbcs"};
  app.require_subcommand(1);
  Options o;

  auto* img2field = app.add_subcommand("img2field", "image -> vector field (forward mapping)");
  img2field->add_option("input", o.in, "PNG or PPM image")->required();
  img2field->add_option("output", o.out, ".vf2d field")->required();
  img2field->add_flag("--linearize", o.linearize, "decode sRGB to linear light first");

  auto* field2img = app.add_subcommand("field2img", "vector field -> image (backward mapping)");
  field2img->add_option("input", o.in, ".vf2d field")->required();
  field2img->add_option("output", o.out, ".png or .ppm image")->required();
  field2img->add_option("--scale", o.scale, "'auto' or a positive factor")->capture_default_str();

  auto* achrofilter = app.add_subcommand("achrofilter", "remove the achromatic component");
  achrofilter->add_option("input", o.in, "PNG or PPM image")->required();
  achrofilter->add_option("output", o.out, ".png or .ppm image")->required();
  achrofilter->add_option("--beta", o.beta, "fraction of the achromatic part kept, in [0, 1]")
      ->capture_default_str();

  auto* achromap = app.add_subcommand("achromap", "grayscale map of |s_w|");
  achromap->add_option("input", o.in, "PNG or PPM image")->required();
  achromap->add_option("output", o.out, ".png, .ppm or .sf2d")->required();

  auto* achrograd = app.add_subcommand("achrograd", "image of the achromatic gradient");
  achrograd->add_option("input", o.in, "PNG or PPM image")->required();
  achrograd->add_option("output", o.out, ".png or .ppm image")->required();

  auto* div = app.add_subcommand("div", "divergence of a vector field");
  div->add_option("input", o.in, ".vf2d field")->required();
  div->add_option("output", o.out, ".png, .ppm or .sf2d")->required();

  auto* curl = app.add_subcommand("curl", "z component of the curl of a vector field");
  curl->add_option("input", o.in, ".vf2d field")->required();
  curl->add_option("output", o.out, ".png, .ppm or .sf2d")->required();

  auto* grad = app.add_subcommand("grad", "gradient of a scalar field");
  grad->add_option("input", o.in, ".sf2d field")->required();
  grad->add_option("output", o.out, ".vf2d field")->required();

  auto* compose_cmd = app.add_subcommand("compose", "two scalar fields -> one image");
  compose_cmd->add_option("a", o.in, ".sf2d field for the x component")->required();
  compose_cmd->add_option("b", o.in2, ".sf2d field for the y component")->required();
  compose_cmd->add_option("output", o.out, ".png, .ppm or .vf2d")->required();

  auto* genmfl = app.add_subcommand("genmfl", "synthetic leakage field of corrosion pits");
  genmfl->add_option("--size", o.size, "grid size WxH")->required();
  genmfl->add_option("--pits", o.pits, "\"x,y,depth,radius;...\"");
  genmfl->add_option("--background", o.background, "uniform field P,Q")->capture_default_str();
  genmfl->add_option("output", o.out, ".vf2d field")->required();

  auto* quiver = app.add_subcommand("quiver", "SVG arrow plot of a vector field");
  quiver->add_option("input", o.in, ".vf2d field")->required();
  quiver->add_option("output", o.out, ".svg file")->required();
  quiver->add_option("--stride", o.stride, "sample every N-th cell (default max(1, width/50))");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) {
    argv.push_back(a.c_str());
  }
  if (argv.empty()) {
    argv.push_back("fbcs");
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "fbcs: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  const std::pair<CLI::App*, void (*)(const Options&)> commands[] = {
      {img2field, cmd_img2field}, {field2img, cmd_field2img}, {achrofilter, cmd_achrofilter},
      {achromap, cmd_achromap},   {achrograd, cmd_achrograd}, {div, cmd_div},
      {curl, cmd_curl},           {grad, cmd_grad},           {compose_cmd, cmd_compose},
      {genmfl, cmd_genmfl},       {quiver, cmd_quiver},
  };
  try {
    for (const auto& [sub, handler] : commands) {
      if (sub->parsed()) {
        handler(o);
      }
    }
  } catch (const UsageError& e) {
    err << "fbcs: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "fbcs: error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace fbcs::cli
