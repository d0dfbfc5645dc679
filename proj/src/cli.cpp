#include "tropbal/cli.hpp"

#include "tropbal/balance.hpp"
#include "tropbal/io.hpp"
#include "tropbal/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

namespace tropbal::cli {

namespace {

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput(path + ": cannot open for writing");
  f << text;
}

struct Options {
  std::string poly, output, curve, bundle, fan, weights, divisor, beta;
  bool conical = false;
  bool dual = false;
  std::int64_t bound = 0;
  std::vector<double> box{-5.0, -5.0, 5.0, 5.0};
};

int tropicalize(const Options& o, std::ostream& out) {
  const LaurentPolynomialK f = io::polynomial_from_json(io::read_json_file(o.poly));
  const TropicalCurve c = o.conical ? conical_tropicalization(f) : dual_tropicalization(f);
  write_text(o.output, io::dump(io::to_json(c)), out);
  return kOk;
}

int balance(const Options& o, std::ostream& out) {
  const TropicalCurve c = io::curve_from_json(io::read_json_file(o.curve));
  const auto defects = local_balance(c);
  bool all = true;
  io::Json vertices = io::Json::array();
  for (std::size_t v = 0; v < defects.size(); ++v) {
    io::Json entry = io::to_json(defects[v]);
    entry["vertex"] = v;
    io::Json point = io::Json::array();
    for (const auto& x : c.vertices()[v]) point.push_back(format_rational(x));
    entry["point"] = point;
    vertices.push_back(entry);
    all = all && defects[v].balanced();
  }
  out << io::dump({{"balanced", all}, {"vertices", vertices}});
  return all ? kOk : kUnbalanced;
}

struct BundleInputs {
  BundleDescriptor bundle;
  Fan1Skeleton fan;
  CurveClassData beta;
};

BundleInputs load_bundle(const Options& o, bool need_beta) {
  BundleInputs in{io::bundle_from_json(io::read_json_file(o.bundle)),
                  io::fan_from_json(io::read_json_file(o.fan)),
                  {}};
  if (need_beta) in.beta.beta = io::int_vector_from_text(o.beta, "--beta");
  return in;
}

int bundle_balance(const Options& o, std::ostream& out) {
  const BundleInputs in = load_bundle(o, true);
  const WeightFunction w = io::weights_from_json(io::read_json_file(o.weights));
  const DefectVector d = tropbal::bundle_balance(w, in.bundle, in.fan, in.beta);
  out << io::dump(io::to_json(d));
  return d.balanced() ? kOk : kUnbalanced;
}

int solve(const Options& o, std::ostream& out) {
  const BundleInputs in = load_bundle(o, true);
  const auto sols = solve_weights(in.bundle, in.fan, in.beta, o.bound);
  io::Json list = io::Json::array();
  for (const auto& s : sols) list.push_back(io::to_json(s));
  out << io::dump({{"count", sols.size()}, {"solutions", list}});
  return kOk;
}

int reduce_cmd(const Options& o, std::ostream& out) {
  const BundleInputs in = load_bundle(o, false);
  const DivisorClass d = io::divisor_from_json(io::read_json_file(o.divisor));
  out << io::dump(io::to_json(reduce(d, in.bundle, in.fan)));
  return kOk;
}

int plot(const Options& o, std::ostream& out) {
  const TropicalCurve c = io::curve_from_json(io::read_json_file(o.curve));
  const PlotBox box{o.box[0], o.box[1], o.box[2], o.box[3]};
  write_text(o.output, render_svg(c, box), out);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tropical curves, divisor relations and bundle balancing"};
  app.name("tropbal");
  app.require_subcommand(1);
  Options o;

  auto* trop = app.add_subcommand("tropicalize", "Tropical curve of a bivariate polynomial");
  trop->add_option("--poly", o.poly, "Polynomial JSON file")->required();
  auto* conical = trop->add_flag("--conical", o.conical, "Constant-valuation recipe");
  auto* dual = trop->add_flag("--dual", o.dual, "Regular-subdivision dual (default)");
  conical->excludes(dual);
  trop->add_option("-o,--output", o.output, "Output curve JSON (default: stdout)");

  auto* bal = app.add_subcommand("balance", "Check local balancing at every vertex");
  bal->add_option("curve", o.curve, "Curve JSON file")->required();

  auto* bb = app.add_subcommand("bundle-balance", "Check the bundle balancing equations");
  bb->add_option("--bundle", o.bundle, "Bundle JSON file")->required();
  bb->add_option("--fan", o.fan, "Fan JSON file")->required();
  bb->add_option("--weights", o.weights, "Weights JSON file")->required();
  bb->add_option("--beta", o.beta, "Curve class as a JSON integer array")->required();

  auto* sw = app.add_subcommand("solve-weights", "Enumerate balanced ray weights in a box");
  sw->add_option("--bundle", o.bundle, "Bundle JSON file")->required();
  sw->add_option("--fan", o.fan, "Fan JSON file")->required();
  sw->add_option("--beta", o.beta, "Curve class as a JSON integer array")->required();
  sw->add_option("--bound", o.bound, "Largest weight per ray")->required()->check(
      CLI::NonNegativeNumber);

  auto* red = app.add_subcommand("reduce", "Normal form of a divisor class");
  red->add_option("--bundle", o.bundle, "Bundle JSON file")->required();
  red->add_option("--fan", o.fan, "Fan JSON file")->required();
  red->add_option("--divisor", o.divisor, "Divisor JSON file")->required();

  auto* pl = app.add_subcommand("plot", "Render a planar curve as SVG");
  pl->add_option("curve", o.curve, "Curve JSON file")->required();
  pl->add_option("-o,--output", o.output, "Output SVG file")->required();
  pl->add_option("--box", o.box, "Clipping window: xmin ymin xmax ymax")->expected(4);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*trop) return tropicalize(o, out);
    if (*bal) return balance(o, out);
    if (*bb) return bundle_balance(o, out);
    if (*sw) return solve(o, out);
    if (*red) return reduce_cmd(o, out);
    if (*pl) return plot(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace tropbal::cli
