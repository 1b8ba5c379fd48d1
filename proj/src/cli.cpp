#include "chaintrace/cli.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"

#include "chaintrace/certify.hpp"
#include "chaintrace/error.hpp"
#include "chaintrace/io.hpp"
#include "chaintrace/kernels.hpp"
#include "chaintrace/svg.hpp"

namespace chaintrace {

namespace {

// Exhaustive runs enumerate 2^((k+1)^2 - 1) colorings; beyond this they do not finish.
constexpr int kMaxExhaustiveBits = 24;

struct CliConfig {
  int k = 0;
  std::string coloring_path;
  std::string start;
  std::string a;
  std::string b;
  int jobs = 0;
  bool serial = false;
  std::string map;
  std::vector<int> k_list;
  double tol = 1e-9;
  std::vector<std::string> inputs;
  double epsilon = 0.0;
  int k_ref = 0;
  double tail_fraction = 0.5;
  std::string out_path;
  int cell = 40;
};

GridPoint parse_point(const std::string& text) {
  const auto comma = text.find(',');
  try {
    std::size_t used_i = 0;
    std::size_t used_j = 0;
    if (comma == std::string::npos) throw std::invalid_argument("no comma");
    const int i = std::stoi(text.substr(0, comma), &used_i);
    const int j = std::stoi(text.substr(comma + 1), &used_j);
    if (used_i != comma || used_j != text.size() - comma - 1) throw std::invalid_argument("trailing text");
    return {i, j};
  } catch (const std::logic_error&) {
    throw Error(Errc::BadInput, "expected I,J but got '" + text + "'");
  }
}

Face parse_start(const std::string& text, const Coloring& c) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(Errc::BadInput, "expected SIDE:INDEX but got '" + text + "'");
  const std::string side = text.substr(0, colon);
  std::size_t index = 0;
  try {
    std::size_t used = 0;
    const long value = std::stol(text.substr(colon + 1), &used);
    if (value < 0 || used != text.size() - colon - 1) throw std::invalid_argument("bad index");
    index = static_cast<std::size_t>(value);
  } catch (const std::logic_error&) {
    throw Error(Errc::BadInput, "bad gate index in '" + text + "'");
  }
  const int k = c.k();
  auto on_side = [&](const Face& f) {
    if (side == "bottom") return f.kind == FaceKind::Horizontal && f.origin.j == 0;
    if (side == "right") return f.kind == FaceKind::Vertical && f.origin.i == k;
    if (side == "top") return f.kind == FaceKind::Horizontal && f.origin.j == k;
    if (side == "left") return f.kind == FaceKind::Vertical && f.origin.i == 0;
    throw Error(Errc::BadInput, "unknown side '" + side + "' (bottom, right, top, left)");
  };
  std::vector<Face> gates;
  for (const Face& f : boundary_gates(c, Rectangle{{0, 0}, {k, k}}))
    if (on_side(f)) gates.push_back(f);
  if (index >= gates.size()) {
    throw Error(Errc::BadInput, "no such gate index: side " + side + " has " + std::to_string(gates.size()) +
                                    " gate(s)");
  }
  return gates[index];
}

Coloring load_coloring(const CliConfig& cfg) {
  Coloring c = io::coloring_from_json(io::read_json_file(cfg.coloring_path));
  if (c.k() != cfg.k) {
    throw Error(Errc::ShapeMismatch, "coloring has k = " + std::to_string(c.k()) + " but --k is " +
                                         std::to_string(cfg.k));
  }
  return c;
}

void print(std::ostream& out, const io::Json& j) { out << j.dump(2) << '\n'; }

int grid_info(const CliConfig& cfg, std::ostream& out) {
  const CombinatorialSquare sq = build_square(cfg.k);
  std::size_t h = 0, v = 0, d = 0;
  for (const Face& f : sq.faces()) {
    if (f.kind == FaceKind::Horizontal) ++h;
    if (f.kind == FaceKind::Vertical) ++v;
    if (f.kind == FaceKind::Diagonal) ++d;
  }
  print(out, {{"k", sq.k()},
              {"vertices", sq.vertex_count()},
              {"simplexes", sq.simplex_count()},
              {"faces", {{"horizontal", h}, {"vertical", v}, {"diagonal", d}}}});
  return kExitOk;
}

int chain_trace(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const CombinatorialSquare sq = build_square(cfg.k);
  const Coloring c = load_coloring(cfg);
  const Face start = parse_start(cfg.start, c);
  const Chain chain = trace_maximal_chain(sq, start, c);
  print(out, io::to_json(chain));
  if (!sq.is_boundary(chain.gates.back())) {
    err << "chain did not end on the boundary\n";
    return kExitPropertyFailed;
  }
  return kExitOk;
}

int lemma_witness_cmd(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  build_square(cfg.k);
  const Coloring c = load_coloring(cfg);
  const GridPoint a = parse_point(cfg.a);
  const GridPoint b = parse_point(cfg.b);
  const Rectangle r = Rectangle::spanning(a, b);
  if (!CombinatorialSquare(cfg.k).bounds().contains(a) || !CombinatorialSquare(cfg.k).bounds().contains(b)) {
    throw Error(Errc::NotACorner, "a and b must lie in the grid");
  }
  const Chain chain = lemma_witness(c, r, a, b);
  print(out, io::to_json(chain));
  if (!meets_both_arcs(chain, r, a, b)) {
    err << "witness chain does not meet both arcs\n";
    return kExitPropertyFailed;
  }
  return kExitOk;
}

int lemma_exhaustive_cmd(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  build_square(cfg.k);
  if ((cfg.k + 1) * (cfg.k + 1) - 1 > kMaxExhaustiveBits) {
    throw Error(Errc::BadParams, "exhaustive enumeration supports k <= 4");
  }
  const GridPoint a = parse_point(cfg.a);
  const GridPoint b = parse_point(cfg.b);
  if (!CombinatorialSquare(cfg.k).bounds().contains(a) || !CombinatorialSquare(cfg.k).bounds().contains(b)) {
    throw Error(Errc::NotACorner, "a and b must lie in the grid");
  }
  Rectangle::spanning(a, b);
  const LemmaSweep sweep = cfg.serial ? serial::verify_lemma_exhaustive(cfg.k, a, b)
                                      : parallel::verify_lemma_exhaustive(cfg.k, a, b, cfg.jobs);
  out << sweep.found << '/' << sweep.checked << " witnesses found\n";
  if (!sweep.ok()) {
    err << "first coloring without a witness: enumeration index " << *sweep.first_failure << '\n';
    return kExitPropertyFailed;
  }
  return kExitOk;
}

CircleMapCandidate circle_map(const std::string& spec) {
  const auto [name, params] = parse_map_spec(spec);
  return builtin_circle_candidate(name, params);
}

int torus_cycles_cmd(const CliConfig& cfg, std::ostream& out) {
  const TorusSurface torus(cfg.k);
  const CircleMapCandidate cand = circle_map(cfg.map);
  const Coloring c = sample_coloring(cfg.k, cand);
  print(out, io::to_json(all_torus_cycles(torus, c), c));
  return kExitOk;
}

int mean_certify_cmd(const CliConfig& cfg, std::ostream& out) {
  if (!(cfg.tol >= 0.0)) throw Error(Errc::BadParams, "tolerance must be non-negative");
  const CircleMapCandidate cand = circle_map(cfg.map);
  print(out, io::to_json(certify_mean_candidate(cand, cfg.k_list, cfg.tol)));
  return kExitOk;
}

int borsuk_certify_cmd(const CliConfig& cfg, std::ostream& out) {
  const auto [name, params] = parse_map_spec(cfg.map);
  const DiskMapCandidate cand = builtin_disk_candidate(name, params);
  print(out, io::to_json(certify_retraction_candidate(cand, cfg.k)));
  return kExitOk;
}

int ls_approx_cmd(const CliConfig& cfg, std::ostream& out) {
  if (!(cfg.epsilon > 0.0) || !std::isfinite(cfg.epsilon)) throw Error(Errc::BadEpsilon, "epsilon must be positive");
  std::vector<PointSet> sequence;
  for (const std::string& path : cfg.inputs) sequence.push_back(io::point_set_from_json(io::read_json_file(path)));
  const int k_ref = cfg.k_ref > 0 ? cfg.k_ref : static_cast<int>(std::ceil(8.0 / cfg.epsilon));
  print(out, io::to_json(upper_limit_approx(sequence, cfg.epsilon, k_ref, cfg.tail_fraction)));
  return kExitOk;
}

int render_cmd(const CliConfig& cfg, std::ostream& err) {
  RenderInput input;
  for (const std::string& path : cfg.inputs) {
    const io::Json j = io::read_json_file(path);
    if (j.contains("values")) {
      input.coloring = io::coloring_from_json(j);
    } else if (j.contains("simplexes")) {
      input.chains.push_back(io::chain_from_json(j));
    } else if (j.contains("cycles")) {
      if (j.contains("coloring")) input.coloring = io::coloring_from_json(j.at("coloring"));
      for (const io::Json& c : j.at("cycles")) input.chains.push_back(io::chain_from_json(c));
    } else {
      throw Error(Errc::BadInput, "'" + path + "' is neither a coloring nor a chain");
    }
  }
  RenderOptions opts;
  opts.cell = cfg.cell;
  io::write_text_file(cfg.out_path, render_svg(input, opts));
  err << "wrote " << cfg.out_path << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Gate-chain tracing on triangulated grids and obstruction certificates", "chaintrace"};
  app.require_subcommand(1);

  auto* grid = app.add_subcommand("grid", "Combinatorial square D2(k)")->require_subcommand(1);
  auto* grid_info_sub = grid->add_subcommand("info", "Vertex, simplex and face counts");
  grid_info_sub->add_option("--k", cfg.k, "Resolution")->required();

  auto* chain = app.add_subcommand("chain", "Chain tracing")->require_subcommand(1);
  auto* trace = chain->add_subcommand("trace", "Trace the maximal chain from a boundary gate");
  trace->add_option("--k", cfg.k, "Resolution")->required();
  trace->add_option("--coloring", cfg.coloring_path, "Coloring JSON")->required();
  trace->add_option("--start", cfg.start, "SIDE:INDEX (bottom/right/top/left, zero-based ccw)")->required();

  auto* lemma = app.add_subcommand("lemma", "Two-arc chain lemma")->require_subcommand(1);
  auto* witness = lemma->add_subcommand("witness", "Chain meeting both arcs of the rectangle ab");
  witness->add_option("--k", cfg.k, "Resolution")->required();
  witness->add_option("--coloring", cfg.coloring_path, "Coloring JSON")->required();
  witness->add_option("--a", cfg.a, "Corner I,J")->required();
  witness->add_option("--b", cfg.b, "Opposite corner I,J")->required();
  auto* exhaustive = lemma->add_subcommand("exhaustive", "Check every coloring with f(a) = -f(b)");
  exhaustive->add_option("--k", cfg.k, "Resolution")->required();
  exhaustive->add_option("--a", cfg.a, "Corner I,J")->required();
  exhaustive->add_option("--b", cfg.b, "Opposite corner I,J")->required();
  exhaustive->add_option("--jobs", cfg.jobs, "Worker threads (0 = all)")->check(CLI::NonNegativeNumber);
  exhaustive->add_flag("--serial", cfg.serial, "Use the serial reference kernel");

  auto* torus = app.add_subcommand("torus", "Torus cycles")->require_subcommand(1);
  auto* cycles = torus->add_subcommand("cycles", "All cycles of a sampled coloring");
  cycles->add_option("--k", cfg.k, "Resolution")->required();
  cycles->add_option("--map", cfg.map, "Circle candidate NAME[:PARAMS]")->required();

  auto* mean = app.add_subcommand("mean", "2-mean candidates")->require_subcommand(1);
  auto* mean_certify = mean->add_subcommand("certify", "Obstruction certificate for a candidate mean");
  mean_certify->add_option("--map", cfg.map, "Circle candidate NAME[:PARAMS]")->required();
  mean_certify->add_option("--k-list", cfg.k_list, "Resolutions, comma separated")->required()->delimiter(',');
  mean_certify->add_option("--tol", cfg.tol, "Tolerance for the algebraic checks");

  auto* borsuk = app.add_subcommand("borsuk", "Disk retraction candidates")->require_subcommand(1);
  auto* borsuk_certify = borsuk->add_subcommand("certify", "Obstruction certificate for a candidate retraction");
  borsuk_certify->add_option("--map", cfg.map, "Disk candidate NAME[:PARAMS]")->required();
  borsuk_certify->add_option("--k", cfg.k, "Resolution")->required();

  auto* ls = app.add_subcommand("ls", "Upper limits")->require_subcommand(1);
  auto* ls_approx = ls->add_subcommand("approx", "Approximate upper limit of a sequence of point sets");
  ls_approx->add_option("--inputs", cfg.inputs, "PointSet JSON files, in sequence order")->required();
  ls_approx->add_option("--epsilon", cfg.epsilon, "Ball radius")->required();
  ls_approx->add_option("--k-ref", cfg.k_ref, "Reference grid resolution (default ceil(8/epsilon))");
  ls_approx->add_option("--tail-fraction", cfg.tail_fraction, "Required hit fraction over the tail");

  auto* render = app.add_subcommand("render", "SVG drawing of colorings and chains");
  render->add_option("--input", cfg.inputs, "Coloring, chain or torus-cycle JSON (repeatable)")->required();
  render->add_option("--out", cfg.out_path, "Output SVG path")->required();
  render->add_option("--cell", cfg.cell, "Cell size in pixels");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (grid_info_sub->parsed()) return grid_info(cfg, out);
    if (trace->parsed()) return chain_trace(cfg, out, err);
    if (witness->parsed()) return lemma_witness_cmd(cfg, out, err);
    if (exhaustive->parsed()) return lemma_exhaustive_cmd(cfg, out, err);
    if (cycles->parsed()) return torus_cycles_cmd(cfg, out);
    if (mean_certify->parsed()) return mean_certify_cmd(cfg, out);
    if (borsuk_certify->parsed()) return borsuk_certify_cmd(cfg, out);
    if (ls_approx->parsed()) return ls_approx_cmd(cfg, out);
    if (render->parsed()) return render_cmd(cfg, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "property violated: " << e.what() << '\n';
    return kExitPropertyFailed;
  }
  err << "no command given\n";
  return kExitUsage;
}

}  // namespace chaintrace
