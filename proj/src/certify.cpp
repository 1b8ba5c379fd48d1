#include "chaintrace/certify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "chaintrace/error.hpp"
#include "chaintrace/kernels.hpp"

namespace chaintrace {

std::string_view certificate_kind_name(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::SymmetryViolation: return "SymmetryViolation";
    case CertificateKind::RetractionViolation: return "RetractionViolation";
    case CertificateKind::ContinuityGap: return "ContinuityGap";
    case CertificateKind::EvaluationFailure: return "EvaluationFailure";
  }
  return "Unknown";
}

int disk_side_class(Point2 image, double tol) {
  return (std::fabs(image.x) <= tol || std::fabs(image.y) <= tol) ? -1 : 1;
}

namespace {

Point2 lattice_point(int k, GridPoint p) {
  return {static_cast<double>(p.i) / k, static_cast<double>(p.j) / k};
}

void record_partition(KTrace& trace) {
  const int k = trace.coloring.k();
  const auto partition = components(trace.coloring, Rectangle{{0, 0}, {k, k}}, Relation::Approx);
  trace.approx_classes = partition.classes.size();
  for (const GridPoint corner : {GridPoint{0, 0}, GridPoint{k, 0}, GridPoint{k, k}, GridPoint{0, k}}) {
    trace.corner_classes.push_back(static_cast<std::size_t>(partition.class_of(corner)));
  }
}

// Largest value of gap(a, b) over the faces of the chain simplexes; ties keep
// the first face met.
template <typename GapFn>
void widen_gap(KTrace& trace, const Chain& chain, GapFn&& gap) {
  for (const Simplex& s : chain.simplexes) {
    for (const Face& f : s.faces()) {
      const double g = gap(f.first(), f.second());
      if (!trace.witness || g > trace.gap) {
        trace.gap = g;
        trace.witness = ContinuityWitness{trace.k, f.first(), f.second(), g};
      }
    }
  }
}

KTrace trace_mean_at(const CircleMapCandidate& candidate, int k) {
  KTrace trace;
  trace.k = k;
  trace.coloring = parallel::sample_coloring(k, candidate);

  std::vector<double> theta(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      theta[static_cast<std::size_t>(i) * k + j] =
          *candidate.eval(static_cast<double>(i) / k, static_cast<double>(j) / k);
  auto image = [&](GridPoint p) { return theta[static_cast<std::size_t>(p.i % k) * k + (p.j % k)]; };

  const TorusSurface torus(k);
  for (TorusCycle& cycle : all_torus_cycles(torus, trace.coloring)) {
    widen_gap(trace, cycle.chain, [&](GridPoint a, GridPoint b) { return circle_distance(image(a), image(b)); });

    std::set<GridPoint> vertices;
    for (const Simplex& s : cycle.chain.simplexes)
      for (const GridPoint v : s.vertices()) vertices.insert({v.i % k, v.j % k});
    PointSet set{Metric::Torus, {}};
    for (const GridPoint v : vertices) set.points.push_back(lattice_point(k, v));
    trace.cycle_components.push_back(connectivity_check(set, 2.0 / k));

    trace.windings.push_back(cycle.winding);
    trace.chains.push_back(std::move(cycle.chain));
  }
  record_partition(trace);
  return trace;
}

PointSet cycle_vertices(const KTrace& trace) {
  const int k = trace.k;
  std::set<GridPoint> vertices;
  for (const Chain& chain : trace.chains)
    for (const Simplex& s : chain.simplexes)
      for (const GridPoint v : s.vertices()) vertices.insert({v.i % k, v.j % k});
  PointSet set{Metric::Torus, {}};
  for (const GridPoint v : vertices) set.points.push_back(lattice_point(k, v));
  return set;
}

bool on_unit_boundary(Point2 p, double tol) {
  if (p.x < -tol || p.x > 1.0 + tol || p.y < -tol || p.y > 1.0 + tol) return false;
  const double d = std::min({std::fabs(p.x), std::fabs(1.0 - p.x), std::fabs(p.y), std::fabs(1.0 - p.y)});
  return d <= tol;
}

}  // namespace

CertificateReport certify_mean_candidate(const CircleMapCandidate& candidate, std::span<const int> k_list,
                                         double tol) {
  if (k_list.empty()) throw Error(Errc::BadParams, "k list is empty");
  for (int k : k_list)
    if (k < 2) throw Error(Errc::KTooSmall, "k = " + std::to_string(k) + " but k > 1 is required");

  CertificateReport report;
  report.candidate = candidate.name;

  // Stage 1: algebraic properties on every grid.
  ScanBest symmetry;
  ScanBest retraction;
  int symmetry_k = 0;
  int retraction_k = 0;
  for (int k : k_list) {
    const MeanScan scan = parallel::scan_mean_candidate(candidate, k);
    if (scan.undefined) {
      report.kind = CertificateKind::EvaluationFailure;
      report.witness = UndefinedWitness{k, lattice_point(k, *scan.undefined)};
      return report;
    }
    if (scan.symmetry.deviation > symmetry.deviation) {
      symmetry = scan.symmetry;
      symmetry_k = k;
    }
    if (scan.retraction.deviation > retraction.deviation) {
      retraction = scan.retraction;
      retraction_k = k;
    }
  }
  if (symmetry.deviation > tol) {
    report.kind = CertificateKind::SymmetryViolation;
    report.witness = SymmetryWitness{lattice_point(symmetry_k, symmetry.at), symmetry.deviation};
    return report;
  }
  if (retraction.deviation > tol) {
    report.kind = CertificateKind::RetractionViolation;
    report.witness = RetractionWitness{lattice_point(retraction_k, retraction.at), retraction.deviation};
    return report;
  }

  // Stage 2: continuity along the torus chains.
  report.kind = CertificateKind::ContinuityGap;
  ContinuityWitness best;
  bool have_best = false;
  std::vector<PointSet> sequence;
  int k_max = 0;
  for (int k : k_list) {
    KTrace trace = trace_mean_at(candidate, k);
    if (trace.witness && (!have_best || trace.gap > best.gap)) {
      best = *trace.witness;
      have_best = true;
    }
    PointSet set = cycle_vertices(trace);
    if (!set.points.empty()) sequence.push_back(std::move(set));
    k_max = std::max(k_max, k);
    report.per_k.push_back(std::move(trace));
  }
  report.witness = best;
  if (!sequence.empty()) report.upper_limit = upper_limit_approx(sequence, 2.0 / k_max, 4 * k_max, 0.5);
  return report;
}

CertificateReport certify_retraction_candidate(const DiskMapCandidate& candidate, int k, double tol) {
  const CombinatorialSquare sq(k);
  CertificateReport report;
  report.candidate = candidate.name;

  const int side = k + 1;
  std::vector<Point2> images(static_cast<std::size_t>(side) * side);
  auto image = [&](GridPoint p) -> Point2& { return images[static_cast<std::size_t>(p.i) * side + p.j]; };
  for (const GridPoint v : sq.vertices()) {
    const Point2 at = lattice_point(k, v);
    const auto out = candidate.eval(at.x, at.y);
    if (!out) {
      report.kind = CertificateKind::EvaluationFailure;
      report.witness = UndefinedWitness{k, at};
      return report;
    }
    if (!on_unit_boundary(*out, tol)) {
      throw Error(Errc::NotBoundaryValued, "image of (" + std::to_string(at.x) + "," + std::to_string(at.y) +
                                               ") is not on the square boundary");
    }
    image(v) = *out;
  }

  KTrace trace;
  trace.k = k;
  trace.coloring = Coloring::from_function(k, [&](GridPoint p) { return disk_side_class(image(p), tol); });
  const auto gates = boundary_gates(trace.coloring, sq.bounds());
  if (gates.size() != 2) {
    throw Error(Errc::BoundaryNotIdentity,
                "expected 2 boundary gates, found " + std::to_string(gates.size()));
  }

  RetractionWitness moved{{}, 0.0};
  for (const GridPoint v : sq.bounds().boundary_cycle()) {
    const double d = boundary_arc_distance(image(v), lattice_point(k, v));
    if (d > moved.deviation) moved = {lattice_point(k, v), d};
  }
  if (moved.deviation > std::max(tol, 1e-9)) {
    report.kind = CertificateKind::RetractionViolation;
    report.witness = moved;
    return report;
  }

  Chain chain = trace_maximal_chain(sq, gates[0], trace.coloring);
  if (chain.gates.back() != gates[1]) throw std::logic_error("chain did not join the two boundary gates");
  widen_gap(trace, chain, [&](GridPoint a, GridPoint b) { return boundary_arc_distance(image(a), image(b)); });
  trace.chains.push_back(std::move(chain));
  record_partition(trace);

  report.kind = CertificateKind::ContinuityGap;
  report.witness = *trace.witness;
  report.per_k.push_back(std::move(trace));
  return report;
}

}  // namespace chaintrace
