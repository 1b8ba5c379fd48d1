#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "chaintrace/candidates.hpp"
#include "chaintrace/chain.hpp"
#include "chaintrace/coloring.hpp"
#include "chaintrace/limits.hpp"
#include "chaintrace/torus.hpp"

namespace chaintrace {

enum class CertificateKind { SymmetryViolation, RetractionViolation, ContinuityGap, EvaluationFailure };

std::string_view certificate_kind_name(CertificateKind kind);

// r(x,y) and r(y,x) differ by `deviation` on the circle.
struct SymmetryWitness {
  Point2 point;
  double deviation = 0.0;
};

// The candidate moves a point that it must fix: (x,x) for a mean, a boundary
// point for a disk retraction. Deviation in circle or boundary arc-length.
struct RetractionWitness {
  Point2 point;
  double deviation = 0.0;
};

// Endpoints of one face of one traced-chain simplex whose images lie `gap`
// apart (circle distance, or boundary arc-length for disk candidates).
struct ContinuityWitness {
  int k = 0;
  GridPoint a;
  GridPoint b;
  double gap = 0.0;
};

struct UndefinedWitness {
  int k = 0;
  Point2 point;
};

using Witness = std::variant<SymmetryWitness, RetractionWitness, ContinuityWitness, UndefinedWitness>;

struct KTrace {
  int k = 0;
  double gap = 0.0;
  std::optional<ContinuityWitness> witness;
  Coloring coloring = Coloring::constant(2, 1);
  std::vector<Chain> chains;
  std::vector<Winding> windings;           // torus cycles only
  std::vector<int> cycle_components;       // epsilon-components of each cycle's vertex set (epsilon = 2/k)
  std::size_t approx_classes = 0;          // size of the Approx partition of the square
  std::vector<std::size_t> corner_classes; // Approx class of (0,0), (k,0), (k,k), (0,k)
};

struct CertificateReport {
  std::string candidate;
  CertificateKind kind = CertificateKind::ContinuityGap;
  Witness witness;
  std::vector<KTrace> per_k;
  std::optional<LsApprox> upper_limit;  // over the per-k cycle vertex sets
};

// Stage 1 scans the k-grids for symmetry, then retraction failures (> tol).
// If both hold, stage 2 samples the coloring at each k, traces all torus
// cycles and reports the largest image gap across a face of a cycle simplex.
// Throws BadParams for an empty list or k < 2.
CertificateReport certify_mean_candidate(const CircleMapCandidate& candidate, std::span<const int> k_list,
                                         double tol = 1e-9);

// Colors v by -1 iff its image lies on the bottom or left side, verifies the
// two boundary gates, traces the chain joining them, and reports the largest
// boundary arc-length gap across a face of a chain simplex. Throws KTooSmall,
// NotBoundaryValued or BoundaryNotIdentity.
CertificateReport certify_retraction_candidate(const DiskMapCandidate& candidate, int k, double tol = 1e-12);

// Corner convention: an image point is class -1 iff x = 0 or y = 0 (to tol).
int disk_side_class(Point2 image, double tol = 1e-12);

}  // namespace chaintrace
