#pragma once

#include <variant>
#include <vector>

#include "framepath/matrix.hpp"

namespace framepath {

enum class PathKind : std::uint8_t { Projection, Idempotent };

const char* path_kind_name(PathKind k);

struct PathSample {
  double t = 0.0;  // parameter within the piece, in [0, 1]
  Matrix m;
};

/// Segment (1-s)*start + s*end; valid when both endpoints lie in a common
/// affine set of idempotents (same range or same kernel).
struct AffineSegment {
  Matrix start;
  Matrix end;
};

struct SampledCurve {
  std::vector<PathSample> samples;
};

using PathPiece = std::variant<AffineSegment, SampledCurve>;

const Matrix& piece_start(const PathPiece& p);
const Matrix& piece_end(const PathPiece& p);

/// Piecewise path of matrices with a pointwise algebraic law (projection or
/// idempotent) and a fixed diagonal along the whole path.
struct OperatorPath {
  PathKind kind = PathKind::Projection;
  DiagonalVector fixed_diagonal;
  std::vector<PathPiece> pieces;

  bool empty() const noexcept { return pieces.empty(); }
  const Matrix& start() const;
  const Matrix& end() const;
};

OperatorPath constant_path(PathKind kind, const Matrix& m);
OperatorPath reverse_path(const OperatorPath& p);

/// Appends b to a; endpoints must agree within `glue_tol`.
OperatorPath concat_paths(const OperatorPath& a, const OperatorPath& b, double glue_tol);

/// Flattens a path into a matrix sequence: sampled pieces contribute their
/// samples, affine pieces are subdivided so consecutive steps stay below
/// `max_step`. Consecutive duplicates at piece joints are dropped.
std::vector<Matrix> flatten_path(const OperatorPath& p, double max_step);

}  // namespace framepath
