#include "framepath/operator_path.hpp"

#include <algorithm>
#include <cmath>

#include "framepath/diagonal.hpp"

namespace framepath {

const char* path_kind_name(PathKind k) {
  return k == PathKind::Projection ? "projection" : "idempotent";
}

const Matrix& piece_start(const PathPiece& p) {
  if (const auto* seg = std::get_if<AffineSegment>(&p)) return seg->start;
  const auto& curve = std::get<SampledCurve>(p);
  if (curve.samples.empty()) fail(Err::InvalidArgument, "empty sampled curve");
  return curve.samples.front().m;
}

const Matrix& piece_end(const PathPiece& p) {
  if (const auto* seg = std::get_if<AffineSegment>(&p)) return seg->end;
  const auto& curve = std::get<SampledCurve>(p);
  if (curve.samples.empty()) fail(Err::InvalidArgument, "empty sampled curve");
  return curve.samples.back().m;
}

const Matrix& OperatorPath::start() const {
  if (pieces.empty()) fail(Err::InvalidArgument, "empty path has no start");
  return piece_start(pieces.front());
}

const Matrix& OperatorPath::end() const {
  if (pieces.empty()) fail(Err::InvalidArgument, "empty path has no end");
  return piece_end(pieces.back());
}

OperatorPath constant_path(PathKind kind, const Matrix& m) {
  OperatorPath p;
  p.kind = kind;
  p.fixed_diagonal = expectation(m);
  SampledCurve curve;
  curve.samples.push_back({0.0, m});
  curve.samples.push_back({1.0, m});
  p.pieces.emplace_back(std::move(curve));
  return p;
}

OperatorPath reverse_path(const OperatorPath& p) {
  OperatorPath r;
  r.kind = p.kind;
  r.fixed_diagonal = p.fixed_diagonal;
  for (auto it = p.pieces.rbegin(); it != p.pieces.rend(); ++it) {
    if (const auto* seg = std::get_if<AffineSegment>(&*it)) {
      r.pieces.emplace_back(AffineSegment{seg->end, seg->start});
    } else {
      const auto& curve = std::get<SampledCurve>(*it);
      SampledCurve rev;
      rev.samples.reserve(curve.samples.size());
      for (auto s = curve.samples.rbegin(); s != curve.samples.rend(); ++s)
        rev.samples.push_back({1.0 - s->t, s->m});
      r.pieces.emplace_back(std::move(rev));
    }
  }
  return r;
}

OperatorPath concat_paths(const OperatorPath& a, const OperatorPath& b, double glue_tol) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.kind != b.kind) fail(Err::InvalidArgument, "concat_paths: kind mismatch");
  if (distance(a.end(), b.start()) > glue_tol)
    fail(Err::InvalidArgument, "concat_paths: endpoints do not glue");
  OperatorPath r = a;
  r.pieces.insert(r.pieces.end(), b.pieces.begin(), b.pieces.end());
  return r;
}

std::vector<Matrix> flatten_path(const OperatorPath& p, double max_step) {
  std::vector<Matrix> out;
  auto push = [&](const Matrix& m) {
    if (!out.empty() && distance(out.back(), m) < 1e-14) return;
    out.push_back(m);
  };
  for (const auto& piece : p.pieces) {
    if (const auto* seg = std::get_if<AffineSegment>(&piece)) {
      const double len = distance(seg->start, seg->end);
      const int steps = std::max(1, static_cast<int>(std::ceil(len / max_step)));
      for (int k = 0; k <= steps; ++k) {
        const double s = static_cast<double>(k) / steps;
        push((1.0 - s) * seg->start + s * seg->end);
      }
    } else {
      for (const auto& sample : std::get<SampledCurve>(piece).samples) push(sample.m);
    }
  }
  return out;
}

}  // namespace framepath
