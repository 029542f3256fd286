#include "framepath/diagonal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "framepath/decomp.hpp"

namespace framepath {

int BlockPartition::block_of(int index) const {
  for (int b = 0; b < block_count(); ++b)
    for (int i : blocks[static_cast<std::size_t>(b)])
      if (i == index) return b;
  fail(Err::InvalidArgument, "block_of: index not covered by partition");
}

Matrix DiagonalProjection::to_matrix(Field field) const {
  Matrix m(n, n, field);
  for (int i : support) {
    if (i < 0 || i >= n) fail(Err::InvalidArgument, "diagonal projection support out of range");
    m(i, i) = 1.0;
  }
  return m;
}

DiagonalProjection DiagonalProjection::complement() const {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (int i : support) in[static_cast<std::size_t>(i)] = 1;
  DiagonalProjection c;
  c.n = n;
  for (int i = 0; i < n; ++i)
    if (!in[static_cast<std::size_t>(i)]) c.support.push_back(i);
  return c;
}

DiagonalVector expectation(const Matrix& x) {
  require_square(x, "expectation");
  DiagonalVector d;
  d.field = x.field();
  d.entries.resize(static_cast<std::size_t>(x.rows()));
  for (int i = 0; i < x.rows(); ++i) d.entries[static_cast<std::size_t>(i)] = x(i, i);
  return d;
}

namespace {

struct UnionFind {
  std::vector<int> parent, size;

  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)), size(static_cast<std::size_t>(n), 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    int root = x;
    while (parent[static_cast<std::size_t>(root)] != root) root = parent[static_cast<std::size_t>(root)];
    while (x != root) {
      int next = parent[static_cast<std::size_t>(x)];
      parent[static_cast<std::size_t>(x)] = root;
      x = next;
    }
    return root;
  }
  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[static_cast<std::size_t>(a)] < size[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    size[static_cast<std::size_t>(a)] += size[static_cast<std::size_t>(b)];
  }
};

}  // namespace

BlockPartition minimal_block_decomposition(const Matrix& x, double tol) {
  require_square(x, "minimal_block_decomposition");
  const int n = x.rows();
  UnionFind uf(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(x(i, j)) > tol || std::abs(x(j, i)) > tol) uf.merge(i, j);

  std::vector<int> root_to_block(static_cast<std::size_t>(n), -1);
  BlockPartition part;
  for (int i = 0; i < n; ++i) {
    const int r = uf.find(i);
    int& b = root_to_block[static_cast<std::size_t>(r)];
    if (b < 0) {
      b = part.block_count();
      part.blocks.emplace_back();
    }
    part.blocks[static_cast<std::size_t>(b)].push_back(i);
  }
  return part;
}

int relative_commutant_dimension(const Matrix& p, double tol) {
  return minimal_block_decomposition(p, tol).block_count();
}

std::vector<BlockTrace> block_trace_profile(const DiagonalVector& d, const Matrix& p,
                                            const BlockPartition& part,
                                            const ToleranceConfig& cfg) {
  require_projection(p, cfg.residual_tol * (1.0 + p.frobenius_norm()), "block_trace_profile");
  if (d.size() != p.rows()) fail(Err::DimensionMismatch, "block_trace_profile: diagonal length");

  std::vector<BlockTrace> out;
  out.reserve(part.blocks.size());
  for (const auto& block : part.blocks) {
    BlockTrace bt{cplx(0.0, 0.0), 0};
    const int m = static_cast<int>(block.size());
    Matrix comp(m, m, p.field());
    for (int a = 0; a < m; ++a) {
      bt.trace += d.entries[static_cast<std::size_t>(block[static_cast<std::size_t>(a)])];
      for (int b = 0; b < m; ++b)
        comp(a, b) = p(block[static_cast<std::size_t>(a)], block[static_cast<std::size_t>(b)]);
    }
    bt.rank = rank(comp, cfg.zero_tol);
    out.push_back(bt);
  }
  return out;
}

}  // namespace framepath
