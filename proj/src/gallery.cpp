#include "ulrich/gallery.hpp"

#include <array>
#include <stdexcept>

namespace ulrich {

namespace {

HomPoly var(int n, int i) { return HomPoly::term(1, Monomial::variable(n, i)); }

// Entry from a variable-index pattern: -1 for zero, i for x_i.
LinearMatrix from_pattern(int n, const std::vector<std::vector<int>>& pattern) {
  PolyMatrix m(n, int(pattern.size()), int(pattern[0].size()));
  for (size_t r = 0; r < pattern.size(); ++r)
    for (size_t c = 0; c < pattern[r].size(); ++c)
      if (pattern[r][c] >= 0) m.at(int(r), int(c)) = var(n, pattern[r][c]);
  return LinearMatrix(std::move(m));
}

}  // namespace

LinearMatrix banded_alpha(int d) {
  if (d < 2) throw std::invalid_argument("banded_alpha: requires d >= 2");
  // Displayed (d-1) x (d+1): row i carries x, y, z at columns i, i+1, i+2.
  PolyMatrix displayed(2, d - 1, d + 1);
  for (int i = 0; i < d - 1; ++i)
    for (int v = 0; v < 3; ++v) displayed.at(i, i + v) = var(2, v);
  return LinearMatrix(std::move(displayed)).transposed();
}

std::pair<LinearMatrix, LinearMatrix> p3_pair() {
  const HomPoly x = var(3, 0), y = var(3, 1), z = var(3, 2), w = var(3, 3);
  const HomPoly o;  // zero

  // Displayed beta (4x5), signs exactly as printed.
  PolyMatrix beta(3, 4, 5);
  const std::array<std::array<HomPoly, 5>, 4> beta_rows = {{
      {y, z, w, o, o},
      {-x, o, o, z, w},
      {w, -x, o, -y, o},
      {-z, o, -x, o, -y},
  }};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 5; ++c) beta.at(r, c) = beta_rows[r][c];

  // Displayed alpha (1x4).
  PolyMatrix alpha(3, 1, 4);
  alpha.at(0, 0) = x;
  alpha.at(0, 1) = y;
  alpha.at(0, 2) = z;
  alpha.at(0, 3) = w;

  return {LinearMatrix(std::move(beta)).transposed(), LinearMatrix(std::move(alpha)).transposed()};
}

LinearMatrix p2_cubic_alpha() {
  // Displayed 3x6 over {x1, x2, x3}; each cell lists the variables present.
  const std::vector<std::vector<std::vector<int>>> cells = {
      {{0}, {1}, {1, 2}, {1, 2}, {2}, {0, 1}},
      {{2}, {0, 2}, {1}, {0, 1, 2}, {}, {1}},
      {{0}, {1, 2}, {0, 1, 2}, {1, 2}, {2}, {2}},
  };
  PolyMatrix displayed(2, 3, 6);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 6; ++c) {
      HomPoly entry;
      for (int v : cells[r][c]) entry = entry + var(2, v);
      displayed.at(r, c) = std::move(entry);
    }
  return LinearMatrix(std::move(displayed)).transposed();
}

CBlocks extract_blocks(const LinearMatrix& alpha) {
  if (alpha.n() != 2 || alpha.rows() != 6 || alpha.cols() != 3)
    throw std::invalid_argument("extract_blocks: expects the stored 6x3 shape on P^2");
  CBlocks blocks;
  for (int p = 0; p < 3; ++p) {
    blocks.A[p] = QMatrix(3, 3);
    blocks.B[p] = QMatrix(3, 3);
  }
  const Monomial xs[3] = {Monomial::variable(2, 0), Monomial::variable(2, 1),
                          Monomial::variable(2, 2)};
  // a^p_{i,j} = coefficient of x_p in displayed (i, j) = stored (j, i).
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 6; ++j)
      for (int p = 0; p < 3; ++p) {
        const Rational a = alpha.at(j, i).coeff(xs[p]);
        if (j < 3)
          blocks.A[p].at(i, j) = a;
        else
          blocks.B[p].at(i, j - 3) = a;
      }
  return blocks;
}

QMatrix build_C(const CBlocks& blocks) {
  // Block rows follow the printed order: the pure equations (p,p) for
  // p = 1,2,3, then the mixed ones (1,2), (2,3), (1,3).
  const std::array<std::pair<int, int>, 6> row_order = {{{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}, {0, 2}}};
  QMatrix c(18, 18);
  auto block_at = [&](int p, int half) -> const QMatrix& {
    return half == 0 ? blocks.A[p] : blocks.B[p];
  };
  for (int row_block = 0; row_block < 6; ++row_block) {
    const auto [p, q] = row_order[row_block];
    for (int i = 0; i < 3; ++i)
      for (int m = 0; m < 3; ++m) {
        // Coefficient of b^{j,m}: a^p at m = q and a^q at m = p (one copy
        // each; the pure case p = q contributes a^p once).
        int src = -1;
        if (p == q) {
          if (m == p) src = p;
        } else if (m == p) {
          src = q;
        } else if (m == q) {
          src = p;
        }
        if (src < 0) continue;
        for (int j = 0; j < 6; ++j)
          c.at(3 * row_block + i, 6 * m + j) = block_at(src, j / 3).at(i, j % 3);
      }
  }
  return c;
}

QMatrix delta_matrix(const LinearMatrix& alpha, const UlrichContext& ctx) {
  if (ctx.n != 2) throw std::invalid_argument("delta_matrix: only defined on P^2");
  const Checked<ResolutionSignature> sig = resolution_ranks(ctx);
  if (!sig.ok()) throw std::invalid_argument("delta_matrix: " + sig.violation);
  const int a1 = int(sig->ranks[0]), a2 = int(sig->ranks[1]);
  if (alpha.rows() != a1 || alpha.cols() != a2)
    throw std::invalid_argument("delta_matrix: shape mismatch: expected " + std::to_string(a1) +
                                "x" + std::to_string(a2) + ", got " + std::to_string(alpha.rows()) +
                                "x" + std::to_string(alpha.cols()));

  const auto src_basis = monomial_basis(2, ctx.d - 2);   // entries of f
  const auto dst_basis = monomial_basis(2, ctx.d - 1);   // entries of f . alpha
  std::map<Monomial, int, GrevlexGreater> dst_index;
  for (size_t i = 0; i < dst_basis.size(); ++i) dst_index.emplace(dst_basis[i], int(i));

  // Monomial-major coordinates on both sides, matching the printed y_k
  // layout for d = 3.
  QMatrix delta(int(dst_basis.size()) * a2, int(src_basis.size()) * a1);
  for (int u = 0; u < a1; ++u)
    for (int v = 0; v < a2; ++v) {
      const HomPoly& entry = alpha.at(u, v);
      if (entry.is_zero()) continue;
      for (size_t s = 0; s < src_basis.size(); ++s)
        for (const auto& [mono, coeff] : entry.terms()) {
          const int row = dst_index.at(mono * src_basis[s]) * a2 + v;
          delta.at(row, int(s) * a1 + u) += coeff;
        }
    }
  return delta;
}

std::vector<std::string> gallery_names() {
  return {"p2-banded-d2", "p2-banded-d3", "p2-banded-d4", "p2-banded-d5", "p3-d2", "p2-cubic-r3"};
}

bool is_gallery_name(const std::string& name) {
  for (const std::string& known : gallery_names())
    if (known == name) return true;
  return false;
}

GalleryFixture gallery_fixture(const std::string& name) {
  const std::string banded_prefix = "p2-banded-d";
  if (name.rfind(banded_prefix, 0) == 0) {
    const int d = std::stoi(name.substr(banded_prefix.size()));
    LinearMatrix stored = banded_alpha(d);
    return {name, UlrichContext(2, d, 2), {stored}, {stored.transposed()}};
  }
  if (name == "p3-d2") {
    auto [d1, d2] = p3_pair();
    return {name, UlrichContext(3, 2, 2), {d1, d2}, {d1.transposed(), d2.transposed()}};
  }
  if (name == "p2-cubic-r3") {
    LinearMatrix stored = p2_cubic_alpha();
    return {name, UlrichContext(2, 3, 3), {stored}, {stored.transposed()}};
  }
  throw std::invalid_argument("unknown gallery fixture '" + name + "'");
}

LinearResolution gallery_resolution(const std::string& name) {
  GalleryFixture fixture = gallery_fixture(name);
  return LinearResolution(fixture.ctx, std::move(fixture.differentials));
}

}  // namespace ulrich
