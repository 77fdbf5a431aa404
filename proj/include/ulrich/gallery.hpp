#ifndef ULRICH_GALLERY_HPP
#define ULRICH_GALLERY_HPP

#include <string>
#include <utility>
#include <vector>

#include "ulrich/resolution.hpp"

namespace ulrich {

/// Banded P^2 matrix for (P^2, O(d), r = 2): the x,y,z band shifting one
/// column per displayed row. Displayed (d-1) x (d+1); stored transposed as
/// (d+1) x (d-1) under the column convention. Requires d >= 2.
LinearMatrix banded_alpha(int d);

/// The (P^3, O(2), r = 2) pair: D_1 (5x4, transpose of the displayed 4x5
/// beta, signs exactly as printed) and D_2 (4x1, transpose of the displayed
/// alpha = (x y z w)).
std::pair<LinearMatrix, LinearMatrix> p3_pair();

/// The rank-3 cubic example on P^2: stored 6x3 transpose of the displayed
/// 3x6 matrix, all coefficients in {0, 1}.
LinearMatrix p2_cubic_alpha();

/// Six 3x3 coefficient blocks of a 6x3 stored P^2 matrix: A_p/B_p hold the
/// x_p-coefficients of the displayed columns 1..3 / 4..6.
struct CBlocks {
  QMatrix A[3], B[3];
};

CBlocks extract_blocks(const LinearMatrix& alpha);

/// The 18x18 coefficient matrix of the bilinear equations cutting out the
/// compositions f with f . alpha = 0, laid out exactly as printed: block
/// rows (1,1), (2,2), (3,3), (1,2), (2,3), (1,3); block columns ordered by
/// y_{6(p-1)+j}.
QMatrix build_C(const CBlocks& blocks);

/// Matrix of the composition map f |-> f . alpha on monomial-coefficient
/// coordinates, for alpha of the (2, d, r) resolution shape: source entries
/// of degree d-2, target entries of degree d-1, both sides monomial-major.
/// Its kernel is trivial iff the P^2 dual-map condition holds; for the
/// (2,3,3) shape it is 18x18 and agrees with build_C up to row permutation.
QMatrix delta_matrix(const LinearMatrix& alpha, const UlrichContext& ctx);

struct GalleryFixture {
  std::string name;
  UlrichContext ctx;
  std::vector<LinearMatrix> differentials;  // stored, column convention
  std::vector<LinearMatrix> displayed;      // as printed, for human audit
};

/// Fixture names: p2-banded-d2..p2-banded-d5, p3-d2, p2-cubic-r3.
std::vector<std::string> gallery_names();
bool is_gallery_name(const std::string& name);

GalleryFixture gallery_fixture(const std::string& name);
LinearResolution gallery_resolution(const std::string& name);

}  // namespace ulrich

#endif
