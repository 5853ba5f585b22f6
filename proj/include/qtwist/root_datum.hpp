#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qtwist/fin_ab_group.hpp"
#include "qtwist/rational.hpp"
#include "qtwist/smith.hpp"

namespace qtwist {

enum class LieFamily : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Simple Lie type, e.g. A1, D5, E7. Ranks: A >= 1, B,C >= 2, D >= 3,
/// E in {6,7,8}, F = 4, G = 2. Classical ranks are capped (default 8).
struct LieType {
  LieFamily family;
  int rank;

  std::string str() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }
  bool operator==(const LieType& o) const { return family == o.family && rank == o.rank; }

  static LieType parse(const std::string& s);
  static int classical_rank_cap();  // default 8
};

using RatVec = std::vector<Rat>;

/// Weight in the fundamental-weight basis (integer coefficients).
using Weight = std::vector<std::int64_t>;

inline bool is_dominant(const Weight& w) {
  for (auto c : w) if (c < 0) return false;
  return true;
}
inline std::int64_t coeff_height(const Weight& w) {
  std::int64_t h = 0;
  for (auto c : w) h += c;
  return h;
}

enum class FormKind { Long, Short };

/// Exact root-system data for a simple Lie type. Vectors live in a rational
/// ambient space whose bilinear form is ambient_scale * (dot product); the
/// short-normalized form <<a,a>> = 2 (short roots) is the ambient form, and
/// (a,a) = 2 on long roots is its 1/lacing multiple.
struct RootDatum {
  LieType type;
  std::size_t ambient_dim = 0;
  Rat ambient_scale;  // <<x,y>> = ambient_scale * sum x_i y_i

  std::vector<RatVec> simple_roots;
  std::vector<RatVec> positive_roots;
  std::vector<std::vector<std::int64_t>> cartan;  // a_ij = 2<<a_i,a_j>>/<<a_i,a_i>>
  std::vector<RatVec> fundamental_weights;
  RatVec rho_w;  // half-sum of positive roots

  int h_dual = 0;           // dual Coxeter number
  int lacing = 1;           // r^v in {1,2,3}
  std::int64_t n_g = 1;     // min n with n<<P,P>> integral
  std::vector<int> dual_involution;  // lambda_i* = lambda_{dual_involution[i]}

  std::size_t rank() const { return simple_roots.size(); }

  // <<x,y>> on ambient vectors
  Rat pair_short(const RatVec& x, const RatVec& y) const;
  // (x,y) = <<x,y>> / lacing
  Rat pair_long(const RatVec& x, const RatVec& y) const;

  RatVec to_ambient(const Weight& w) const;
  /// Coefficients of x in the simple-root basis (rational).
  RatVec root_coords(const RatVec& x) const;
  /// Fundamental coordinate 2<<x,a_i>>/<<a_i,a_i>>; integer for weights.
  Rat fundamental_coord(const RatVec& x, std::size_t i) const;

  /// Gram matrix of a form on the simple roots.
  std::vector<std::vector<Rat>> gram(FormKind k) const;
};

/// Builds the root datum; throws std::invalid_argument on bad rank.
const RootDatum& build_root_datum(LieType t);

Rat pairing(const RootDatum& d, const Weight& a, const Weight& b, FormKind k);

/// lambda* = -w0(lambda); requires lambda dominant.
Weight dual_weight(const RootDatum& d, const Weight& w);

/// P/Q with minimal-coefficient-height dominant coset representatives.
struct DiscriminantGroup {
  FinAbGroup group;
  std::vector<Weight> reps;  // one per group element (by index)
  IntMat proj;               // rows of the Smith transform giving the classes

  /// Class of an arbitrary weight in P/Q.
  GrpElem class_of(const Weight& w) const;
};

const DiscriminantGroup& discriminant_group(const RootDatum& d);

/// True iff <<a,b>> is even for all a,b in the root lattice
/// (checked on simple roots).
bool even_root_pairing(const RootDatum& d);

/// Textbook dimension of the Lie algebra (for cross-checks).
int lie_algebra_dim(LieType t);

}  // namespace qtwist
