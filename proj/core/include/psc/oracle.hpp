#pragma once

// Explicit linear algebra on global sections of line bundles over P1 x P3,
// used to cross-check closed-form cohomology dimensions.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace psc::oracle {

// Variables u0, u1 (P1) and x0..x3 (P3).
inline constexpr int kVars = 6;
using Monomial = std::array<int, kVars>;

struct Bidegree {
  int a = 0;
  int b = 0;
  Bidegree operator+(Bidegree o) const { return {a + o.a, b + o.b}; }
  Bidegree operator-() const { return {-a, -b}; }
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

Bidegree bidegree_of(const Monomial& m);

// Monomials of bidegree (a,b), ordered lexicographically by exponent vector,
// highest first (u0 before u1 before x0 ...).  Empty if a or b is negative.
class SectionSpace {
 public:
  explicit SectionSpace(Bidegree d);
  Bidegree bidegree() const { return d_; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }
  // -1 if the monomial is not in this space.
  long index_of(const Monomial& m) const;

  // (a+1) * C(b+3, 3) for a, b >= 0.
  static std::int64_t expected_size(Bidegree d);

 private:
  Bidegree d_;
  std::vector<Monomial> basis_;
  std::map<Monomial, long> index_;
};

class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial variable(int i, std::int64_t coeff = 1);
  static Polynomial constant(std::int64_t c);

  const std::map<Monomial, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Monomial& m, std::int64_t c);

  Polynomial& operator+=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::map<Monomial, std::int64_t> terms_;
};

// Homogeneous map  sum_c O(source[c]) -> sum_r O(target[r]).  Each nonzero
// entry (r,c) has bidegree target[r] - source[c].
class PolyMatrix {
 public:
  PolyMatrix(std::vector<Bidegree> source, std::vector<Bidegree> target,
             std::vector<std::vector<Polynomial>> entries);

  const std::vector<Bidegree>& source() const { return source_; }
  const std::vector<Bidegree>& target() const { return target_; }
  const Polynomial& entry(std::size_t r, std::size_t c) const { return entries_[r][c]; }
  std::size_t rows() const { return target_.size(); }
  std::size_t cols() const { return source_.size(); }

  // this o other.
  PolyMatrix compose(const PolyMatrix& other) const;
  // Transpose with bidegrees negated: the map of dual bundles.
  PolyMatrix dual() const;

 private:
  std::vector<Bidegree> source_, target_;
  std::vector<std::vector<Polynomial>> entries_;
};

class SparseMatrix {
 public:
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  void add(std::size_t r, std::size_t c, std::int64_t v);
  const std::map<std::pair<std::size_t, std::size_t>, std::int64_t>& entries() const {
    return entries_;
  }
  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseMatrix operator-(const SparseMatrix& o) const;

 private:
  std::size_t rows_, cols_;
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> entries_;
};

// The map on global sections after twisting every bundle by O(k,k).
SparseMatrix realize(const PolyMatrix& m, int k);

// Exact rank: fraction-free elimination on each connected block.
std::int64_t rank(const SparseMatrix& m);
std::int64_t kernel_dim(const PolyMatrix& m, int k);
std::int64_t coker_dim(const PolyMatrix& m, int k);

// O + O -> O(1,0)^2 + O(0,1)^4, columns (u0,u1,0..) and (0,0,x0..x3).
PolyMatrix segre_inclusion();
// O -> O(1,1)^8, the Segre coordinates u_i x_j with row index 4i + j.
PolyMatrix segre_coordinates();
// k o q: O + O -> O(1,1)^8, (a,b) -> u_i x_j (a + b).
PolyMatrix segre_coordinates_summed();
// Jacobian of (u,x) -> (u_i x_j): O(1,0)^2 + O(0,1)^4 -> O(1,1)^8.
PolyMatrix segre_jacobian();
// beta: O -> O(1,0)^2 + O(0,1)^4, column (u0, u1, -x0, ..., -x3).
PolyMatrix euler_relation();

// h0(N^vee(k)) = dim ker H0(f^vee).
std::int64_t conormal_h0(int k);
// h0(M^vee(k)) = dim ker H0(beta^vee).
std::int64_t m_dual_h0(int k);
// h1(N^vee(k)) = h0(M^vee(k)) - rank H0(f^vee).
std::int64_t conormal_h1(int k);
// h0(N(k)) = dim coker H0(f) at twist k.
std::int64_t normal_h0(int k);
// f o (i + j) = k o q on sections of O(t,t)^2.
bool composite_identity(int twist);

struct CheckLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<CheckLine> verify_appendix(int max_twist = 5);

}  // namespace psc::oracle
