#ifndef CODEKIT_FAMILIES_HPP
#define CODEKIT_FAMILIES_HPP

#include <array>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "codekit/code.hpp"

namespace codekit {

// The (q^m-1)/(q-1) points of PG(m-1,q), one normalized representative per
// 1-dimensional subspace (first nonzero entry 1), in ascending lexicographic
// order of the coordinate vectors.
class ProjectivePointList {
  public:
    ProjectivePointList(FieldPtr field, std::uint32_t m);

    const FieldPtr& field() const { return field_; }
    std::uint32_t dim() const { return m_; }
    std::size_t count() const { return pts_.size(); }
    const std::vector<Elem>& point(std::size_t i) const { return pts_[i]; }

    // Index of the normalized representative of a nonzero vector.
    std::size_t index_of(const std::vector<Elem>& v) const;
    // Normalizes v in place; returns the scalar a with v_in = a * v_out.
    Elem normalize(std::vector<Elem>& v) const;

    // m x count matrix with the points as columns.
    MatrixGF as_matrix() const;

  private:
    std::uint64_t pack(const std::vector<Elem>& v) const;

    FieldPtr field_;
    std::uint32_t m_;
    std::vector<std::vector<Elem>> pts_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

// [(q^m-1)/(q-1), n-m, 3] code whose parity-check columns are the points of
// PG(m-1,q).
LinearCode hamming(std::uint32_t q, std::uint32_t m);

// Dual of the Hamming code; one-weight [(q^m-1)/(q-1), m, q^{m-1}].
LinearCode simplex(std::uint32_t q, std::uint32_t m);

// Binary Reed-Muller code of order r: evaluations of all multilinear
// monomials of degree <= r at the 2^m points of GF(2)^m in lexicographic
// point order.
LinearCode reed_muller(std::uint32_t r, std::uint32_t m);

// [q^m-1, m, (q-1)q^{m-1}] irreducible cyclic code with coordinates
// (Tr(a alpha^0), ..., Tr(a alpha^{q^m-2})).
LinearCode irreducible_cyclic(std::uint32_t q, std::uint32_t m);

// Trace code of the defining multiset D: codewords (Tr(x d_1),...,Tr(x d_n))
// for x ranging over the extension field.
LinearCode defining_set_code(const ExtPtr& ext, const std::vector<Elem>& d);

// q^2+1 points in PG(3,q), no three collinear.
struct OvoidPointSet {
    enum class Kind { EllipticQuadric, Tits };
    FieldPtr field;
    Kind kind;
    Elem param; // quadric: a with x^2+x+a rootless; Tits: sigma exponent
    std::vector<std::array<Elem, 4>> points;
};

// Points {(0,0,1,0)} u {(x, y, x^2+xy+ay^2, 1)}, a the least element making
// x^2+x+a rootless; the code is [q^2+1, 4, q^2-q].
std::pair<OvoidPointSet, LinearCode> elliptic_quadric(std::uint32_t q);

// Points {(0,0,1,0)} u {(x, y, x^sigma+xy+y^{sigma+2}, 1)} with
// sigma = 2^{e+1} over GF(2^{2e+1}).
std::pair<OvoidPointSet, LinearCode> tits_ovoid(std::uint32_t e);

// Exhaustive cap check: every triple of points has rank 3.
bool no_three_collinear(const OvoidPointSet& o);

} // namespace codekit

#endif
