#ifndef CODEKIT_CODE_HPP
#define CODEKIT_CODE_HPP

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <vector>

#include "codekit/field.hpp"
#include "codekit/matrix.hpp"

namespace codekit {

// Strictly increasing coordinate indices; range-checked against a code
// length at the point of use.
class CoordinateSet {
  public:
    CoordinateSet() = default;
    explicit CoordinateSet(std::vector<std::size_t> idx);
    CoordinateSet(std::initializer_list<std::size_t> idx)
        : CoordinateSet(std::vector<std::size_t>(idx)) {}

    std::size_t size() const { return idx_.size(); }
    bool empty() const { return idx_.empty(); }
    const std::vector<std::size_t>& indices() const { return idx_; }
    bool contains(std::size_t i) const;
    std::size_t max_index() const { return idx_.empty() ? 0 : idx_.back(); }

    auto begin() const { return idx_.begin(); }
    auto end() const { return idx_.end(); }

  private:
    std::vector<std::size_t> idx_;
};

// Exact codeword counts A_0..A_n.
class WeightDistribution {
  public:
    WeightDistribution() = default;
    explicit WeightDistribution(std::size_t n) : a_(n + 1) {}
    WeightDistribution(std::size_t n, std::vector<BigInt> counts);

    std::size_t length() const { return a_.empty() ? 0 : a_.size() - 1; }
    const BigInt& at(std::size_t w) const { return a_.at(w); }
    BigInt& at(std::size_t w) { return a_.at(w); }

    BigInt total() const;
    // Least w >= 1 with A_w > 0, or nullopt for the zero code.
    std::optional<std::size_t> min_positive_weight() const;

    bool operator==(const WeightDistribution& o) const { return a_ == o.a_; }
    bool operator!=(const WeightDistribution& o) const { return a_ != o.a_; }

    // "1 + 7z^3 + 7z^4 + z^7" style rendering.
    std::string enumerator_string() const;

  private:
    std::vector<BigInt> a_;
};

// Immutable linear code in canonical form: the generator matrix is the RREF
// basis of the codeword space, so equal codes compare equal. Copies share a
// write-once cache of derived data.
class LinearCode {
  public:
    const FieldPtr& field() const { return field_; }
    std::size_t length() const { return n_; }
    std::size_t dimension() const { return gen_.rows(); }
    const MatrixGF& generator() const { return gen_; }

    bool operator==(const LinearCode& o) const {
        return n_ == o.n_ && gen_ == o.gen_;
    }
    bool operator!=(const LinearCode& o) const { return !(*this == o); }

    // True iff the word lies in the code.
    bool contains(const std::vector<Elem>& word) const;

  private:
    LinearCode(FieldPtr f, std::size_t n, MatrixGF gen);
    friend LinearCode from_generator(const MatrixGF& rows);
    friend LinearCode dual(const LinearCode& c);
    friend const WeightDistribution& weight_distribution(const LinearCode& c,
                                                         std::uint64_t cap);

    FieldPtr field_;
    std::size_t n_;
    MatrixGF gen_;

    struct Cache;
    std::shared_ptr<Cache> cache_;
};

// Rows are reduced to an RREF basis; dependent and zero rows are dropped.
LinearCode from_generator(const MatrixGF& rows);

LinearCode dual(const LinearCode& c);

// Codewords vanishing on T, restricted to the complement of T.
LinearCode shorten(const LinearCode& c, const CoordinateSet& t);

// All codewords restricted to the complement of T.
LinearCode puncture(const LinearCode& c, const CoordinateSet& t);

// Exact counts by enumerating all q^k codewords; cached on the code.
// Throws CapExceeded when q^k > cap, signalling the MacWilliams route.
const WeightDistribution& weight_distribution(const LinearCode& c,
                                              std::uint64_t cap = kDefaultEnumCap);

// Least positive weight; throws std::domain_error for the zero code.
std::size_t minimum_distance(const LinearCode& c,
                             std::uint64_t cap = kDefaultEnumCap);

// Dual weight distribution through Krawtchouk sums
//   A^perp_j = q^{-k} sum_i A_i K_j(i),
//   K_j(i) = sum_s (-1)^s (q-1)^{j-s} C(i,s) C(n-i,j-s).
WeightDistribution macwilliams(const WeightDistribution& wd, std::size_t k,
                               std::uint32_t q);

// New coordinate j carries scale[j] * (old coordinate perm[j]).
LinearCode apply_monomial(const LinearCode& c,
                          const std::vector<std::size_t>& perm,
                          const std::vector<Elem>& scale);

// True iff the permutation-then-scaling map sends the codeword set of c1
// onto that of c2; checked on generator images, not by enumeration.
bool verify_monomial_map(const LinearCode& c1, const LinearCode& c2,
                         const std::vector<std::size_t>& perm,
                         const std::vector<Elem>& scale);

// Prange identities at one coordinate:
//   n A_i(C_*)  = (n-i) A_i(C)
//   n A_i(C^*)  = (n-i) A_i(C) + (i+1) A_{i+1}(C).
bool prange_check(const LinearCode& c, std::size_t coordinate,
                  std::uint64_t cap = kDefaultEnumCap);

} // namespace codekit

#endif
