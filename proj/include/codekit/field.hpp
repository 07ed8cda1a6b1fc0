#ifndef CODEKIT_FIELD_HPP
#define CODEKIT_FIELD_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace codekit {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Field elements are encoded as coefficient vectors over GF(p) packed in
// base p, so encodings run over 0..q-1 and two encodings are equal iff the
// elements are equal.
using Elem = std::uint32_t;

inline constexpr std::uint64_t kDefaultFieldCap = 1u << 16;
inline constexpr std::uint64_t kDefaultEnumCap = 1u << 24;

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A closed-form count came out non-integral, i.e. the hypotheses of the
// formula do not hold for the given input.
struct NonIntegral : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

// GF(p^s) with log/antilog tables. Modulus is the lowest monic irreducible
// of degree s in packed-integer order, the generator is the least element
// of multiplicative order q-1, so construction is reproducible.
class FiniteField {
  public:
    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return s_; }
    std::uint32_t order() const { return q_; }
    Elem generator() const { return gen_; }

    // Modulus coefficients c[0] + c[1] x + ... + c[s] x^s with c[s] = 1.
    const std::vector<Elem>& modulus() const { return modulus_; }
    std::uint64_t modulus_packed() const;

    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    // Discrete log base the canonical generator; a must be nonzero.
    std::uint32_t log(Elem a) const;
    Elem exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }

    // Coefficient of x^i in the polynomial encoding of a.
    Elem digit(Elem a, std::uint32_t i) const;

    std::uint64_t multiplicative_order(Elem a) const;

    std::string describe() const;

  private:
    FiniteField() = default;
    friend FieldPtr make_field(std::uint32_t, std::uint32_t, std::uint64_t);

    std::uint32_t p_ = 0;
    std::uint32_t s_ = 0;
    std::uint32_t q_ = 0;
    Elem gen_ = 0;
    std::vector<Elem> modulus_;
    std::vector<Elem> exp_;          // exp_[i] = g^i, i in 0..q-2
    std::vector<std::uint32_t> log_; // log_[e] for e != 0
};

// Deterministic GF(p^s); cached, so repeated calls share one instance.
FieldPtr make_field(std::uint32_t p, std::uint32_t s,
                    std::uint64_t max_order = kDefaultFieldCap);

// q must be a prime power; returns (p, s).
std::pair<std::uint32_t, std::uint32_t> factor_prime_power(std::uint64_t q);

// Convenience: GF(q) from a prime power q.
FieldPtr make_field_q(std::uint64_t q,
                      std::uint64_t max_order = kDefaultFieldCap);

class ExtensionField;
using ExtPtr = std::shared_ptr<const ExtensionField>;

// GF(q^m) over GF(q). The ambient field is built over the prime field and
// the base field is embedded through the least ambient root of the base
// modulus, which makes the embedding a field homomorphism whose image is
// the fixed field of x -> x^q.
class ExtensionField {
  public:
    const FieldPtr& base() const { return base_; }
    const FieldPtr& ambient() const { return ambient_; }
    std::uint32_t m() const { return m_; }

    // Primitive element of the ambient field.
    Elem alpha() const { return ambient_->generator(); }

    Elem embed(Elem base_elem) const;
    // Preimage under embed; throws if x is not in the embedded subfield.
    Elem unembed(Elem ambient_elem) const;
    bool in_subfield(Elem ambient_elem) const;

  private:
    ExtensionField() = default;
    friend ExtPtr make_extension(const FieldPtr&, std::uint32_t,
                                 std::uint64_t);

    FieldPtr base_;
    FieldPtr ambient_;
    std::uint32_t m_ = 0;
    std::vector<Elem> embed_;
    std::vector<std::int64_t> unembed_;
};

ExtPtr make_extension(const FieldPtr& base, std::uint32_t m,
                      std::uint64_t max_order = kDefaultFieldCap);

// Tr_{q^m/q}(x) = sum of x^(q^i) for i = 0..m-1, returned as a base element.
Elem rel_trace(const ExtensionField& ext, Elem x);

// Dual basis b* with Tr(b_i b*_j) = [i == j]; throws if the input is not a
// basis (singular trace Gram matrix).
std::vector<Elem> dual_basis(const ExtensionField& ext,
                             const std::vector<Elem>& basis);

} // namespace codekit

#endif
