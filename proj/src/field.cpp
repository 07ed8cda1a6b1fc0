#include "codekit/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace codekit {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        fs.push_back(n);
    return fs;
}

// Dense polynomials over GF(p), coefficient i at index i.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty())
        return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    trim(c);
    return c;
}

// Remainder of a modulo monic b.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    while (a.size() >= b.size()) {
        std::uint32_t lead = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::uint32_t sub = (lead * b[i]) % p;
            std::uint32_t& dst = a[shift + i];
            dst = (dst + p * sub - sub) % p; // dst - sub mod p
        }
        trim(a);
    }
    return a;
}

Poly unpack(std::uint64_t v, std::uint32_t p) {
    Poly a;
    while (v) {
        a.push_back(static_cast<std::uint32_t>(v % p));
        v /= p;
    }
    return a;
}

std::uint64_t pack(const Poly& a, std::uint32_t p) {
    std::uint64_t v = 0;
    for (std::size_t i = a.size(); i-- > 0;)
        v = v * p + a[i];
    return v;
}

bool poly_is_zero(const Poly& a) { return a.empty(); }

// Irreducibility over GF(p) by trial division against every monic of
// degree 1..deg/2. Desk scale only, which is all the caps allow anyway.
bool is_irreducible(const Poly& f, std::uint32_t p) {
    std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i)
            count *= p;
        for (std::uint64_t lo = 0; lo < count; ++lo) {
            Poly g = unpack(lo, p);
            g.resize(d + 1, 0);
            g[d] = 1;
            if (poly_is_zero(poly_mod(f, g, p)))
                return false;
        }
    }
    return true;
}

struct FieldKey {
    std::uint32_t p, s;
    bool operator<(const FieldKey& o) const {
        return p != o.p ? p < o.p : s < o.s;
    }
};

std::mutex g_field_mutex;
std::map<FieldKey, FieldPtr> g_field_cache;

std::mutex g_ext_mutex;
std::map<std::pair<FieldKey, std::uint32_t>, ExtPtr> g_ext_cache;

} // namespace

std::uint64_t FiniteField::modulus_packed() const {
    std::uint64_t v = 0;
    for (std::size_t i = modulus_.size(); i-- > 0;)
        v = v * p_ + modulus_[i];
    return v;
}

Elem FiniteField::add(Elem a, Elem b) const {
    if (s_ == 1)
        return (a + b) % p_;
    if (p_ == 2)
        return a ^ b;
    Elem r = 0, mult = 1;
    for (std::uint32_t i = 0; i < s_; ++i) {
        Elem da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        r += ((da + db) % p_) * mult;
        mult *= p_;
    }
    return r;
}

Elem FiniteField::neg(Elem a) const {
    if (p_ == 2)
        return a;
    if (s_ == 1)
        return (p_ - a) % p_;
    Elem r = 0, mult = 1;
    for (std::uint32_t i = 0; i < s_; ++i) {
        Elem da = a % p_;
        a /= p_;
        r += ((p_ - da) % p_) * mult;
        mult *= p_;
    }
    return r;
}

Elem FiniteField::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0)
        return 0;
    std::uint64_t k = std::uint64_t(log_[a]) + log_[b];
    if (k >= q_ - 1)
        k -= q_ - 1;
    return exp_[k];
}

Elem FiniteField::inv(Elem a) const {
    if (a == 0)
        throw std::domain_error("inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem FiniteField::pow(Elem a, std::uint64_t e) const {
    if (e == 0)
        return 1;
    if (a == 0)
        return 0;
    std::uint64_t k = (std::uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[k];
}

std::uint32_t FiniteField::log(Elem a) const {
    if (a == 0)
        throw std::domain_error("log of zero");
    return log_[a];
}

Elem FiniteField::digit(Elem a, std::uint32_t i) const {
    for (std::uint32_t k = 0; k < i; ++k)
        a /= p_;
    return a % p_;
}

std::uint64_t FiniteField::multiplicative_order(Elem a) const {
    if (a == 0)
        throw std::domain_error("order of zero");
    std::uint64_t n = q_ - 1;
    std::uint64_t d = std::gcd(std::uint64_t(log_[a]), n);
    return n / d;
}

std::string FiniteField::describe() const {
    std::ostringstream os;
    os << "GF(" << q_ << ")";
    if (s_ > 1)
        os << " = GF(" << p_ << "^" << s_ << ")";
    return os.str();
}

FieldPtr make_field(std::uint32_t p, std::uint32_t s, std::uint64_t max_order) {
    if (!is_prime(p))
        throw std::invalid_argument("characteristic must be prime: " +
                                    std::to_string(p));
    if (s < 1)
        throw std::invalid_argument("extension degree must be positive");

    {
        std::lock_guard<std::mutex> lk(g_field_mutex);
        auto it = g_field_cache.find({p, s});
        if (it != g_field_cache.end() && it->second->order() <= max_order)
            return it->second;
    }

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < s; ++i) {
        q *= p;
        if (q > max_order)
            throw CapExceeded("field order " + std::to_string(p) + "^" +
                              std::to_string(s) + " exceeds cap " +
                              std::to_string(max_order));
    }

    auto f = std::shared_ptr<FiniteField>(new FiniteField());
    f->p_ = p;
    f->s_ = s;
    f->q_ = static_cast<std::uint32_t>(q);

    // Lowest monic irreducible of degree s in packed order.
    if (s == 1) {
        f->modulus_ = {0, 1}; // x
    } else {
        std::uint64_t low_count = q; // p^s candidates for the low coefficients
        bool found = false;
        for (std::uint64_t lo = 0; lo < low_count; ++lo) {
            Poly cand = unpack(lo, p);
            cand.resize(s + 1, 0);
            cand[s] = 1;
            if (is_irreducible(cand, p)) {
                f->modulus_.assign(cand.begin(), cand.end());
                found = true;
                break;
            }
        }
        if (!found)
            throw std::logic_error("no irreducible polynomial found");
    }

    Poly mod(f->modulus_.begin(), f->modulus_.end());
    auto mul_raw = [&](Elem a, Elem b) -> Elem {
        Poly r = poly_mod(poly_mul(unpack(a, p), unpack(b, p), p), mod, p);
        return static_cast<Elem>(pack(r, p));
    };
    auto pow_raw = [&](Elem a, std::uint64_t e) -> Elem {
        Elem r = 1;
        while (e) {
            if (e & 1)
                r = mul_raw(r, a);
            a = mul_raw(a, a);
            e >>= 1;
        }
        return r;
    };

    // Least element of multiplicative order q-1.
    auto factors = prime_factors(q - 1);
    Elem gen = 0;
    for (Elem cand = 1; cand < q; ++cand) {
        bool ok = true;
        for (auto ell : factors) {
            if (pow_raw(cand, (q - 1) / ell) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen = cand;
            break;
        }
    }
    if (gen == 0 && q > 1)
        gen = 1; // q == 2: the only nonzero element
    f->gen_ = gen;

    f->exp_.resize(q - 1);
    f->log_.assign(q, 0);
    Elem cur = 1;
    for (std::uint64_t i = 0; i + 1 < q; ++i) {
        f->exp_[i] = cur;
        f->log_[cur] = static_cast<std::uint32_t>(i);
        cur = mul_raw(cur, gen);
    }
    if (cur != 1)
        throw std::logic_error("generator order mismatch");

    FieldPtr result = f;
    std::lock_guard<std::mutex> lk(g_field_mutex);
    g_field_cache[{p, s}] = result;
    return result;
}

std::pair<std::uint32_t, std::uint32_t> factor_prime_power(std::uint64_t q) {
    if (q < 2)
        throw std::invalid_argument("not a prime power: " + std::to_string(q));
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t s = 0;
    std::uint64_t v = q;
    while (v % p == 0) {
        v /= p;
        ++s;
    }
    if (v != 1)
        throw std::invalid_argument("not a prime power: " + std::to_string(q));
    return {static_cast<std::uint32_t>(p), s};
}

FieldPtr make_field_q(std::uint64_t q, std::uint64_t max_order) {
    auto [p, s] = factor_prime_power(q);
    return make_field(p, s, max_order);
}

Elem ExtensionField::embed(Elem base_elem) const { return embed_.at(base_elem); }

bool ExtensionField::in_subfield(Elem ambient_elem) const {
    return unembed_.at(ambient_elem) >= 0;
}

Elem ExtensionField::unembed(Elem ambient_elem) const {
    std::int64_t v = unembed_.at(ambient_elem);
    if (v < 0)
        throw std::domain_error("element not in embedded subfield");
    return static_cast<Elem>(v);
}

ExtPtr make_extension(const FieldPtr& base, std::uint32_t m,
                      std::uint64_t max_order) {
    if (m < 1)
        throw std::invalid_argument("extension degree must be positive");

    FieldKey key{base->characteristic(), base->degree()};
    {
        std::lock_guard<std::mutex> lk(g_ext_mutex);
        auto it = g_ext_cache.find({key, m});
        if (it != g_ext_cache.end())
            return it->second;
    }

    auto e = std::shared_ptr<ExtensionField>(new ExtensionField());
    e->base_ = base;
    e->m_ = m;
    e->ambient_ = make_field(base->characteristic(), base->degree() * m,
                             max_order);

    const FiniteField& B = *base;
    const FiniteField& A = *e->ambient_;
    std::uint32_t s = B.degree();

    // Root of the base modulus inside the ambient field; x -> root extends
    // to the unique GF(p)-algebra homomorphism GF(q) -> GF(q^m).
    Elem root = 0;
    if (s == 1) {
        root = 1; // prime subfield embeds as the constants
    } else {
        bool found = false;
        for (Elem cand = 0; cand < A.order() && !found; ++cand) {
            Elem acc = 0;
            for (std::size_t i = B.modulus().size(); i-- > 0;)
                acc = A.add(A.mul(acc, cand), B.modulus()[i]);
            if (acc == 0) {
                root = cand;
                found = true;
            }
        }
        if (!found)
            throw std::logic_error("base modulus has no root in extension");
    }

    e->embed_.resize(B.order());
    e->unembed_.assign(A.order(), -1);
    for (Elem x = 0; x < B.order(); ++x) {
        Elem acc = 0;
        for (std::uint32_t i = s; i-- > 0;)
            acc = A.add(A.mul(acc, root), B.digit(x, i));
        e->embed_[x] = acc;
        if (e->unembed_[acc] != -1)
            throw std::logic_error("subfield embedding not injective");
        e->unembed_[acc] = x;
    }

    ExtPtr result = e;
    std::lock_guard<std::mutex> lk(g_ext_mutex);
    g_ext_cache[{key, m}] = result;
    return result;
}

Elem rel_trace(const ExtensionField& ext, Elem x) {
    const FiniteField& A = *ext.ambient();
    std::uint64_t q = ext.base()->order();
    Elem t = 0, y = x;
    for (std::uint32_t i = 0; i < ext.m(); ++i) {
        t = A.add(t, y);
        y = A.pow(y, q);
    }
    return ext.unembed(t);
}

std::vector<Elem> dual_basis(const ExtensionField& ext,
                             const std::vector<Elem>& basis) {
    const FiniteField& A = *ext.ambient();
    const FiniteField& B = *ext.base();
    std::uint32_t m = ext.m();
    if (basis.size() != m)
        throw std::invalid_argument("basis size must equal extension degree");

    // Invert the trace Gram matrix over the base field; augmented
    // Gauss-Jordan at m <= 16 scale.
    std::vector<std::vector<Elem>> g(m, std::vector<Elem>(2 * m, 0));
    for (std::uint32_t i = 0; i < m; ++i) {
        for (std::uint32_t j = 0; j < m; ++j)
            g[i][j] = rel_trace(ext, A.mul(basis[i], basis[j]));
        g[i][m + i] = 1;
    }
    std::uint32_t row = 0;
    for (std::uint32_t col = 0; col < m && row < m; ++col) {
        std::uint32_t piv = row;
        while (piv < m && g[piv][col] == 0)
            ++piv;
        if (piv == m)
            continue;
        std::swap(g[row], g[piv]);
        Elem invp = B.inv(g[row][col]);
        for (auto& v : g[row])
            v = B.mul(v, invp);
        for (std::uint32_t r = 0; r < m; ++r) {
            if (r == row || g[r][col] == 0)
                continue;
            Elem factor = g[r][col];
            for (std::uint32_t c = 0; c < 2 * m; ++c)
                g[r][c] = B.sub(g[r][c], B.mul(factor, g[row][c]));
        }
        ++row;
    }
    if (row < m)
        throw std::invalid_argument("input is not a basis (singular Gram)");

    std::vector<Elem> dual(m, 0);
    for (std::uint32_t j = 0; j < m; ++j) {
        Elem acc = 0;
        for (std::uint32_t k = 0; k < m; ++k)
            acc = A.add(acc, A.mul(ext.embed(g[j][m + k]), basis[k]));
        dual[j] = acc;
    }
    return dual;
}

} // namespace codekit
