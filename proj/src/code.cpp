#include "codekit/code.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace codekit {

CoordinateSet::CoordinateSet(std::vector<std::size_t> idx) : idx_(std::move(idx)) {
    std::sort(idx_.begin(), idx_.end());
    for (std::size_t i = 1; i < idx_.size(); ++i)
        if (idx_[i] == idx_[i - 1])
            throw std::invalid_argument("duplicate coordinate in set");
}

bool CoordinateSet::contains(std::size_t i) const {
    return std::binary_search(idx_.begin(), idx_.end(), i);
}

WeightDistribution::WeightDistribution(std::size_t n, std::vector<BigInt> counts)
    : a_(std::move(counts)) {
    if (a_.size() != n + 1)
        throw std::invalid_argument("weight distribution size mismatch");
}

BigInt WeightDistribution::total() const {
    BigInt t = 0;
    for (const auto& v : a_)
        t += v;
    return t;
}

std::optional<std::size_t> WeightDistribution::min_positive_weight() const {
    for (std::size_t w = 1; w < a_.size(); ++w)
        if (a_[w] > 0)
            return w;
    return std::nullopt;
}

std::string WeightDistribution::enumerator_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t w = 0; w < a_.size(); ++w) {
        if (a_[w] == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        if (w == 0) {
            os << a_[w];
            continue;
        }
        if (a_[w] != 1)
            os << a_[w];
        os << "z^" << w;
    }
    if (first)
        os << "0";
    return os.str();
}

struct LinearCode::Cache {
    std::mutex mu;
    std::optional<WeightDistribution> wd;
};

LinearCode::LinearCode(FieldPtr f, std::size_t n, MatrixGF gen)
    : field_(std::move(f)), n_(n), gen_(std::move(gen)),
      cache_(std::make_shared<Cache>()) {}

bool LinearCode::contains(const std::vector<Elem>& word) const {
    auto rr = rref(gen_); // generator is already RREF; recover pivots
    return in_row_space(rr.mat, rr.pivots, word);
}

LinearCode from_generator(const MatrixGF& rows) {
    auto rr = rref(rows);
    MatrixGF basis(rows.field(), rr.rank, rows.cols());
    for (std::size_t i = 0; i < rr.rank; ++i)
        for (std::size_t j = 0; j < rows.cols(); ++j)
            basis.at(i, j) = rr.mat.at(i, j);
    return LinearCode(rows.field(), rows.cols(), std::move(basis));
}

LinearCode dual(const LinearCode& c) {
    return from_generator(kernel_basis(c.generator()));
}

namespace {

void check_coords(const LinearCode& c, const CoordinateSet& t) {
    if (!t.empty() && t.max_index() >= c.length())
        throw std::invalid_argument("coordinate index out of range");
}

} // namespace

LinearCode shorten(const LinearCode& c, const CoordinateSet& t) {
    check_coords(c, t);
    if (t.empty())
        return c;
    std::size_t n = c.length(), k = c.dimension(), tn = t.size();

    // Reorder columns so T comes first; rows of the RREF whose pivots land
    // beyond the T block are exactly a basis of the subcode vanishing on T.
    std::vector<std::size_t> order;
    order.reserve(n);
    for (auto i : t)
        order.push_back(i);
    for (std::size_t i = 0; i < n; ++i)
        if (!t.contains(i))
            order.push_back(i);

    MatrixGF g(c.field(), k, n);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t j = 0; j < n; ++j)
            g.at(r, j) = c.generator().at(r, order[j]);

    auto rr = rref(g);
    std::size_t keep_from = 0;
    while (keep_from < rr.rank && rr.pivots[keep_from] < tn)
        ++keep_from;

    MatrixGF out(c.field(), rr.rank - keep_from, n - tn);
    for (std::size_t r = keep_from; r < rr.rank; ++r)
        for (std::size_t j = tn; j < n; ++j)
            out.at(r - keep_from, j - tn) = rr.mat.at(r, j);
    return from_generator(out);
}

LinearCode puncture(const LinearCode& c, const CoordinateSet& t) {
    check_coords(c, t);
    if (t.empty())
        return c;
    std::size_t n = c.length(), k = c.dimension();
    MatrixGF out(c.field(), k, n - t.size());
    for (std::size_t r = 0; r < k; ++r) {
        std::size_t jj = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (!t.contains(j))
                out.at(r, jj++) = c.generator().at(r, j);
    }
    return from_generator(out);
}

namespace {

// Characteristic-2 fast path: elements pack into s-bit groups, addition of
// codewords is a word XOR, and weights come from a fold-and-popcount.
WeightDistribution enumerate_wd_char2(const LinearCode& c) {
    const FiniteField& f = *c.field();
    std::size_t n = c.length(), k = c.dimension();
    std::uint32_t s = f.degree(), q = f.order();
    std::size_t bits = n * s;
    std::size_t words = (bits + 63) / 64;

    std::uint64_t group_mask_word = 0;
    for (std::size_t g = 0; g * s < 64; ++g)
        group_mask_word |= std::uint64_t(1) << (g * s);

    auto pack_row = [&](const std::vector<Elem>& v) {
        std::vector<std::uint64_t> w(words, 0);
        for (std::size_t j = 0; j < n; ++j) {
            std::uint64_t e = v[j];
            std::size_t pos = j * s;
            w[pos / 64] |= e << (pos % 64);
            if (pos % 64 + s > 64)
                w[pos / 64 + 1] |= e >> (64 - pos % 64);
        }
        return w;
    };
    auto weight_of = [&](const std::vector<std::uint64_t>& w) {
        std::size_t wt = 0;
        for (std::size_t i = 0; i < words; ++i) {
            std::uint64_t acc = w[i];
            for (std::uint32_t sh = 1; sh < s; ++sh)
                acc |= w[i] >> sh;
            // stray bits beyond n*s are zero by construction
            wt += std::popcount(acc & group_mask_word);
        }
        return wt;
    };

    // Scaled copies of every generator row, one per nonzero scalar, so a
    // digit change of any size is a single XOR.
    std::vector<std::vector<std::vector<std::uint64_t>>> scaled(k);
    for (std::size_t r = 0; r < k; ++r) {
        scaled[r].resize(q);
        for (Elem sc = 1; sc < q; ++sc) {
            std::vector<Elem> v(n);
            for (std::size_t j = 0; j < n; ++j)
                v[j] = f.mul(sc, c.generator().at(r, j));
            scaled[r][sc] = pack_row(v);
        }
    }

    std::vector<std::uint64_t> counts(n + 1, 0);
    counts[0] = 1;
    std::vector<Elem> digits(k, 0);
    std::vector<std::uint64_t> cw(words, 0);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i)
        total *= q;
    for (std::uint64_t step = 1; step < total; ++step) {
        std::size_t pos = 0;
        while (digits[pos] == q - 1) {
            // digit wraps a -> 0: XOR the delta-scaled row (0 - a = a in
            // characteristic 2)
            Elem delta = digits[pos]; // f.sub(0, a) == a
            const auto& row = scaled[pos][delta];
            for (std::size_t w = 0; w < words; ++w)
                cw[w] ^= row[w];
            digits[pos] = 0;
            ++pos;
        }
        Elem old = digits[pos];
        Elem nw = old + 1;
        Elem delta = f.sub(nw, old);
        const auto& row = scaled[pos][delta];
        for (std::size_t w = 0; w < words; ++w)
            cw[w] ^= row[w];
        digits[pos] = nw;
        ++counts[weight_of(cw)];
    }

    WeightDistribution wd(n);
    for (std::size_t w = 0; w <= n; ++w)
        wd.at(w) = counts[w];
    return wd;
}

WeightDistribution enumerate_wd_generic(const LinearCode& c) {
    const FiniteField& f = *c.field();
    std::size_t n = c.length(), k = c.dimension();
    std::uint32_t q = f.order();

    std::vector<std::uint64_t> counts(n + 1, 0);
    counts[0] = 1;
    std::vector<Elem> digits(k, 0);
    std::vector<Elem> cw(n, 0);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i)
        total *= q;

    auto axpy = [&](Elem sc, std::size_t r) {
        if (sc == 0)
            return;
        const Elem* row = c.generator().row(r);
        for (std::size_t j = 0; j < n; ++j)
            cw[j] = f.add(cw[j], f.mul(sc, row[j]));
    };

    for (std::uint64_t step = 1; step < total; ++step) {
        std::size_t pos = 0;
        while (digits[pos] == q - 1) {
            axpy(f.sub(0, digits[pos]), pos);
            digits[pos] = 0;
            ++pos;
        }
        axpy(f.sub(digits[pos] + 1, digits[pos]), pos);
        digits[pos] += 1;
        std::size_t wt = 0;
        for (std::size_t j = 0; j < n; ++j)
            wt += cw[j] != 0;
        ++counts[wt];
    }

    WeightDistribution wd(n);
    for (std::size_t w = 0; w <= n; ++w)
        wd.at(w) = counts[w];
    return wd;
}

} // namespace

const WeightDistribution& weight_distribution(const LinearCode& c,
                                              std::uint64_t cap) {
    {
        std::lock_guard<std::mutex> lk(c.cache_->mu);
        if (c.cache_->wd)
            return *c.cache_->wd;
    }

    std::size_t k = c.dimension();
    std::uint32_t q = c.field()->order();
    BigInt size = 1;
    for (std::size_t i = 0; i < k; ++i)
        size *= q;
    if (size > cap)
        throw CapExceeded("codeword count " + size.str() +
                          " exceeds enumeration cap " + std::to_string(cap));

    // The packed path needs element groups aligned to 64-bit words.
    bool packed_ok =
        c.field()->characteristic() == 2 && 64 % c.field()->degree() == 0;
    WeightDistribution wd =
        packed_ok ? enumerate_wd_char2(c) : enumerate_wd_generic(c);

    std::lock_guard<std::mutex> lk(c.cache_->mu);
    if (!c.cache_->wd)
        c.cache_->wd = std::move(wd);
    return *c.cache_->wd;
}

std::size_t minimum_distance(const LinearCode& c, std::uint64_t cap) {
    if (c.dimension() == 0)
        throw std::domain_error("minimum distance of the zero code is undefined");
    auto d = weight_distribution(c, cap).min_positive_weight();
    if (!d)
        throw std::logic_error("nonzero code without positive weight");
    return *d;
}

namespace {

struct BinomTable {
    std::vector<std::vector<BigInt>> c;
    explicit BinomTable(std::size_t n) : c(n + 1) {
        for (std::size_t i = 0; i <= n; ++i) {
            c[i].resize(i + 1);
            c[i][0] = 1;
            for (std::size_t j = 1; j <= i; ++j)
                c[i][j] = c[i - 1][j - 1] +
                          (j <= i - 1 ? c[i - 1][j] : BigInt(0));
        }
    }
    BigInt at(std::ptrdiff_t n, std::ptrdiff_t k) const {
        if (k < 0 || n < 0 || k > n)
            return 0;
        return c[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }
};

} // namespace

WeightDistribution macwilliams(const WeightDistribution& wd, std::size_t k,
                               std::uint32_t q) {
    std::size_t n = wd.length();
    BigInt qk = 1;
    for (std::size_t i = 0; i < k; ++i)
        qk *= q;
    if (wd.total() != qk)
        throw std::invalid_argument(
            "inconsistent weight distribution: counts sum to " +
            wd.total().str() + ", expected q^k = " + qk.str());

    BinomTable bt(n);
    std::vector<BigInt> pw(n + 1);
    pw[0] = 1;
    for (std::size_t i = 1; i <= n; ++i)
        pw[i] = pw[i - 1] * (q - 1);

    WeightDistribution out(n);
    BigInt sum_check = 0;
    for (std::size_t j = 0; j <= n; ++j) {
        BigInt acc = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            if (wd.at(i) == 0)
                continue;
            BigInt kraw = 0;
            for (std::size_t s = 0; s <= j; ++s) {
                BigInt term = bt.at(static_cast<std::ptrdiff_t>(i),
                                    static_cast<std::ptrdiff_t>(s)) *
                              bt.at(static_cast<std::ptrdiff_t>(n - i),
                                    static_cast<std::ptrdiff_t>(j - s)) *
                              pw[j - s];
                if (s & 1)
                    kraw -= term;
                else
                    kraw += term;
            }
            acc += wd.at(i) * kraw;
        }
        if (acc % qk != 0)
            throw NonIntegral("MacWilliams coefficient not divisible by q^k");
        BigInt v = acc / qk;
        if (v < 0)
            throw NonIntegral("negative MacWilliams coefficient");
        out.at(j) = v;
        sum_check += v;
    }
    BigInt qn = 1;
    for (std::size_t i = 0; i < n; ++i)
        qn *= q;
    if (sum_check * qk != qn)
        throw std::logic_error("MacWilliams total mismatch");
    return out;
}

LinearCode apply_monomial(const LinearCode& c,
                          const std::vector<std::size_t>& perm,
                          const std::vector<Elem>& scale) {
    std::size_t n = c.length();
    if (perm.size() != n || scale.size() != n)
        throw std::invalid_argument("monomial map size mismatch");
    const FiniteField& f = *c.field();
    MatrixGF g(c.field(), c.dimension(), n);
    for (std::size_t j = 0; j < n; ++j) {
        if (perm[j] >= n)
            throw std::invalid_argument("monomial permutation out of range");
        if (scale[j] == 0)
            throw std::invalid_argument("monomial scale must be nonzero");
        for (std::size_t r = 0; r < c.dimension(); ++r)
            g.at(r, j) = f.mul(scale[j], c.generator().at(r, perm[j]));
    }
    return from_generator(g);
}

bool verify_monomial_map(const LinearCode& c1, const LinearCode& c2,
                         const std::vector<std::size_t>& perm,
                         const std::vector<Elem>& scale) {
    if (c1.length() != c2.length() ||
        c1.field()->order() != c2.field()->order())
        throw std::invalid_argument("codes not comparable");
    if (c1.dimension() != c2.dimension())
        return false;
    return apply_monomial(c1, perm, scale) == c2;
}

bool prange_check(const LinearCode& c, std::size_t coordinate,
                  std::uint64_t cap) {
    std::size_t n = c.length();
    if (coordinate >= n)
        throw std::invalid_argument("coordinate out of range");
    const auto& wd = weight_distribution(c, cap);
    if (!wd.min_positive_weight() || *wd.min_positive_weight() <= 1)
        throw std::invalid_argument("Prange identities need d > 1");

    CoordinateSet t{coordinate};
    const auto& ws = weight_distribution(shorten(c, t), cap);
    const auto& wp = weight_distribution(puncture(c, t), cap);
    for (std::size_t i = 0; i + 1 <= n; ++i) {
        BigInt lhs_s = BigInt(n) * ws.at(i);
        BigInt rhs_s = BigInt(n - i) * wd.at(i);
        if (lhs_s != rhs_s)
            return false;
        BigInt lhs_p = BigInt(n) * wp.at(i);
        BigInt rhs_p = BigInt(n - i) * wd.at(i) + BigInt(i + 1) * wd.at(i + 1);
        if (lhs_p != rhs_p)
            return false;
    }
    return true;
}

} // namespace codekit
