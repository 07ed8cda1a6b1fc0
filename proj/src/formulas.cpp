#include "codekit/formulas.hpp"

#include <stdexcept>

namespace codekit {

BigInt binom(std::ptrdiff_t n, std::ptrdiff_t k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt r = 1;
    for (std::ptrdiff_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

namespace {

BigInt ipow(BigInt base, std::uint64_t e) {
    BigInt r = 1;
    while (e) {
        if (e & 1)
            r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

BigInt sign(std::uint64_t e) { return (e & 1) ? BigInt(-1) : BigInt(1); }

WeightDistribution wd_from_terms(
    std::size_t n, const std::vector<std::pair<std::size_t, BigInt>>& terms) {
    WeightDistribution wd(n);
    for (const auto& [w, c] : terms) {
        if (c < 0)
            throw NonIntegral("negative predicted count");
        wd.at(w) += c;
    }
    return wd;
}

} // namespace

WeightDistribution hamming_wd_formula(std::uint32_t q, std::uint32_t m) {
    if (m < 2)
        throw std::invalid_argument("Hamming codes need m >= 2");
    BigInt qm = ipow(q, m);
    BigInt qm1 = ipow(q, m - 1);
    BigInt n_big = (qm - 1) / (q - 1);
    std::size_t n = static_cast<std::size_t>(n_big);
    std::size_t n1 = static_cast<std::size_t>((qm1 - 1) / (q - 1));
    std::size_t cap_n = static_cast<std::size_t>(qm1);

    std::vector<BigInt> pw(n + 1);
    pw[0] = 1;
    for (std::size_t i = 1; i <= n; ++i)
        pw[i] = pw[i - 1] * (q - 1);

    WeightDistribution wd(n);
    for (std::size_t k = 0; k <= n; ++k) {
        BigInt acc = 0;
        for (std::size_t i = 0; i <= std::min(k, n1); ++i) {
            std::size_t j = k - i;
            if (j > cap_n)
                continue;
            BigInt kernel = pw[k] + sign(j) * pw[i] * (qm - 1);
            acc += binom(static_cast<std::ptrdiff_t>(n1),
                         static_cast<std::ptrdiff_t>(i)) *
                   binom(static_cast<std::ptrdiff_t>(cap_n),
                         static_cast<std::ptrdiff_t>(j)) *
                   kernel;
        }
        if (acc % qm != 0)
            throw NonIntegral("Hamming weight count not divisible by q^m");
        BigInt v = acc / qm;
        if (v < 0)
            throw NonIntegral("negative Hamming weight count");
        wd.at(k) = v;
    }
    return wd;
}

WeightDistribution shortened_wd_formula(const WeightDistribution& wd,
                                        std::size_t t) {
    std::size_t n = wd.length();
    if (t > n)
        throw std::invalid_argument("t exceeds length");
    if (t == 0)
        return wd;
    if (wd.at(0) != 1)
        throw std::invalid_argument("A_0 must be 1");

    WeightDistribution out(n - t);
    out.at(0) = 1;
    for (std::size_t k = std::max<std::size_t>(t, 1); k <= n - t; ++k) {
        if (wd.at(k) == 0)
            continue;
        BigInt num = binom(k, t) * binom(n - t, k) * wd.at(k);
        BigInt den = binom(n, t) * binom(n - t, k - t);
        if (den == 0 || num % den != 0)
            throw NonIntegral("shortened count not integral at weight " +
                              std::to_string(k));
        out.at(k) = num / den;
    }
    return out;
}

WeightDistribution punctured_wd_formula(const WeightDistribution& wd,
                                        std::size_t t) {
    std::size_t n = wd.length();
    if (t > n)
        throw std::invalid_argument("t exceeds length");
    if (t == 0)
        return wd;
    if (wd.at(0) != 1)
        throw std::invalid_argument("A_0 must be 1");

    BigInt cnt = binom(n, t);
    WeightDistribution out(n - t);
    out.at(0) = 1;
    for (std::size_t k = 1; k <= n - t; ++k) {
        // terms are not individually integral; accumulate exactly
        BigRat acc = 0;
        for (std::size_t i = 0; i <= t; ++i) {
            if (k + i > n || wd.at(k + i) == 0)
                continue;
            std::ptrdiff_t lower = static_cast<std::ptrdiff_t>(k + i) -
                                   static_cast<std::ptrdiff_t>(t);
            BigInt num = binom(n - t, k) * binom(k + i, t) * binom(t, i) *
                         wd.at(k + i);
            BigInt den = binom(static_cast<std::ptrdiff_t>(n - t), lower) * cnt;
            if (num == 0)
                continue;
            if (den == 0)
                throw NonIntegral("punctured formula term undefined");
            acc += BigRat(num, den);
        }
        BigInt whole = boost::multiprecision::numerator(acc);
        if (boost::multiprecision::denominator(acc) != 1)
            throw NonIntegral("punctured count not integral at weight " +
                              std::to_string(k));
        if (whole < 0)
            throw NonIntegral("negative punctured count");
        out.at(k) = whole;
    }
    return out;
}

std::pair<WeightDistribution, WeightDistribution>
prange_formulas(const WeightDistribution& wd) {
    std::size_t n = wd.length();
    if (n == 0)
        throw std::invalid_argument("empty distribution");
    WeightDistribution punct(n - 1), shrt(n - 1);
    for (std::size_t i = 0; i <= n - 1; ++i) {
        BigInt p_num = BigInt(n - i) * wd.at(i) + BigInt(i + 1) * wd.at(i + 1);
        BigInt s_num = BigInt(n - i) * wd.at(i);
        if (p_num % n != 0 || s_num % n != 0)
            throw NonIntegral("Prange count not integral at weight " +
                              std::to_string(i));
        punct.at(i) = p_num / n;
        shrt.at(i) = s_num / n;
    }
    return {std::move(punct), std::move(shrt)};
}

WeightDistribution ovoid_dual_wd_formula(std::uint32_t q) {
    if (q < 4)
        throw std::invalid_argument("ovoid dual distribution needs q >= 4");
    std::size_t n = std::size_t(q) * q + 1;
    BigInt q4 = ipow(q, 4);
    BigInt u = BigInt(q) * (q - 1) * n; // (q^2-q)(q^2+1)
    BigInt v = BigInt(q - 1) * n;       // (q-1)(q^2+1)
    std::size_t qq = n - 1;             // q^2

    std::vector<BigInt> pw(n + 2);
    pw[0] = 1;
    for (std::size_t i = 1; i < pw.size(); ++i)
        pw[i] = pw[i - 1] * (q - 1);

    WeightDistribution wd(n);
    wd.at(0) = 1;
    for (std::size_t ell = 4; ell <= qq; ++ell) {
        BigInt acc = binom(n, ell) * pw[ell];
        BigInt mid = 0;
        for (std::size_t i = 0; i <= std::min<std::size_t>(ell, qq - q); ++i) {
            std::size_t j = ell - i;
            if (j > std::size_t(q) + 1)
                continue;
            mid += sign(i) * binom(qq - q, i) * binom(std::size_t(q) + 1, j) *
                   pw[j];
        }
        acc += u * mid;
        acc += v * (sign(ell) * binom(qq, ell) -
                    sign(ell) * (q - 1) * binom(qq, ell - 1));
        if (acc % q4 != 0)
            throw NonIntegral("ovoid dual count not divisible by q^4");
        BigInt val = acc / q4;
        if (val < 0)
            throw NonIntegral("negative ovoid dual count");
        wd.at(ell) = val;
    }
    BigInt top = pw[n] + u * pw[std::size_t(q) + 1] + v * (q - 1);
    if (top % q4 != 0)
        throw NonIntegral("ovoid dual top count not divisible by q^4");
    wd.at(n) = top / q4;

    BigInt expected = ipow(q, qq - 3);
    if (wd.total() != expected)
        throw NonIntegral("ovoid dual distribution total mismatch");
    return wd;
}

const char* theorem_name(TheoremId id) {
    switch (id) {
    case TheoremId::HamShort1:
        return "ham-short-1";
    case TheoremId::HamShort2:
        return "ham-short-2";
    case TheoremId::RmShort1:
        return "rm-short-1";
    case TheoremId::RmShort2:
        return "rm-short-2";
    case TheoremId::RmShort3:
        return "rm-short-3";
    case TheoremId::OvoidShort:
        return "ovoid-short";
    }
    throw std::logic_error("unknown theorem id");
}

TheoremId theorem_from_name(const std::string& name) {
    for (TheoremId id :
         {TheoremId::HamShort1, TheoremId::HamShort2, TheoremId::RmShort1,
          TheoremId::RmShort2, TheoremId::RmShort3, TheoremId::OvoidShort})
        if (name == theorem_name(id))
            return id;
    throw std::invalid_argument("unknown theorem tag: " + name);
}

int theorem_subcode_count(TheoremId id) {
    switch (id) {
    case TheoremId::HamShort1:
        return 4;
    case TheoremId::HamShort2:
        return 3;
    case TheoremId::RmShort1:
        return 4;
    case TheoremId::RmShort2:
        return 4;
    case TheoremId::RmShort3:
        return 2;
    case TheoremId::OvoidShort:
        return 4;
    }
    throw std::logic_error("unknown theorem id");
}

namespace {

PredictedCode ham_short1_pred(int sub, std::uint32_t q, std::uint32_t m) {
    BigInt qm = ipow(q, m);
    std::size_t n = static_cast<std::size_t>((qm - 1) / (q - 1));
    if (n < 4)
        throw std::invalid_argument("theorem needs n >= 4");
    std::size_t qm1 = static_cast<std::size_t>(ipow(q, m - 1));
    switch (sub) {
    case 1: {
        auto wd = shortened_wd_formula(hamming_wd_formula(q, m), 1);
        return {n - 1, n - m - 1, 3, std::move(wd)};
    }
    case 2:
        return {n - 1, std::size_t(m - 1), qm1,
                wd_from_terms(n - 1, {{0, 1}, {qm1, BigInt(qm1) - 1}})};
    case 3:
        return {n - 1, std::size_t(m), qm1 - 1,
                wd_from_terms(n - 1, {{0, 1},
                                      {qm1 - 1, BigInt(q - 1) * qm1},
                                      {qm1, BigInt(qm1) - 1}})};
    case 4: {
        // ((1+(q-1)z)^{n-1} + (q^{m-1}-1)(1-z)^{q^{m-1}}
        //   (1+(q-1)z)^{n-1-q^{m-1}}) / q^{m-1}
        std::size_t len = n - 1;
        std::vector<BigInt> coeff(len + 1, 0);
        for (std::size_t k = 0; k <= len; ++k)
            coeff[k] = binom(len, k) * ipow(q - 1, k);
        std::size_t b = qm1, a = len - qm1;
        for (std::size_t k = 0; k <= len; ++k) {
            BigInt conv = 0;
            for (std::size_t i = 0; i <= std::min(k, b); ++i)
                conv += sign(i) * binom(b, i) * binom(a, k - i) *
                        ipow(q - 1, k - i);
            coeff[k] += (BigInt(qm1) - 1) * conv;
        }
        WeightDistribution wd(len);
        BigInt div = qm1;
        for (std::size_t k = 0; k <= len; ++k) {
            if (coeff[k] % div != 0)
                throw NonIntegral("four-term enumerator not divisible");
            if (coeff[k] < 0)
                throw NonIntegral("negative predicted count");
            wd.at(k) = coeff[k] / div;
        }
        return {len, n - m, 2, std::move(wd)};
    }
    default:
        throw std::invalid_argument("sub-code index out of range");
    }
}

PredictedCode ham_short2_pred(int sub, std::uint32_t q, std::uint32_t m) {
    BigInt qm = ipow(q, m);
    std::size_t n = static_cast<std::size_t>((qm - 1) / (q - 1));
    if (n < 6)
        throw std::invalid_argument("theorem needs n >= 6");
    std::size_t qm1 = static_cast<std::size_t>(ipow(q, m - 1));
    std::size_t qm2 = static_cast<std::size_t>(ipow(q, m - 2));
    switch (sub) {
    case 1: {
        auto wd = shortened_wd_formula(hamming_wd_formula(q, m), 2);
        return {n - 2, n - m - 2, 3, std::move(wd)};
    }
    case 2:
        return {n - 2, std::size_t(m - 2), qm1,
                wd_from_terms(n - 2, {{0, 1}, {qm1, BigInt(qm2) - 1}})};
    case 3:
        return {n - 2, std::size_t(m), qm1 - 2,
                wd_from_terms(n - 2,
                              {{0, 1},
                               {qm1 - 2, BigInt(q - 1) * (q - 1) * qm2},
                               {qm1 - 1, BigInt(2) * (q - 1) * qm2},
                               {qm1, BigInt(qm2) - 1}})};
    default:
        throw std::invalid_argument("sub-code index out of range");
    }
}

PredictedCode rm_short1_pred(int sub, std::uint32_t m) {
    if (m < 3)
        throw std::invalid_argument("theorem needs m >= 3");
    std::size_t n = (std::size_t(1) << m) - 1;
    std::size_t half = std::size_t(1) << (m - 1);
    switch (sub) {
    case 1:
        return {n, m, half, wd_from_terms(n, {{0, 1}, {half, BigInt(n)}})};
    case 2:
        return {n, n - m, 3, hamming_wd_formula(2, m)};
    case 3: {
        auto top = rm_short1_pred(4, m);
        auto wd = macwilliams(top.wd, m + 1, 2);
        return {n, n - m - 1, 4, std::move(wd)};
    }
    case 4:
        return {n, std::size_t(m + 1), half - 1,
                wd_from_terms(n, {{0, 1},
                                  {half - 1, BigInt(n)},
                                  {half, BigInt(n)},
                                  {n, 1}})};
    default:
        throw std::invalid_argument("sub-code index out of range");
    }
}

PredictedCode rm_short2_pred(int sub, std::uint32_t m) {
    if (m < 3)
        throw std::invalid_argument("theorem needs m >= 3");
    std::size_t n = (std::size_t(1) << m) - 2;
    std::size_t half = std::size_t(1) << (m - 1);
    switch (sub) {
    case 1:
        // the shortened one-weight code keeps weight 2^{m-1}; the stated
        // exponent 2^{m-1}-1 does not survive brute force (see the dual in
        // sub-code 4, whose MacWilliams transform pins this one down)
        return {n, std::size_t(m - 1), half,
                wd_from_terms(n, {{0, 1}, {half, BigInt(half) - 1}})};
    case 2: {
        auto one = rm_short2_pred(1, m);
        auto wd = macwilliams(one.wd, m - 1, 2);
        return {n, n - m + 1, 2, std::move(wd)};
    }
    case 3: {
        auto top = rm_short2_pred(4, m);
        auto wd = macwilliams(top.wd, m + 1, 2);
        return {n, n - m - 1, 4, std::move(wd)};
    }
    case 4:
        return {n, std::size_t(m + 1), half - 2,
                wd_from_terms(n, {{0, 1},
                                  {half - 2, BigInt(half) - 1},
                                  {half - 1, BigInt(2) * half},
                                  {half, BigInt(half) - 1},
                                  {n, 1}})};
    default:
        throw std::invalid_argument("sub-code index out of range");
    }
}

PredictedCode rm_short3_pred(int sub, std::uint32_t m) {
    if (m < 3)
        throw std::invalid_argument("theorem needs m >= 3");
    std::size_t n = (std::size_t(1) << m) - 3;
    std::size_t half = std::size_t(1) << (m - 1);
    std::size_t quarter = std::size_t(1) << (m - 2);
    switch (sub) {
    case 1:
        return {n, std::size_t(m + 1), half - 3,
                wd_from_terms(n, {{0, 1},
                                  {half - 3, BigInt(quarter) - 1},
                                  {half - 2, BigInt(3) * quarter},
                                  {half - 1, BigInt(3) * quarter},
                                  {half, BigInt(quarter) - 1},
                                  {n, 1}})};
    case 2: {
        auto top = rm_short3_pred(1, m);
        auto wd = macwilliams(top.wd, m + 1, 2);
        return {n, n - m - 1, 4, std::move(wd)};
    }
    default:
        throw std::invalid_argument("sub-code index out of range");
    }
}

PredictedCode ovoid_short_pred(int sub, std::uint32_t q) {
    if (q < 4)
        throw std::invalid_argument("theorem needs q >= 4");
    std::size_t qq = std::size_t(q) * q;
    switch (sub) {
    case 1:
        return {qq, 3, qq - q,
                wd_from_terms(qq, {{0, 1},
                                   {qq - q, BigInt(q) * (qq - 1)},
                                   {qq, BigInt(q) - 1}})};
    case 2: {
        auto one = ovoid_short_pred(1, q);
        auto wd = macwilliams(one.wd, 3, q);
        return {qq, qq - 3, 3, std::move(wd)};
    }
    case 3:
        return {qq, 4, qq - q - 1,
                wd_from_terms(qq, {{0, 1},
                                   {qq - q - 1, BigInt(qq) * (q - 1) * (q - 1)},
                                   {qq - q, BigInt(q) * (qq - 1)},
                                   {qq - 1, BigInt(qq) * (q - 1)},
                                   {qq, BigInt(q) - 1}})};
    case 4: {
        auto wd = shortened_wd_formula(ovoid_dual_wd_formula(q), 1);
        return {qq, qq - 4, 4, std::move(wd)};
    }
    default:
        throw std::invalid_argument("sub-code index out of range");
    }
}

} // namespace

PredictedCode predicted_enumerator(TheoremId id, int sub, std::uint32_t q,
                                   std::uint32_t m) {
    if (sub < 1 || sub > theorem_subcode_count(id))
        throw std::invalid_argument("sub-code index out of range");
    switch (id) {
    case TheoremId::HamShort1:
        return ham_short1_pred(sub, q, m);
    case TheoremId::HamShort2:
        return ham_short2_pred(sub, q, m);
    case TheoremId::RmShort1:
        if (q != 2)
            throw std::invalid_argument("Reed-Muller theorems are binary");
        return rm_short1_pred(sub, m);
    case TheoremId::RmShort2:
        if (q != 2)
            throw std::invalid_argument("Reed-Muller theorems are binary");
        return rm_short2_pred(sub, m);
    case TheoremId::RmShort3:
        if (q != 2)
            throw std::invalid_argument("Reed-Muller theorems are binary");
        return rm_short3_pred(sub, m);
    case TheoremId::OvoidShort:
        return ovoid_short_pred(sub, q);
    }
    throw std::logic_error("unknown theorem id");
}

bool punctured_mindist_condition(std::size_t k, std::uint32_t q, std::size_t t,
                                 const BigInt& a_d) {
    if (t > k)
        return false;
    BigInt bound = ipow(q, k) - ipow(q, k - t) * ipow(q - 1, t) - 1;
    return a_d > bound;
}

} // namespace codekit
