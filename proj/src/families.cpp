#include "codekit/families.hpp"

#include <bit>
#include <stdexcept>

namespace codekit {

ProjectivePointList::ProjectivePointList(FieldPtr field, std::uint32_t m)
    : field_(std::move(field)), m_(m) {
    if (m < 1)
        throw std::invalid_argument("projective dimension must be positive");
    std::uint32_t q = field_->order();

    // Normalized representatives have some leading zeros, then a 1, then m-l-1
    // free entries. Ascending lexicographic order means later leading
    // positions come first.
    for (std::uint32_t lead = m; lead-- > 0;) {
        std::uint64_t tails = 1;
        for (std::uint32_t i = lead + 1; i < m; ++i)
            tails *= q;
        for (std::uint64_t t = 0; t < tails; ++t) {
            std::vector<Elem> v(m, 0);
            v[lead] = 1;
            std::uint64_t rest = t;
            for (std::uint32_t i = m; i-- > lead + 1;) {
                v[i] = static_cast<Elem>(rest % q);
                rest /= q;
            }
            index_[pack(v)] = pts_.size();
            pts_.push_back(std::move(v));
        }
    }
}

std::uint64_t ProjectivePointList::pack(const std::vector<Elem>& v) const {
    std::uint64_t key = 0;
    for (Elem e : v)
        key = key * field_->order() + e;
    return key;
}

Elem ProjectivePointList::normalize(std::vector<Elem>& v) const {
    for (Elem e : v) {
        if (e == 0)
            continue;
        if (e != 1) {
            Elem inv = field_->inv(e);
            for (auto& x : v)
                x = field_->mul(inv, x);
        }
        return e;
    }
    throw std::invalid_argument("cannot normalize the zero vector");
}

std::size_t ProjectivePointList::index_of(const std::vector<Elem>& v) const {
    std::vector<Elem> w = v;
    normalize(w);
    auto it = index_.find(pack(w));
    if (it == index_.end())
        throw std::logic_error("vector not found in point list");
    return it->second;
}

MatrixGF ProjectivePointList::as_matrix() const {
    MatrixGF m(field_, m_, pts_.size());
    for (std::size_t j = 0; j < pts_.size(); ++j)
        for (std::uint32_t i = 0; i < m_; ++i)
            m.at(i, j) = pts_[j][i];
    return m;
}

LinearCode hamming(std::uint32_t q, std::uint32_t m) {
    if (m < 2)
        throw std::invalid_argument("Hamming codes need m >= 2");
    ProjectivePointList pts(make_field_q(q), m);
    return from_generator(kernel_basis(pts.as_matrix()));
}

LinearCode simplex(std::uint32_t q, std::uint32_t m) {
    if (m < 2)
        throw std::invalid_argument("Simplex codes need m >= 2");
    ProjectivePointList pts(make_field_q(q), m);
    return from_generator(pts.as_matrix());
}

LinearCode reed_muller(std::uint32_t r, std::uint32_t m) {
    if (r > m)
        throw std::invalid_argument("Reed-Muller order exceeds m");
    if (m >= 26)
        throw CapExceeded("Reed-Muller length cap");
    auto f2 = make_field(2, 1);
    std::size_t n = std::size_t(1) << m;

    // Monomial masks of weight <= r, by degree then numeric order; point j
    // has variable i equal to bit (m-1-i) of j so point order is
    // lexicographic on (x_0,...,x_{m-1}).
    std::vector<std::uint32_t> monomials;
    for (std::uint32_t deg = 0; deg <= r; ++deg)
        for (std::uint32_t mask = 0; mask < n; ++mask)
            if (static_cast<std::uint32_t>(std::popcount(mask)) == deg)
                monomials.push_back(mask);

    MatrixGF g(f2, monomials.size(), n);
    for (std::size_t row = 0; row < monomials.size(); ++row) {
        std::uint32_t mask = monomials[row];
        for (std::size_t j = 0; j < n; ++j) {
            std::uint32_t point = 0;
            for (std::uint32_t i = 0; i < m; ++i)
                if (j >> (m - 1 - i) & 1)
                    point |= std::uint32_t(1) << i;
            g.at(row, j) = (point & mask) == mask ? 1 : 0;
        }
    }
    return from_generator(g);
}

LinearCode irreducible_cyclic(std::uint32_t q, std::uint32_t m) {
    auto base = make_field_q(q);
    auto ext = make_extension(base, m);
    const FiniteField& amb = *ext->ambient();
    std::uint64_t n = amb.order() - 1;

    // Rows are the traces of gamma^i alpha^j over the power basis; alpha is
    // the canonical primitive element, also gamma.
    MatrixGF g(base, m, static_cast<std::size_t>(n));
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint64_t j = 0; j < n; ++j)
            g.at(i, static_cast<std::size_t>(j)) =
                rel_trace(*ext, amb.exp(i + j));
    return from_generator(g);
}

LinearCode defining_set_code(const ExtPtr& ext, const std::vector<Elem>& d) {
    if (d.empty())
        throw std::invalid_argument("defining set must be nonempty");
    const FiniteField& amb = *ext->ambient();
    std::uint32_t m = ext->m();
    MatrixGF g(ext->base(), m, d.size());
    for (std::uint32_t i = 0; i < m; ++i) {
        Elem basis_elem = amb.pow(amb.generator(), i);
        for (std::size_t j = 0; j < d.size(); ++j)
            g.at(i, j) = rel_trace(*ext, amb.mul(basis_elem, d[j]));
    }
    return from_generator(g);
}

namespace {

LinearCode ovoid_code(const OvoidPointSet& o) {
    MatrixGF g(o.field, 4, o.points.size());
    for (std::size_t j = 0; j < o.points.size(); ++j)
        for (std::size_t i = 0; i < 4; ++i)
            g.at(i, j) = o.points[j][i];
    return from_generator(g);
}

} // namespace

std::pair<OvoidPointSet, LinearCode> elliptic_quadric(std::uint32_t q) {
    if (q <= 2)
        throw std::invalid_argument("elliptic quadric needs q > 2");
    auto f = make_field_q(q);

    // Least a for which x^2 + x + a has no root.
    Elem a = 0;
    bool found = false;
    for (Elem cand = 0; cand < q && !found; ++cand) {
        bool rootless = true;
        for (Elem x = 0; x < q; ++x) {
            if (f->add(f->add(f->mul(x, x), x), cand) == 0) {
                rootless = false;
                break;
            }
        }
        if (rootless) {
            a = cand;
            found = true;
        }
    }
    if (!found)
        throw std::logic_error("no rootless x^2+x+a over GF(q)");

    OvoidPointSet o;
    o.field = f;
    o.kind = OvoidPointSet::Kind::EllipticQuadric;
    o.param = a;
    o.points.push_back({0, 0, 1, 0});
    for (Elem x = 0; x < q; ++x)
        for (Elem y = 0; y < q; ++y) {
            Elem z = f->add(f->add(f->mul(x, x), f->mul(x, y)),
                            f->mul(a, f->mul(y, y)));
            o.points.push_back({x, y, z, 1});
        }
    LinearCode c = ovoid_code(o);
    return {std::move(o), std::move(c)};
}

std::pair<OvoidPointSet, LinearCode> tits_ovoid(std::uint32_t e) {
    if (e < 1)
        throw std::invalid_argument("Tits ovoid needs e >= 1");
    std::uint32_t s = 2 * e + 1;
    auto f = make_field(2, s);
    std::uint32_t q = f->order();
    std::uint64_t sigma = std::uint64_t(1) << (e + 1);

    OvoidPointSet o;
    o.field = f;
    o.kind = OvoidPointSet::Kind::Tits;
    o.param = static_cast<Elem>(sigma);
    o.points.push_back({0, 0, 1, 0});
    for (Elem x = 0; x < q; ++x)
        for (Elem y = 0; y < q; ++y) {
            Elem z = f->add(f->add(f->pow(x, sigma), f->mul(x, y)),
                            f->pow(y, sigma + 2));
            o.points.push_back({x, y, z, 1});
        }
    LinearCode c = ovoid_code(o);
    return {std::move(o), std::move(c)};
}

bool no_three_collinear(const OvoidPointSet& o) {
    const FiniteField& f = *o.field;
    std::size_t n = o.points.size();
    auto rank3 = [&](std::size_t a, std::size_t b, std::size_t c) {
        // rank of the 4x3 matrix of the three points
        std::array<std::array<Elem, 3>, 4> m;
        for (std::size_t i = 0; i < 4; ++i)
            m[i] = {o.points[a][i], o.points[b][i], o.points[c][i]};
        std::size_t rank = 0;
        for (std::size_t col = 0; col < 3; ++col) {
            std::size_t piv = rank;
            while (piv < 4 && m[piv][col] == 0)
                ++piv;
            if (piv == 4)
                continue;
            std::swap(m[rank], m[piv]);
            Elem inv = f.inv(m[rank][col]);
            for (auto& x : m[rank])
                x = f.mul(inv, x);
            for (std::size_t r = 0; r < 4; ++r) {
                if (r == rank || m[r][col] == 0)
                    continue;
                Elem factor = m[r][col];
                for (std::size_t cidx = 0; cidx < 3; ++cidx)
                    m[r][cidx] = f.sub(m[r][cidx], f.mul(factor, m[rank][cidx]));
            }
            ++rank;
        }
        return rank == 3;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                if (!rank3(a, b, c))
                    return false;
    return true;
}

} // namespace codekit
