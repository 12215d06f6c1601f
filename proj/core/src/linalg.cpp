#include <saito/linalg.hpp>

#include <algorithm>

namespace saito {

namespace {

struct EchelonForm {
    std::vector<std::vector<Scalar>> rows;
    std::vector<std::size_t> pivots;
    bool odd_swaps = false;
};

EchelonForm bareiss(const ScalarMatrix& m) {
    EchelonForm e;
    e.rows.assign(m.rows(), std::vector<Scalar>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) e.rows[i][j] = m(i, j);
    auto& a = e.rows;
    Scalar prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && a[p][c].is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            e.odd_swaps = !e.odd_swaps;
        }
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            for (std::size_t j = c + 1; j < m.cols(); ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = Scalar(0);
        }
        prev = a[r][c];
        e.pivots.push_back(c);
        ++r;
    }
    return e;
}

}  // namespace

std::size_t rank(const ScalarMatrix& m) { return bareiss(m).pivots.size(); }

Scalar determinant(const ScalarMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() == 0) return Scalar(1);
    auto e = bareiss(m);
    if (e.pivots.size() < m.rows()) return Scalar(0);
    Scalar d = e.rows.back().back();
    return e.odd_swaps ? -d : d;
}

std::vector<std::vector<Scalar>> kernel_basis(const ScalarMatrix& m) {
    auto e = bareiss(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> x(m.cols(), Scalar(0));
        x[f] = Scalar(1);
        for (std::size_t r = e.pivots.size(); r-- > 0;) {
            const std::size_t pc = e.pivots[r];
            Scalar s(0);
            for (std::size_t j = pc + 1; j < m.cols(); ++j)
                if (!x[j].is_zero() && !e.rows[r][j].is_zero()) s += e.rows[r][j] * x[j];
            x[pc] = -s / e.rows[r][pc];
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

Polynomial determinant(const PolyMatrix& m0) {
    const std::size_t n = m0.size();
    for (const auto& row : m0)
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0) return Polynomial(0, Scalar(1));
    const std::size_t nv = m0[0][0].nvars();
    PolyMatrix a = m0;
    Polynomial prev(nv, Scalar(1));
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k].is_zero()) ++p;
        if (p == n) return Polynomial(nv);
        if (p != k) {
            std::swap(a[p], a[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            a[i][k] = Polynomial(nv);
        }
        prev = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

QVector make_qvector(std::vector<std::pair<std::uint32_t, mpq_class>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    QVector out;
    for (auto& e : entries) {
        if (!out.empty() && out.back().first == e.first) {
            out.back().second += e.second;
            if (sgn(out.back().second) == 0) out.pop_back();
        } else if (sgn(e.second) != 0) {
            out.push_back(std::move(e));
        }
    }
    return out;
}

namespace {

using ZVector = std::vector<std::pair<std::uint32_t, mpz_class>>;

// a*x - b*y
ZVector combine(const mpz_class& a, const ZVector& x, const mpz_class& b, const ZVector& y) {
    ZVector out;
    out.reserve(x.size() + y.size());
    auto i = x.begin();
    auto j = y.begin();
    mpz_class t;
    while (i != x.end() || j != y.end()) {
        if (j == y.end() || (i != x.end() && i->first < j->first)) {
            out.emplace_back(i->first, a * i->second);
            ++i;
        } else if (i == x.end() || j->first < i->first) {
            out.emplace_back(j->first, -b * j->second);
            ++j;
        } else {
            t = a * i->second - b * j->second;
            if (sgn(t) != 0) out.emplace_back(i->first, t);
            ++i;
            ++j;
        }
    }
    return out;
}

void accumulate_gcd(mpz_class& g, const ZVector& v) {
    for (const auto& e : v) {
        if (g == 1) return;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
    }
}

void divide_exact(ZVector& v, const mpz_class& g) {
    for (auto& e : v) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

// Scales v and tag by a common factor so that all entries are coprime integers.
std::pair<ZVector, ZVector> to_integer(const QVector& v, const QVector& tag) {
    mpz_class l = 1;
    for (const auto* vec : {&v, &tag})
        for (const auto& e : *vec) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.second.get_den_mpz_t());
    auto conv = [&](const QVector& q) {
        ZVector z;
        z.reserve(q.size());
        for (const auto& e : q) z.emplace_back(e.first, mpz_class(e.second.get_num() * (l / e.second.get_den())));
        return z;
    };
    ZVector zv = conv(v), zt = conv(tag);
    mpz_class g = 0;
    accumulate_gcd(g, zv);
    accumulate_gcd(g, zt);
    if (g > 1) {
        divide_exact(zv, g);
        divide_exact(zt, g);
    }
    return {std::move(zv), std::move(zt)};
}

QVector to_rational(const ZVector& z, const mpz_class& scale) {
    QVector q;
    q.reserve(z.size());
    for (const auto& e : z) {
        mpq_class x(e.second, scale);
        x.canonicalize();
        q.emplace_back(e.first, std::move(x));
    }
    return q;
}

}  // namespace

Echelon::Reduced Echelon::reduce(ZVector v, ZVector tag) const {
    mpz_class scale = 1;
    mpz_class g, fa, fb;
    while (!v.empty()) {
        auto it = pivot_.find(v.front().first);
        if (it == pivot_.end()) break;
        const Row& row = rows_[it->second];
        const mpz_class& a = v.front().second;
        const mpz_class& b = row.v.front().second;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        fa = b / g;
        fb = a / g;
        v = combine(fa, v, fb, row.v);
        if (!tag.empty() || !row.tag.empty()) tag = combine(fa, tag, fb, row.tag);
        scale *= fa;
        g = scale;
        accumulate_gcd(g, v);
        accumulate_gcd(g, tag);
        g = abs(g);
        if (g > 1) {
            divide_exact(v, g);
            divide_exact(tag, g);
            mpz_divexact(scale.get_mpz_t(), scale.get_mpz_t(), g.get_mpz_t());
        }
    }
    return {std::move(v), std::move(tag), std::move(scale)};
}

std::optional<QVector> Echelon::insert(const QVector& v, const QVector& tag) {
    auto [zv, zt] = to_integer(v, tag);
    Reduced r = reduce(std::move(zv), std::move(zt));
    if (r.v.empty()) return to_rational(r.tag, mpz_class(1));
    pivot_.emplace(r.v.front().first, static_cast<std::uint32_t>(rows_.size()));
    rows_.push_back({std::move(r.v), std::move(r.tag)});
    return std::nullopt;
}

bool Echelon::contains(const QVector& v) const {
    auto [zv, zt] = to_integer(v, {});
    return reduce(std::move(zv), {}).v.empty();
}

std::optional<QVector> Echelon::coordinates(const QVector& v) const {
    if (v.empty()) return QVector{};
    // to_integer may rescale v, so track the factor to undo it
    mpz_class l = 1;
    for (const auto& e : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.second.get_den_mpz_t());
    ZVector zv;
    for (const auto& e : v) zv.emplace_back(e.first, mpz_class(e.second.get_num() * (l / e.second.get_den())));
    Reduced r = reduce(std::move(zv), {});
    if (!r.v.empty()) return std::nullopt;
    // scale * l * v + L(tag) = 0 modulo untagged rows
    QVector out = to_rational(r.tag, mpz_class(r.scale * l));
    for (auto& e : out) e.second = -e.second;
    return out;
}

std::size_t rank_of(const std::vector<QVector>& vectors) {
    Echelon e;
    for (const auto& v : vectors) e.insert(v);
    return e.rank();
}

}  // namespace saito
