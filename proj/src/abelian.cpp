#include "gbs/abelian.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gbs {

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix mul(const IntMatrix &x, const IntMatrix &y)
{
    if (x.cols != y.rows)
        throw std::domain_error("matrix product: dimension mismatch");
    IntMatrix out(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const Int &v = x.at(i, k);
            if (v == 0)
                continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                out.at(i, j) += v * y.at(k, j);
        }
    return out;
}

Int determinant(const IntMatrix &input)
{
    if (input.rows != input.cols)
        throw std::domain_error("determinant: matrix not square");
    std::size_t n = input.rows;
    if (n == 0)
        return 1;
    IntMatrix m = input;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m.at(piv, k) == 0)
                ++piv;
            if (piv == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        // Bareiss: every division below is exact
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

std::vector<Int> SmithDecomposition::diagonal() const
{
    std::vector<Int> d;
    for (std::size_t i = 0; i < std::min(s.rows, s.cols); ++i)
        d.push_back(s.at(i, i));
    return d;
}

bool SmithDecomposition::verify(const IntMatrix &original) const
{
    if (mul(mul(u, original), v) != s)
        return false;
    Int du = determinant(u), dv = determinant(v);
    if ((du != 1 && du != -1) || (dv != 1 && dv != -1))
        return false;
    if (du != det_u || dv != det_v)
        return false;
    auto d = diagonal();
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 0)
            return false;
        if (i + 1 < d.size()) {
            if (d[i] == 0 && d[i + 1] != 0)
                return false; // zeros last
            if (d[i] != 0 && !divides(d[i], d[i + 1]))
                return false;
        }
    }
    for (std::size_t i = 0; i < s.rows; ++i)
        for (std::size_t j = 0; j < s.cols; ++j)
            if (i != j && s.at(i, j) != 0)
                return false;
    return true;
}

namespace {

struct SnfWorker {
    IntMatrix s, u, v;
    int det_u = 1, det_v = 1;

    explicit SnfWorker(const IntMatrix &a)
        : s(a), u(IntMatrix::identity(a.rows)), v(IntMatrix::identity(a.cols))
    {
    }

    void swap_rows(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t c = 0; c < s.cols; ++c)
            std::swap(s.at(i, c), s.at(j, c));
        for (std::size_t c = 0; c < u.cols; ++c)
            std::swap(u.at(i, c), u.at(j, c));
        det_u = -det_u;
    }

    void swap_cols(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t r = 0; r < s.rows; ++r)
            std::swap(s.at(r, i), s.at(r, j));
        for (std::size_t r = 0; r < v.rows; ++r)
            std::swap(v.at(r, i), v.at(r, j));
        det_v = -det_v;
    }

    void add_row(std::size_t dst, std::size_t src, const Int &f) // row dst += f * row src
    {
        for (std::size_t c = 0; c < s.cols; ++c)
            s.at(dst, c) += f * s.at(src, c);
        for (std::size_t c = 0; c < u.cols; ++c)
            u.at(dst, c) += f * u.at(src, c);
    }

    void add_col(std::size_t dst, std::size_t src, const Int &f)
    {
        for (std::size_t r = 0; r < s.rows; ++r)
            s.at(r, dst) += f * s.at(r, src);
        for (std::size_t r = 0; r < v.rows; ++r)
            v.at(r, dst) += f * v.at(r, src);
    }

    void negate_row(std::size_t i)
    {
        for (std::size_t c = 0; c < s.cols; ++c)
            s.at(i, c) = -s.at(i, c);
        for (std::size_t c = 0; c < u.cols; ++c)
            u.at(i, c) = -u.at(i, c);
        det_u = -det_u;
    }

    // smallest |entry| != 0 in the submatrix at (t, t); ties by row then column
    bool find_pivot(std::size_t t, std::size_t &pi, std::size_t &pj) const
    {
        bool found = false;
        Int best;
        for (std::size_t i = t; i < s.rows; ++i)
            for (std::size_t j = t; j < s.cols; ++j) {
                const Int &x = s.at(i, j);
                if (x == 0)
                    continue;
                if (!found || abs(x) < best) {
                    best = abs(x);
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        return found;
    }

    bool lone(std::size_t t) const
    {
        for (std::size_t i = t + 1; i < s.rows; ++i)
            if (s.at(i, t) != 0)
                return false;
        for (std::size_t j = t + 1; j < s.cols; ++j)
            if (s.at(t, j) != 0)
                return false;
        return true;
    }

    void run()
    {
        std::size_t nmin = std::min(s.rows, s.cols);
        for (std::size_t t = 0; t < nmin; ++t) {
            std::size_t pi, pj;
            if (!find_pivot(t, pi, pj))
                break; // rest of the matrix is zero
            swap_rows(t, pi);
            swap_cols(t, pj);
            while (true) {
                for (std::size_t i = t + 1; i < s.rows; ++i)
                    if (s.at(i, t) != 0)
                        add_row(i, t, -fdiv_q(s.at(i, t), s.at(t, t)));
                for (std::size_t j = t + 1; j < s.cols; ++j)
                    if (s.at(t, j) != 0)
                        add_col(j, t, -fdiv_q(s.at(t, j), s.at(t, t)));
                if (!lone(t)) {
                    if (find_pivot(t, pi, pj)) {
                        swap_rows(t, pi);
                        swap_cols(t, pj);
                    }
                    continue;
                }
                // pivot must divide every remaining entry
                bool fixed = true;
                for (std::size_t i = t + 1; i < s.rows && fixed; ++i)
                    for (std::size_t j = t + 1; j < s.cols && fixed; ++j)
                        if (!divides(s.at(t, t), s.at(i, j))) {
                            add_row(t, i, 1);
                            fixed = false;
                        }
                if (fixed)
                    break;
            }
            if (s.at(t, t) < 0)
                negate_row(t);
        }
    }
};

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix &a)
{
    SnfWorker w(a);
    w.run();
    SmithDecomposition snf{std::move(w.s), std::move(w.u), std::move(w.v), w.det_u, w.det_v};
#ifndef NDEBUG
    if (!snf.verify(a))
        throw std::logic_error("smith_normal_form: certificate check failed");
#endif
    return snf;
}

AbelianInvariants invariants_of(const IntMatrix &relations)
{
    SmithDecomposition snf = smith_normal_form(relations);
    AbelianInvariants inv;
    std::size_t nonzero = 0;
    for (const Int &d : snf.diagonal()) {
        if (d == 0)
            continue;
        ++nonzero;
        if (d > 1)
            inv.torsion.push_back(d);
    }
    inv.free_rank = relations.cols - nonzero;
    return inv;
}

std::string AbelianInvariants::str() const
{
    if (free_rank == 0 && torsion.empty())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < free_rank; ++i) {
        os << (first ? "" : " x ") << "Z";
        first = false;
    }
    for (const Int &t : torsion) {
        os << (first ? "" : " x ") << "Z_" << t.get_str();
        first = false;
    }
    return os.str();
}

IntMatrix exponent_matrix(const Presentation &pres)
{
    std::map<std::string, std::size_t> col;
    for (std::size_t j = 0; j < pres.generators.size(); ++j)
        col[pres.generators[j]] = j;
    IntMatrix m(pres.relators.size(), pres.generators.size());
    for (std::size_t i = 0; i < pres.relators.size(); ++i)
        for (const Syllable &s : pres.relators[i].syllables) {
            auto it = col.find(s.gen);
            if (it == col.end())
                throw std::domain_error("relator mentions undeclared generator '" + s.gen + "'");
            m.at(i, it->second) += s.exp;
        }
    return m;
}

AbelianInvariants abelianization(const Presentation &pres)
{
    return invariants_of(exponent_matrix(pres));
}

AbelianInvariants subgroup_matrix_invariants(const std::vector<std::vector<Int>> &rows,
                                             std::size_t generators)
{
    IntMatrix m(rows.size(), generators);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != generators)
            throw std::domain_error("relation row width does not match the generator count");
        for (std::size_t j = 0; j < generators; ++j)
            m.at(i, j) = rows[i][j];
    }
    return invariants_of(m);
}

IntMatrix parse_matrix(const std::string &text)
{
    std::istringstream is(text);
    std::string first;
    if (!std::getline(is, first))
        throw std::domain_error("matrix format: empty input");
    std::istringstream hdr(first);
    long r = -1, c = -1;
    if (!(hdr >> r >> c) || r < 0 || c < 0)
        throw std::domain_error("matrix format: first line must be 'ROWS COLS'");
    std::string rest;
    hdr >> rest;
    if (!rest.empty())
        throw std::domain_error("matrix format: first line must be 'ROWS COLS'");

    IntMatrix m{std::size_t(r), std::size_t(c)};
    std::string tok;
    for (std::size_t i = 0; i < m.rows * m.cols; ++i) {
        if (!(is >> tok))
            throw std::domain_error("matrix format: expected " + std::to_string(m.rows * m.cols) +
                                    " entries");
        m.a[i] = parse_int(tok);
    }
    if (is >> tok)
        throw std::domain_error("matrix format: trailing data");
    return m;
}

std::string format_matrix(const IntMatrix &m)
{
    std::ostringstream os;
    os << m.rows << " " << m.cols << "\n";
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j)
            os << (j ? " " : "") << m.at(i, j).get_str();
        os << "\n";
    }
    return os.str();
}

} // namespace gbs
