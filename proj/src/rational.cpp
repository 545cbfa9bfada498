#include "fewsphere/rational.hpp"

#include <algorithm>
#include <cctype>

#include "fewsphere/error.hpp"

namespace fewsphere {

namespace {

bool is_integer_text(const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(), [](unsigned char ch) { return std::isdigit(ch); });
}

using IntegerMatrix = std::vector<std::vector<mpz_class>>;

struct Echelon {
    IntegerMatrix rows;
    std::vector<std::size_t> pivot_cols;  // pivot_cols[r] is the pivot column of row r
};

// Fraction-free row echelon form.  Pivot: leftmost column with a nonzero
// entry among the remaining rows, topmost such row.
Echelon bareiss(const RationalMatrix& a, std::size_t cols) {
    Echelon e;
    e.rows.reserve(a.size());
    for (const auto& row : a) {
        if (row.size() != cols) throw Error(ErrorCode::InvalidInput, "ragged matrix");
        mpz_class scale = 1;
        for (const auto& q : row) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
        std::vector<mpz_class> ints(cols);
        for (std::size_t j = 0; j < cols; ++j) ints[j] = row[j].get_num() * (scale / row[j].get_den());
        e.rows.push_back(std::move(ints));
    }
    auto& m = e.rows;
    const std::size_t nrows = m.size();
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < nrows; ++col) {
        std::size_t p = r;
        while (p < nrows && m[p][col] == 0) ++p;
        if (p == nrows) continue;
        std::swap(m[r], m[p]);
        for (std::size_t i = r + 1; i < nrows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                m[i][j] = (m[r][col] * m[i][j] - m[i][col] * m[r][j]);
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = m[r][col];
        e.pivot_cols.push_back(col);
        ++r;
    }
    m.resize(r);
    return e;
}

RationalVector make_primitive(RationalVector v) {
    mpz_class den = 1;
    for (const auto& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    mpz_class g = 0;
    for (const auto& q : v) {
        mpz_class n = q.get_num() * (den / q.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (g == 0) return v;
    Rational factor(den, g);
    factor.canonicalize();
    for (auto& q : v) q *= factor;
    return v;
}

}  // namespace

std::string to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_fraction(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_integer_text(num, true) || !is_integer_text(den, false)) {
        throw Error(ErrorCode::InvalidInput, "malformed rational \"" + text + "\"");
    }
    mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
    mpz_class d(den, 10);
    if (d == 0) throw Error(ErrorCode::InvalidInput, "zero denominator in \"" + text + "\"");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::InvalidInput, "dimension mismatch in inner product");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const RationalVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

namespace linalg {

std::size_t rank(const RationalMatrix& a, std::size_t cols) { return bareiss(a, cols).pivot_cols.size(); }

RationalMatrix kernel_basis(const RationalMatrix& a, std::size_t cols) {
    const Echelon e = bareiss(a, cols);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

    RationalMatrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RationalVector x(cols, Rational(0));
        x[free] = 1;
        for (std::size_t r = e.rows.size(); r-- > 0;) {
            const std::size_t pc = e.pivot_cols[r];
            Rational s = 0;
            for (std::size_t j = pc + 1; j < cols; ++j) {
                if (x[j] != 0) s += Rational(e.rows[r][j]) * x[j];
            }
            x[pc] = -s / Rational(e.rows[r][pc]);
        }
        basis.push_back(make_primitive(std::move(x)));
    }
    return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& a, std::size_t cols, const RationalVector& b) {
    if (b.size() != a.size()) throw Error(ErrorCode::InvalidInput, "right-hand side has the wrong length");
    RationalMatrix augmented = a;
    for (std::size_t i = 0; i < augmented.size(); ++i) augmented[i].push_back(-b[i]);
    for (const auto& v : kernel_basis(augmented, cols + 1)) {
        if (v[cols] != 0) {
            RationalVector x(v.begin(), v.begin() + static_cast<long>(cols));
            for (auto& q : x) q /= v[cols];
            return x;
        }
    }
    return std::nullopt;
}

RationalMatrix transpose(const RationalMatrix& a, std::size_t cols) {
    RationalMatrix t(cols, RationalVector(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
    }
    return t;
}

std::optional<RationalVector> nonnegative_solution(const RationalMatrix& a, std::size_t cols, const RationalVector& b) {
    const std::size_t rows = a.size();
    if (b.size() != rows) throw Error(ErrorCode::InvalidInput, "right-hand side has the wrong length");
    // Tableau columns: cols originals, rows artificials, one right-hand side.
    const std::size_t width = cols + rows + 1;
    const std::size_t rhs = width - 1;
    RationalMatrix t(rows, RationalVector(width, Rational(0)));
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const int sign = b[i] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < cols; ++j) t[i][j] = sign * a[i][j];
        t[i][cols + i] = 1;
        t[i][rhs] = sign * b[i];
        basis[i] = cols + i;
    }
    // Reduced costs of the phase-one objective (sum of artificials).
    RationalVector cost(width, Rational(0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) cost[j] -= t[i][j];
        cost[rhs] -= t[i][rhs];
    }

    while (true) {
        std::size_t enter = width;
        for (std::size_t j = 0; j < rhs; ++j) {
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == width) break;
        std::size_t leave = rows;
        Rational best;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][rhs] / t[i][enter];
            if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == rows) break;  // unbounded direction; cannot happen for phase one

        const Rational piv = t[leave][enter];
        for (auto& q : t[leave]) q /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rational factor = t[i][enter];
            for (std::size_t j = 0; j < width; ++j) t[i][j] -= factor * t[leave][j];
        }
        if (cost[enter] != 0) {
            const Rational factor = cost[enter];
            for (std::size_t j = 0; j < width; ++j) cost[j] -= factor * t[leave][j];
        }
        basis[leave] = enter;
    }

    if (cost[rhs] != 0) return std::nullopt;
    RationalVector w(cols, Rational(0));
    for (std::size_t i = 0; i < rows; ++i) {
        if (basis[i] < cols) w[basis[i]] = t[i][rhs];
    }
    return w;
}

}  // namespace linalg

}  // namespace fewsphere
