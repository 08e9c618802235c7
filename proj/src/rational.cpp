#include "qclass/rational.hpp"

#include <algorithm>
#include <cctype>

namespace qclass {

namespace {

std::string strip(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool is_integer_text(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const std::string s = strip(text);
    const size_t slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_text(s)) throw ParseError("bad rational: '" + text + "'");
        return Rational(Integer(s));
    }
    const std::string num = strip(s.substr(0, slash));
    const std::string den = strip(s.substr(slash + 1));
    if (!is_integer_text(num) || !is_integer_text(den))
        throw ParseError("bad rational: '" + text + "'");
    Integer d(den);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(Integer(num), d);
}

std::string format_rational(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

std::string decimal_approx(const Rational& x, int digits) {
    Integer num = numerator(x);
    const Integer den = denominator(x);
    const bool neg = num < 0;
    if (neg) num = -num;
    Integer scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    // round half away from zero
    Integer scaled = (num * scale * 2 + den) / (den * 2);
    Integer whole = scaled / scale;
    Integer frac = scaled % scale;
    std::string out = (neg && scaled != 0 ? "-" : "") + whole.str();
    if (digits > 0) {
        std::string f = frac.str();
        out += "." + std::string(digits - f.size(), '0') + f;
    }
    return out;
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a == 0) return b < 0 ? Rational(-b) : b;
    if (b == 0) return a < 0 ? Rational(-a) : a;
    const Integer n = gcd(numerator(a), numerator(b));
    const Integer d = lcm(denominator(a), denominator(b));
    Rational g(n, d);
    return g < 0 ? Rational(-g) : g;
}

Matrix invert_matrix(const Matrix& m) {
    const size_t n = m.size();
    Matrix a = m;
    Matrix inv(n, std::vector<Rational>(n, 0));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw SingularPairing("pairing matrix is not square");
        inv[i][i] = 1;
    }
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw SingularPairing("pairing matrix is singular");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational p = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const Rational f = a[row][col];
            for (size_t j = 0; j < n; ++j) {
                a[row][j] -= f * a[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

bool solve_linear_system(const Matrix& a, const std::vector<Rational>& rhs,
                         std::vector<Rational>& solution) {
    const size_t rows = a.size();
    const size_t cols = rows == 0 ? 0 : a[0].size();
    Matrix m = a;
    std::vector<Rational> b = rhs;
    std::vector<size_t> pivot_col_of_row;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        std::swap(b[pivot], b[row]);
        const Rational p = m[row][col];
        for (size_t j = col; j < cols; ++j) m[row][j] /= p;
        b[row] /= p;
        for (size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (size_t j = col; j < cols; ++j) m[r][j] -= f * m[row][j];
            b[r] -= f * b[row];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (size_t r = row; r < rows; ++r)
        if (b[r] != 0) return false;  // inconsistent
    solution.assign(cols, 0);
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r)
        solution[pivot_col_of_row[r]] = b[r];
    return true;
}

}  // namespace qclass
