#include "weylkit/numeric.hpp"

namespace weylkit {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::UnsupportedType: return "unsupported type";
        case ErrorKind::NotInRootLattice: return "not in root lattice";
        case ErrorKind::MixedRootSystem: return "mixed root systems";
        case ErrorKind::BadTwist: return "bad twist";
        case ErrorKind::NotDominant: return "not dominant";
        case ErrorKind::NotInvariant: return "not Weyl-invariant";
        case ErrorKind::NotARoot: return "not a root";
        case ErrorKind::NotRestricted: return "not restricted";
        case ErrorKind::InvalidTable: return "invalid table";
        case ErrorKind::InvalidRegistry: return "invalid registry";
        case ErrorKind::MissingData: return "missing data";
        case ErrorKind::InconsistentFacts: return "inconsistent facts";
        case ErrorKind::SyntaxError: return "syntax error";
        case ErrorKind::DataFormat: return "data format error";
        case ErrorKind::Io: return "io error";
    }
    return "error";
}

LinearSolution solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t m = a.size();
    if (b.size() != m) throw Error(ErrorKind::InconsistentFacts, "system shape mismatch");
    const std::size_t n = m == 0 ? 0 : a.front().size();
    for (const auto& row : a)
        if (row.size() != n) throw Error(ErrorKind::InconsistentFacts, "system shape mismatch");

    // Gauss-Jordan with exact pivoting (first nonzero pivot); works for any m x n.
    std::vector<std::size_t> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t pivot = row;
        while (pivot < m && a[pivot][col] == 0) ++pivot;
        if (pivot == m) continue;
        std::swap(a[pivot], a[row]);
        std::swap(b[pivot], b[row]);
        const Rational inv = a[row][col];
        for (std::size_t j = col; j < n; ++j) a[row][j] /= inv;
        b[row] /= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || a[i][col] == 0) continue;
            const Rational factor = a[i][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= factor * a[row][j];
            b[i] -= factor * b[row];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }

    LinearSolution out;
    for (std::size_t i = row; i < m; ++i) {
        if (b[i] != 0) {
            out.status = LinearSolution::Status::Inconsistent;
            return out;
        }
    }
    if (row < n) {
        out.status = LinearSolution::Status::Underdetermined;
        return out;
    }
    out.status = LinearSolution::Status::Unique;
    out.values.assign(n, Rational(0));
    for (std::size_t i = 0; i < row; ++i) out.values[pivot_col_of_row[i]] = b[i];
    return out;
}

std::int64_t checked_prime_power(std::int64_t p, int r) {
    bool prime = p >= 2;
    for (std::int64_t f = 2; f * f <= p && prime; ++f)
        if (p % f == 0) prime = false;
    if (!prime) throw Error(ErrorKind::NotRestricted, "p = " + std::to_string(p) + " is not prime");
    if (r < 1) throw Error(ErrorKind::NotRestricted, "r must be >= 1");
    std::int64_t q = 1;
    for (int k = 0; k < r; ++k) {
        q *= p;
        if (q > (1 << 20)) throw Error(ErrorKind::UnsupportedType, "p^r too large to enumerate");
    }
    return q;
}

bool is_prime_power(std::int64_t q) {
    if (q < 2) return false;
    std::int64_t f = 2;
    while (f * f <= q && q % f != 0) ++f;
    if (f * f > q) return true;  // q itself is prime
    while (q % f == 0) q /= f;
    return q == 1;
}

std::optional<std::int64_t> int_to_i64(const Int& v) {
    if (v > (std::numeric_limits<std::int64_t>::max)() || v < (std::numeric_limits<std::int64_t>::min)())
        return std::nullopt;
    return static_cast<std::int64_t>(v);
}

}  // namespace weylkit
