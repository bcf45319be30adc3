#ifndef WEYLKIT_NUMERIC_HPP
#define WEYLKIT_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylkit {

// All multiplicities, dimensions and coefficients are arbitrary-precision;
// weight coordinates stay machine integers.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class ErrorKind {
    UnsupportedType,
    NotInRootLattice,
    MixedRootSystem,
    BadTwist,
    NotDominant,
    NotInvariant,
    NotARoot,
    NotRestricted,
    InvalidTable,
    InvalidRegistry,
    MissingData,
    InconsistentFacts,
    SyntaxError,
    DataFormat,
    Io,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::int64_t offset = -1)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind),
          offset_(offset) {}

    ErrorKind kind() const { return kind_; }
    // Byte offset into the offending input, or -1 (syntax errors only).
    std::int64_t offset() const { return offset_; }

private:
    ErrorKind kind_;
    std::int64_t offset_;
};

// Exact solve of a linear system A x = b over the rationals; A may be any
// shape, and the verdict distinguishes rank defects from contradictions.
struct LinearSolution {
    enum class Status { Unique, Underdetermined, Inconsistent };
    Status status = Status::Inconsistent;
    std::vector<Rational> values;  // populated only when Unique
};

LinearSolution solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

inline bool is_integral(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

inline Int rational_to_int(const Rational& q) {
    if (!is_integral(q)) throw Error(ErrorKind::InconsistentFacts, "expected an integer, got " + q.str());
    return boost::multiprecision::numerator(q);
}

// q must be p^r for a single prime p with r >= 1.
bool is_prime_power(std::int64_t q);

// p^r for prime p and r >= 1, bounded so coordinate arithmetic cannot
// overflow; anything else throws NotRestricted / UnsupportedType.
std::int64_t checked_prime_power(std::int64_t p, int r);

std::optional<std::int64_t> int_to_i64(const Int& v);

}  // namespace weylkit

#endif
