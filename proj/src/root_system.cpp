#include "weylkit/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace weylkit {

namespace {

std::string coords_to_string(const std::vector<std::int64_t>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    os << ')';
    return os.str();
}

std::vector<std::int64_t> add(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

}  // namespace

Weight Weight::operator+(const Weight& o) const { return Weight(add(coords_, o.coords_)); }

Weight Weight::operator-(const Weight& o) const {
    std::vector<std::int64_t> out(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = coords_[i] - o.coords_[i];
    return Weight(std::move(out));
}

Weight Weight::operator-() const {
    std::vector<std::int64_t> out(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = -coords_[i];
    return Weight(std::move(out));
}

Weight Weight::scaled(std::int64_t n) const {
    std::vector<std::int64_t> out(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = n * coords_[i];
    return Weight(std::move(out));
}

bool Weight::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c == 0; });
}

std::string Weight::to_string() const { return coords_to_string(coords_); }

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.to_string(); }

RootVector RootVector::operator+(const RootVector& o) const { return RootVector(add(coords_, o.coords_)); }

RootVector RootVector::operator-() const {
    std::vector<std::int64_t> out(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = -coords_[i];
    return RootVector(std::move(out));
}

std::int64_t RootVector::height() const { return std::accumulate(coords_.begin(), coords_.end(), std::int64_t{0}); }

std::string RootVector::to_string() const { return coords_to_string(coords_); }

std::ostream& operator<<(std::ostream& os, const RootVector& v) { return os << v.to_string(); }

void RootSystem::check_rank(std::size_t n, const char* what) const {
    if (n != static_cast<std::size_t>(rank_))
        throw Error(ErrorKind::MixedRootSystem,
                    std::string(what) + " has rank " + std::to_string(n) + ", expected " + std::to_string(rank_) +
                        " for " + label_);
}

RootSystemPtr RootSystem::named(std::string_view label) {
    if (label.size() < 2 || !std::isalpha(static_cast<unsigned char>(label[0])))
        throw Error(ErrorKind::UnsupportedType, "bad root system label '" + std::string(label) + "'");
    const char series = label[0];
    int n = 0;
    for (std::size_t i = 1; i < label.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(label[i])))
            throw Error(ErrorKind::UnsupportedType, "bad root system label '" + std::string(label) + "'");
        n = n * 10 + (label[i] - '0');
        if (n > 64) throw Error(ErrorKind::UnsupportedType, "rank too large in '" + std::string(label) + "'");
    }

    auto tridiagonal = [](int rank) {
        std::vector<std::vector<std::int64_t>> c(rank, std::vector<std::int64_t>(rank, 0));
        for (int i = 0; i < rank; ++i) {
            c[i][i] = 2;
            if (i + 1 < rank) c[i][i + 1] = c[i + 1][i] = -1;
        }
        return c;
    };

    std::vector<std::vector<std::int64_t>> cartan;
    Int order;
    auto factorial = [](int m) {
        Int f = 1;
        for (int k = 2; k <= m; ++k) f *= k;
        return f;
    };

    switch (series) {
        case 'A':
            if (n < 1) throw Error(ErrorKind::UnsupportedType, "A series needs rank >= 1");
            cartan = tridiagonal(n);
            order = factorial(n + 1);
            break;
        case 'B':
            if (n < 2) throw Error(ErrorKind::UnsupportedType, "B series needs rank >= 2");
            cartan = tridiagonal(n);
            // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2.
            cartan[n - 1][n - 2] = -2;
            order = factorial(n) << n;
            break;
        case 'C':
            if (n < 2) throw Error(ErrorKind::UnsupportedType, "C series needs rank >= 2");
            cartan = tridiagonal(n);
            // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2.
            cartan[n - 2][n - 1] = -2;
            order = factorial(n) << n;
            break;
        case 'D':
            if (n < 3) throw Error(ErrorKind::UnsupportedType, "D series needs rank >= 3");
            cartan = tridiagonal(n);
            cartan[n - 1][n - 2] = cartan[n - 2][n - 1] = 0;
            cartan[n - 3][n - 1] = cartan[n - 1][n - 3] = -1;
            order = factorial(n) << (n - 1);
            break;
        case 'G':
            if (n != 2) throw Error(ErrorKind::UnsupportedType, "G series has rank 2 only");
            // alpha_1 short, alpha_2 long.
            cartan = {{2, -3}, {-1, 2}};
            order = 12;
            break;
        default:
            throw Error(ErrorKind::UnsupportedType, "unsupported series '" + std::string(1, series) + "'");
    }
    return build(std::move(cartan), std::string(label), order);
}

RootSystemPtr RootSystem::from_cartan(std::vector<std::vector<std::int64_t>> cartan, std::string label) {
    return build(std::move(cartan), std::move(label), std::nullopt);
}

RootSystemPtr RootSystem::build(std::vector<std::vector<std::int64_t>> cartan, std::string label,
                                std::optional<Int> known_weyl_order) {
    const std::size_t n = cartan.size();
    if (n == 0) throw Error(ErrorKind::UnsupportedType, "empty Cartan matrix");
    for (const auto& row : cartan)
        if (row.size() != n) throw Error(ErrorKind::UnsupportedType, "Cartan matrix is not square");
    for (std::size_t i = 0; i < n; ++i) {
        if (cartan[i][i] != 2) throw Error(ErrorKind::UnsupportedType, "Cartan diagonal must be 2");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (cartan[i][j] > 0) throw Error(ErrorKind::UnsupportedType, "positive off-diagonal Cartan entry");
            if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
                throw Error(ErrorKind::UnsupportedType, "Cartan zero pattern is not symmetric");
        }
    }

    auto rs = std::shared_ptr<RootSystem>(new RootSystem());
    rs->label_ = std::move(label);
    rs->rank_ = static_cast<int>(n);
    rs->cartan_ = std::move(cartan);
    const auto& c = rs->cartan_;

    // Symmetrizers: smallest positive integers d with d_i c_{ij} = d_j c_{ji}.
    {
        std::vector<Rational> d(n, Rational(0));
        for (std::size_t start = 0; start < n; ++start) {
            if (d[start] != 0) continue;
            d[start] = 1;
            std::vector<std::size_t> queue{start};
            while (!queue.empty()) {
                const std::size_t i = queue.back();
                queue.pop_back();
                for (std::size_t j = 0; j < n; ++j) {
                    if (i == j || c[i][j] == 0) continue;
                    const Rational dj = d[i] * c[i][j] / c[j][i];
                    if (d[j] == 0) {
                        d[j] = dj;
                        queue.push_back(j);
                    } else if (d[j] != dj) {
                        throw Error(ErrorKind::UnsupportedType, "Cartan matrix is not symmetrizable");
                    }
                }
            }
        }
        Int lcm_den = 1;
        for (const auto& q : d)
            lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(q));
        std::vector<Int> scaled(n);
        Int g = 0;
        for (std::size_t i = 0; i < n; ++i) {
            scaled[i] = boost::multiprecision::numerator(d[i]) * (lcm_den / boost::multiprecision::denominator(d[i]));
            g = boost::multiprecision::gcd(g, scaled[i]);
        }
        rs->sym_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto v = int_to_i64(scaled[i] / g);
            if (!v || *v <= 0) throw Error(ErrorKind::UnsupportedType, "Cartan matrix is not symmetrizable");
            rs->sym_[i] = *v;
        }
    }

    // Finite type <=> the symmetrized matrix (d_i c_{ij}) is positive definite.
    {
        std::vector<std::vector<Rational>> s(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) s[i][j] = Rational(rs->sym_[i]) * c[i][j];
        // Leading principal minors via fraction-free elimination on a copy.
        for (std::size_t k = 0; k < n; ++k) {
            if (s[k][k] <= 0) throw Error(ErrorKind::UnsupportedType, "Cartan matrix is not of finite type");
            for (std::size_t i = k + 1; i < n; ++i) {
                const Rational f = s[i][k] / s[k][k];
                for (std::size_t j = k; j < n; ++j) s[i][j] -= f * s[k][j];
            }
        }
    }

    // Exact inverse of the Cartan matrix, one column per unit vector.
    {
        rs->cartan_inverse_.assign(n, std::vector<Rational>(n));
        std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(c[i][j]);
        for (std::size_t col = 0; col < n; ++col) {
            std::vector<Rational> e(n, Rational(0));
            e[col] = 1;
            auto sol = solve_exact(a, e);
            if (sol.status != LinearSolution::Status::Unique)
                throw Error(ErrorKind::UnsupportedType, "Cartan matrix is singular");
            for (std::size_t i = 0; i < n; ++i) rs->cartan_inverse_[i][col] = sol.values[i];
        }
    }

    // Positive roots by closing the simple roots under root strings, level by level.
    {
        std::set<RootVector> found;
        std::vector<RootVector> level;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::int64_t> e(n, 0);
            e[i] = 1;
            level.emplace_back(std::move(e));
        }
        for (const auto& v : level) found.insert(v);
        auto pairing_with_simple = [&](const RootVector& beta, std::size_t i) {
            std::int64_t s = 0;
            for (std::size_t j = 0; j < n; ++j) s += c[i][j] * beta[j];
            return s;
        };
        while (!level.empty()) {
            std::vector<RootVector> next;
            for (const auto& beta : level) {
                for (std::size_t i = 0; i < n; ++i) {
                    std::vector<std::int64_t> e(n, 0);
                    e[i] = 1;
                    const RootVector alpha(std::move(e));
                    // Length of the descending string beta, beta - alpha_i, ...
                    std::int64_t down = 0;
                    {
                        std::vector<std::int64_t> cur = beta.coords();
                        while (true) {
                            cur[i] -= 1;
                            if (std::any_of(cur.begin(), cur.end(), [](std::int64_t x) { return x < 0; })) break;
                            if (!found.count(RootVector(cur))) break;
                            ++down;
                        }
                    }
                    if (down - pairing_with_simple(beta, i) >= 1) {
                        RootVector up = beta + alpha;
                        if (found.insert(up).second) next.push_back(std::move(up));
                    }
                }
            }
            if (found.size() > 100000) throw Error(ErrorKind::UnsupportedType, "root system too large");
            level = std::move(next);
        }
        rs->positive_roots_.assign(found.begin(), found.end());
        std::sort(rs->positive_roots_.begin(), rs->positive_roots_.end(),
                  [](const RootVector& a, const RootVector& b) {
                      if (a.height() != b.height()) return a.height() < b.height();
                      return a < b;
                  });
        for (const auto& beta : rs->positive_roots_) {
            rs->root_set_.insert(beta);
            rs->root_set_.insert(-beta);
        }
    }

    rs->rho_ = Weight(std::vector<std::int64_t>(n, 1));

    // Longest element: drive rho to the antidominant chamber, composing the
    // simple reflections as a matrix on fundamental coordinates.
    {
        std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
        for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
        Weight v = rs->rho_;
        std::size_t steps = 0;
        while (true) {
            std::size_t i = 0;
            while (i < n && v[i] <= 0) ++i;
            if (i == n) break;
            v = rs->simple_reflection(static_cast<int>(i), v);
            // Left-multiply m by the reflection matrix S_i: (S_i x)_j = x_j - x_i c[j][i].
            std::vector<std::vector<std::int64_t>> next(n, std::vector<std::int64_t>(n, 0));
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) next[j][k] = m[j][k] - c[j][i] * m[i][k];
            m = std::move(next);
            if (++steps > rs->positive_roots_.size())
                throw Error(ErrorKind::UnsupportedType, "longest element computation did not terminate");
        }
        if (v != -rs->rho_) throw Error(ErrorKind::UnsupportedType, "longest element computation failed");
        rs->w0_ = std::move(m);
    }

    // Highest short root: the unique dominant root of minimal squared length.
    {
        std::int64_t min_norm = 0;
        for (const auto& beta : rs->positive_roots_) {
            const auto norm = rs->root_norm(beta);
            if (min_norm == 0 || norm < min_norm) min_norm = norm;
        }
        std::vector<RootVector> dominant_short;
        for (const auto& beta : rs->positive_roots_)
            if (rs->root_norm(beta) == min_norm && rs->is_dominant(rs->weight_of(beta)))
                dominant_short.push_back(beta);
        if (dominant_short.size() != 1)
            throw Error(ErrorKind::UnsupportedType, "root system must be irreducible");
        rs->highest_short_root_ = dominant_short.front();
    }

    if (known_weyl_order) {
        rs->weyl_order_ = *known_weyl_order;
    } else {
        // rho is regular, so its orbit has exactly |W| elements.
        const auto orbit = rs->weyl_orbit(rs->rho_);
        rs->weyl_order_ = static_cast<unsigned long>(orbit.size());
    }

    {
        std::ostringstream key;
        key << rs->label_ << '|';
        for (const auto& row : c)
            for (auto x : row) key << x << ',';
        rs->cache_key_ = key.str();
    }
    return rs;
}

bool RootSystem::is_root(const RootVector& v) const {
    check_rank(v.size(), "root vector");
    return root_set_.count(v) != 0;
}

std::int64_t RootSystem::root_norm(const RootVector& beta) const {
    check_rank(beta.size(), "root vector");
    // (beta, beta) = sum_j beta_j d_j <beta, alpha_j^vee>.
    std::int64_t total = 0;
    for (int j = 0; j < rank_; ++j) {
        std::int64_t pairing = 0;
        for (int k = 0; k < rank_; ++k) pairing += cartan_[j][k] * beta[k];
        total += beta[j] * sym_[j] * pairing;
    }
    return total;
}

Weight RootSystem::weight_of(const RootVector& v) const {
    check_rank(v.size(), "root vector");
    std::vector<std::int64_t> out(rank_, 0);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) out[i] += cartan_[i][j] * v[j];
    return Weight(std::move(out));
}

std::vector<Rational> RootSystem::rational_root_coordinates(const Weight& w) const {
    check_rank(w.size(), "weight");
    std::vector<Rational> out(rank_, Rational(0));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) out[i] += cartan_inverse_[i][j] * w[j];
    return out;
}

std::optional<RootVector> RootSystem::root_coordinates(const Weight& w) const {
    const auto q = rational_root_coordinates(w);
    std::vector<std::int64_t> out(rank_);
    for (int i = 0; i < rank_; ++i) {
        if (!is_integral(q[i])) return std::nullopt;
        const auto v = int_to_i64(boost::multiprecision::numerator(q[i]));
        if (!v) return std::nullopt;
        out[i] = *v;
    }
    return RootVector(std::move(out));
}

bool RootSystem::is_dominant(const Weight& w) const {
    check_rank(w.size(), "weight");
    for (int i = 0; i < rank_; ++i)
        if (w[i] < 0) return false;
    return true;
}

Weight RootSystem::simple_reflection(int i, const Weight& w) const {
    check_rank(w.size(), "weight");
    // s_i(w) = w - w_i * alpha_i, with (alpha_i)_j = cartan[j][i].
    std::vector<std::int64_t> out(w.coords());
    const std::int64_t wi = w[i];
    for (int j = 0; j < rank_; ++j) out[j] -= wi * cartan_[j][i];
    return Weight(std::move(out));
}

Weight RootSystem::reflect(const RootVector& beta, const Weight& w) const {
    if (!is_root(beta)) throw Error(ErrorKind::NotARoot, beta.to_string() + " is not a root of " + label_);
    const Int pairing = coroot_pairing(w, beta);
    const Weight beta_wt = weight_of(beta);
    const auto k = int_to_i64(pairing);
    if (!k) throw Error(ErrorKind::UnsupportedType, "weight coordinates overflow");
    return w - beta_wt.scaled(*k);
}

Weight RootSystem::dominant_representative(const Weight& w) const {
    Weight v = w;
    std::size_t guard = 0;
    while (true) {
        int i = 0;
        while (i < rank_ && v[i] >= 0) ++i;
        if (i == rank_) return v;
        v = simple_reflection(i, v);
        if (++guard > 10000000) throw Error(ErrorKind::UnsupportedType, "dominant representative did not converge");
    }
}

Weight RootSystem::w0_action(const Weight& w) const {
    check_rank(w.size(), "weight");
    std::vector<std::int64_t> out(rank_, 0);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) out[i] += w0_[i][j] * w[j];
    return Weight(std::move(out));
}

std::set<Weight> RootSystem::weyl_orbit(const Weight& w) const {
    check_rank(w.size(), "weight");
    std::set<Weight> orbit{w};
    std::vector<Weight> frontier{w};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& v : frontier) {
            for (int i = 0; i < rank_; ++i) {
                Weight r = simple_reflection(i, v);
                if (orbit.insert(r).second) next.push_back(std::move(r));
            }
        }
        frontier = std::move(next);
    }
    return orbit;
}

Int RootSystem::coroot_pairing(const Weight& w, const RootVector& beta) const {
    check_rank(w.size(), "weight");
    if (!is_root(beta)) throw Error(ErrorKind::NotARoot, beta.to_string() + " is not a root of " + label_);
    const Int twice = 2 * form_with_root(w, beta);
    const Int norm = root_norm(beta);
    if (twice % norm != 0) throw Error(ErrorKind::UnsupportedType, "non-integral coroot pairing");
    return twice / norm;
}

Int RootSystem::form_with_root(const Weight& w, const RootVector& v) const {
    check_rank(w.size(), "weight");
    check_rank(v.size(), "root vector");
    // (w, alpha_j) = d_j * w_j for w in fundamental coordinates.
    Int total = 0;
    for (int j = 0; j < rank_; ++j) total += Int(v[j]) * sym_[j] * w[j];
    return total;
}

bool RootSystem::dominance_leq(const Weight& mu, const Weight& lambda) const {
    check_rank(mu.size(), "weight");
    check_rank(lambda.size(), "weight");
    const auto q = rational_root_coordinates(lambda - mu);
    for (const auto& x : q)
        if (!is_integral(x) || x < 0) return false;
    return true;
}

std::vector<Weight> RootSystem::restricted_weights(std::int64_t p, int r) const {
    const std::int64_t q = checked_prime_power(p, r);
    double total = 1;
    for (int i = 0; i < rank_; ++i) total *= static_cast<double>(q);
    if (total > 4e6) throw Error(ErrorKind::UnsupportedType, "too many restricted weights to enumerate");

    std::vector<Weight> out;
    std::vector<std::int64_t> cur(rank_, 0);
    while (true) {
        out.emplace_back(cur);
        int i = rank_ - 1;
        while (i >= 0 && cur[i] == q - 1) {
            cur[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

Weight RootSystem::hat_weight(const Weight& lam, std::int64_t p, int r) const {
    check_rank(lam.size(), "weight");
    const std::int64_t q = checked_prime_power(p, r);
    for (int i = 0; i < rank_; ++i)
        if (lam[i] < 0 || lam[i] >= q)
            throw Error(ErrorKind::NotRestricted,
                        lam.to_string() + " is not restricted for p^r = " + std::to_string(q));
    return rho_.scaled(2 * (q - 1)) + w0_action(lam);
}

nlohmann::ordered_json RootSystem::to_json() const {
    nlohmann::ordered_json j;
    j["label"] = label_;
    j["rank"] = rank_;
    j["cartan"] = cartan_;
    j["positive_root_count"] = positive_roots_.size();
    j["weyl_order"] = weyl_order_.str();
    return j;
}

}  // namespace weylkit
