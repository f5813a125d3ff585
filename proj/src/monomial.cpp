#include "exalg/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace exalg {

namespace {

void check_same_size(const Monomial& a, const Monomial& b) {
    if (a.var_count() != b.var_count())
        throw std::invalid_argument("monomials belong to different rings");
}

}  // namespace

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
    for (int x : e_)
        if (x < 0) throw std::invalid_argument("negative exponent in monomial");
}

Monomial Monomial::one(size_t var_count) { return Monomial(std::vector<int>(var_count, 0)); }

int Monomial::degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

int Monomial::degree_in_range(size_t lo, size_t hi) const {
    int d = 0;
    for (size_t i = lo; i < hi && i < e_.size(); ++i) d += e_[i];
    return d;
}

bool Monomial::is_one() const {
    for (int x : e_)
        if (x != 0) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    check_same_size(*this, other);
    std::vector<int> e(e_.size());
    for (size_t i = 0; i < e_.size(); ++i) e[i] = e_[i] + other.e_[i];
    return Monomial(std::move(e));
}

std::string Monomial::to_string(const VarSet& ring) const {
    if (ring.size() != var_count())
        throw std::invalid_argument("monomial does not match ring size");
    std::string out;
    for (size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += ring.name(i);
        if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
    }
    return out.empty() ? "1" : out;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    check_same_size(a, b);
    for (size_t i = 0; i < a.var_count(); ++i)
        if (a.exponent(i) > b.exponent(i)) return false;
    return true;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    check_same_size(a, b);
    std::vector<int> e(a.var_count());
    for (size_t i = 0; i < a.var_count(); ++i) e[i] = std::max(a.exponent(i), b.exponent(i));
    return Monomial(std::move(e));
}

Monomial mono_quotient(const Monomial& b, const Monomial& a) {
    if (!mono_divides(a, b)) throw std::invalid_argument("monomial quotient is not exact");
    std::vector<int> e(a.var_count());
    for (size_t i = 0; i < a.var_count(); ++i) e[i] = b.exponent(i) - a.exponent(i);
    return Monomial(std::move(e));
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    check_same_size(a, b);
    for (size_t i = 0; i < a.var_count(); ++i)
        if (a.exponent(i) > 0 && b.exponent(i) > 0) return false;
    return true;
}

namespace {

int cmp_lex(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) {
        if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i) ? 1 : -1;
    }
    return 0;
}

// Graded reverse lexicographic on [lo, hi): higher total degree wins; on a
// tie the monomial with the smaller exponent in the last differing variable
// is the larger one.
int cmp_grevlex(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
    int da = a.degree_in_range(lo, hi), db = b.degree_in_range(lo, hi);
    if (da != db) return da > db ? 1 : -1;
    for (size_t i = hi; i-- > lo;) {
        if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i) ? 1 : -1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.var_count() != b.var_count())
        throw std::invalid_argument("monomials belong to different rings");
    const size_t n = a.var_count();
    switch (kind_) {
        case Kind::lex:
            return cmp_lex(a, b, 0, n);
        case Kind::grevlex:
            return cmp_grevlex(a, b, 0, n);
        case Kind::block: {
            size_t k = std::min(block_, n);
            if (int c = cmp_lex(a, b, 0, k)) return c;
            return cmp_grevlex(a, b, k, n);
        }
    }
    return 0;
}

bool MonomialOrder::operator<(const MonomialOrder& o) const {
    if (kind_ != o.kind_) return static_cast<int>(kind_) < static_cast<int>(o.kind_);
    return block_ < o.block_;
}

std::string MonomialOrder::to_string() const {
    switch (kind_) {
        case Kind::lex:
            return "lex";
        case Kind::grevlex:
            return "grevlex";
        case Kind::block:
            return "block(" + std::to_string(block_) + ")";
    }
    return "?";
}

}  // namespace exalg
