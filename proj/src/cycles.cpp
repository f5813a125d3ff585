#include "exalg/cycles.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace exalg {

bool Cycle::is_zero_vector() const {
    for (long long c : coeffs)
        if (c != 0) return false;
    return true;
}

bool Cycle::is_effective() const {
    bool positive = false;
    for (long long c : coeffs) {
        if (c < 0) return false;
        if (c > 0) positive = true;
    }
    return positive;
}

Cycle Cycle::operator+(const Cycle& o) const {
    if (coeffs.size() != o.coeffs.size())
        throw std::invalid_argument("cycles belong to different groups");
    Cycle r;
    r.coeffs.resize(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = coeffs[i] + o.coeffs[i];
    return r;
}

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

// Row Hermite normal form over Z: positive pivots, zeros below each pivot,
// entries above a pivot reduced into [0, pivot).
std::pair<std::vector<std::vector<long long>>, std::vector<size_t>> hermite_rows(
    const std::vector<std::vector<long long>>& relations, size_t n) {
    std::vector<std::vector<mpz_class>> m;
    for (const auto& rel : relations) {
        std::vector<mpz_class> row(n);
        for (size_t j = 0; j < n; ++j) row[j] = static_cast<long>(rel[j]);
        m.push_back(std::move(row));
    }
    size_t r = 0;
    std::vector<size_t> pivots;
    for (size_t col = 0; col < n && r < m.size(); ++col) {
        // Repeatedly reduce below-pivot entries until one nonzero remains.
        while (true) {
            size_t best = m.size();
            for (size_t i = r; i < m.size(); ++i) {
                if (m[i][col] == 0) continue;
                if (best == m.size() || cmp(abs(m[i][col]), abs(m[best][col])) < 0) best = i;
            }
            if (best == m.size()) break;
            std::swap(m[r], m[best]);
            bool clean = true;
            for (size_t i = r + 1; i < m.size(); ++i) {
                if (m[i][col] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), m[i][col].get_mpz_t(), m[r][col].get_mpz_t());
                for (size_t j = 0; j < n; ++j) m[i][j] -= q * m[r][j];
                if (m[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (m[r][col] == 0) continue;
        if (m[r][col] < 0)
            for (size_t j = 0; j < n; ++j) m[r][j] = -m[r][j];
        for (size_t i = 0; i < r; ++i) {
            if (m[i][col] == 0) continue;
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), m[i][col].get_mpz_t(), m[r][col].get_mpz_t());
            for (size_t j = 0; j < n; ++j) m[i][j] -= q * m[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    std::vector<std::vector<long long>> hnf;
    for (size_t i = 0; i < r; ++i) {
        std::vector<long long> row(n);
        for (size_t j = 0; j < n; ++j) {
            if (!m[i][j].fits_slong_p())
                throw std::overflow_error("relation lattice entries exceed the supported range");
            row[j] = m[i][j].get_si();
        }
        hnf.push_back(std::move(row));
    }
    return {std::move(hnf), std::move(pivots)};
}

void skip_ws(const std::string& s, size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

}  // namespace

CycleGroup::CycleGroup(std::vector<std::string> class_names,
                       std::vector<std::vector<long long>> relations)
    : names_(std::move(class_names)), relations_(std::move(relations)) {
    if (names_.empty()) throw std::invalid_argument("cycle group needs at least one class");
    for (size_t i = 0; i < names_.size(); ++i)
        for (size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw std::invalid_argument("duplicate class name '" + names_[i] + "'");
    for (const auto& rel : relations_)
        if (rel.size() != names_.size())
            throw std::invalid_argument("relation width does not match the class count");
    auto [hnf, pivots] = hermite_rows(relations_, names_.size());
    hnf_ = std::move(hnf);
    pivot_cols_ = std::move(pivots);
}

size_t CycleGroup::index_of(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    throw std::invalid_argument("unknown class name '" + name + "'");
}

Cycle CycleGroup::reduce(const Cycle& c) const {
    if (c.coeffs.size() != names_.size())
        throw std::invalid_argument("cycle does not match the class count");
    Cycle x = c;
    for (size_t t = 0; t < hnf_.size(); ++t) {
        size_t j = pivot_cols_[t];
        long long p = hnf_[t][j];
        long long q = floor_div(x.coeffs[j], p);
        if (q == 0) continue;
        for (size_t k = 0; k < names_.size(); ++k) x.coeffs[k] -= q * hnf_[t][k];
    }
    return x;
}

bool CycleGroup::is_zero(const Cycle& c) const { return reduce(c).is_zero_vector(); }

std::optional<Cycle> CycleGroup::search_effective_zero(long long bound) const {
    if (bound < 1) throw std::invalid_argument("search bound must be positive");
    const size_t n = names_.size();
    Cycle c;
    c.coeffs.assign(n, 0);
    while (true) {
        // Odometer, last class fastest: ascending lexicographic enumeration.
        size_t i = n;
        while (i-- > 0) {
            if (++c.coeffs[i] <= bound) break;
            c.coeffs[i] = 0;
            if (i == 0) return std::nullopt;
        }
        if (is_zero(c)) return c;
    }
}

Cycle CycleGroup::parse_combination(const std::string& text) const {
    Cycle c;
    c.coeffs.assign(names_.size(), 0);
    size_t pos = 0;
    bool first = true;
    skip_ws(text, pos);
    if (pos == text.size()) throw std::invalid_argument("empty cycle expression");
    while (pos < text.size()) {
        long long sign = 1;
        skip_ws(text, pos);
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in cycle expression at position " +
                                        std::to_string(pos));
        }
        first = false;
        skip_ws(text, pos);
        long long coeff = 1;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            coeff = std::stoll(text.substr(start, pos - start));
            skip_ws(text, pos);
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws(text, pos);
            }
        }
        size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '+' && text[pos] != '-' && text[pos] != '*')
            ++pos;
        if (start == pos)
            throw std::invalid_argument("expected class name at position " + std::to_string(start));
        c.coeffs[index_of(text.substr(start, pos - start))] += sign * coeff;
        skip_ws(text, pos);
    }
    return c;
}

Cycle CycleGroup::cycle(const std::vector<std::pair<std::string, long long>>& terms) const {
    Cycle c;
    c.coeffs.assign(names_.size(), 0);
    for (const auto& [name, k] : terms) c.coeffs[index_of(name)] += k;
    return c;
}

std::string CycleGroup::to_string(const Cycle& c) const {
    if (c.coeffs.size() != names_.size())
        throw std::invalid_argument("cycle does not match the class count");
    std::string out;
    for (size_t i = 0; i < names_.size(); ++i) {
        long long k = c.coeffs[i];
        if (k == 0) continue;
        if (out.empty()) {
            if (k < 0) out += "-";
        } else {
            out += k < 0 ? " - " : " + ";
        }
        long long a = k < 0 ? -k : k;
        if (a != 1) out += std::to_string(a) + "*";
        out += names_[i];
    }
    return out.empty() ? "0" : out;
}

CycleGroup CycleGroup::load(std::istream& in) {
    std::vector<std::string> names;
    std::vector<std::string> relation_lines;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t\r");
        std::string body = line.substr(b, e - b + 1);
        if (body.rfind("classes:", 0) == 0) {
            if (!names.empty())
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": duplicate classes line");
            std::istringstream ss(body.substr(8));
            std::string tok;
            while (ss >> tok) names.push_back(tok);
            if (names.empty())
                throw std::invalid_argument("line " + std::to_string(lineno) + ": no classes");
        } else {
            if (names.empty())
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": relation before the classes line");
            relation_lines.push_back(body);
        }
    }
    if (names.empty()) throw std::invalid_argument("missing classes line");

    CycleGroup shell(names, {});
    std::vector<std::vector<long long>> relations;
    for (const auto& rel : relation_lines) {
        auto eq = rel.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("relation '" + rel + "' has no '='");
        Cycle lhs = shell.parse_combination(rel.substr(0, eq));
        Cycle rhs = shell.parse_combination(rel.substr(eq + 1));
        std::vector<long long> row(names.size());
        for (size_t i = 0; i < names.size(); ++i) row[i] = lhs.coeffs[i] - rhs.coeffs[i];
        relations.push_back(std::move(row));
    }
    return CycleGroup(std::move(names), std::move(relations));
}

CycleGroup CycleGroup::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open cycle group file '" + path + "'");
    return load(in);
}

}  // namespace exalg
