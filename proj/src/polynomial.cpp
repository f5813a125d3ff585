#include "exalg/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace exalg {

namespace {

void check_same_ring(const Polynomial& f, const Polynomial& g) {
    if (f.ring() != g.ring()) throw std::invalid_argument("polynomials belong to different rings");
}

}  // namespace

Polynomial::Polynomial(VarSet ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(VarSet ring, std::map<Monomial, mpq_class> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.var_count() != ring_.size())
            throw std::invalid_argument("term does not match ring size");
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

Polynomial Polynomial::constant(const VarSet& ring, const mpq_class& c) {
    Polynomial f(ring);
    if (c != 0) f.terms_.emplace(Monomial::one(ring.size()), c);
    return f;
}

Polynomial Polynomial::variable(const VarSet& ring, size_t index) {
    if (index >= ring.size()) throw std::out_of_range("variable index out of range");
    std::vector<int> e(ring.size(), 0);
    e[index] = 1;
    Polynomial f(ring);
    f.terms_.emplace(Monomial(std::move(e)), mpq_class(1));
    return f;
}

Polynomial Polynomial::variable(const VarSet& ring, std::string_view name) {
    return variable(ring, ring.require_index(name));
}

Polynomial Polynomial::term(const VarSet& ring, Monomial m, const mpq_class& c) {
    if (m.var_count() != ring.size()) throw std::invalid_argument("term does not match ring size");
    Polynomial f(ring);
    if (c != 0) f.terms_.emplace(std::move(m), c);
    return f;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

std::optional<Term> Polynomial::single_term() const {
    if (terms_.size() != 1) return std::nullopt;
    return Term{terms_.begin()->first, terms_.begin()->second};
}

void Polynomial::add_term(const Monomial& m, const mpq_class& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, mpq_class(-c));
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
    Polynomial r = *this;
    r += g;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
    Polynomial r = *this;
    r -= g;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
    check_same_ring(*this, g);
    for (const auto& [m, c] : g.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
    check_same_ring(*this, g);
    for (const auto& [m, c] : g.terms_) add_term(m, mpq_class(-c));
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
    check_same_ring(*this, g);
    Polynomial r(ring_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : g.terms_) r.add_term(m1 * m2, mpq_class(c1 * c2));
    return r;
}

Polynomial Polynomial::operator*(const mpq_class& c) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, mpq_class(k * c));
    return r;
}

Polynomial operator*(const mpq_class& c, const Polynomial& f) { return f * c; }

bool Polynomial::operator==(const Polynomial& g) const {
    return ring_ == g.ring_ && terms_ == g.terms_;
}

bool Polynomial::operator<(const Polynomial& g) const { return terms_ < g.terms_; }

Term Polynomial::leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw std::invalid_argument("leading term of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.greater(it->first, best->first)) best = it;
    return Term{best->first, best->second};
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
    if (terms_.empty()) return *this;
    mpq_class lc = leading_term(ord).coeff;
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, mpq_class(c / lc));
    return r;
}

Polynomial Polynomial::derivative(size_t var) const {
    if (var >= ring_.size()) throw std::out_of_range("variable index out of range");
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(var);
        if (e == 0) continue;
        std::vector<int> exps = m.exponents();
        exps[var] -= 1;
        r.add_term(Monomial(std::move(exps)), mpq_class(c * e));
    }
    return r;
}

mpq_class Polynomial::evaluate(const std::vector<mpq_class>& point) const {
    if (point.size() != ring_.size()) throw std::invalid_argument("point does not match ring size");
    mpq_class sum = 0;
    for (const auto& [m, c] : terms_) {
        mpq_class v = c;
        for (size_t i = 0; i < point.size(); ++i)
            if (m.exponent(i) > 0) v *= q_pow(point[i], m.exponent(i));
        sum += v;
    }
    return sum;
}

Polynomial Polynomial::substitute_partial(
    const std::vector<std::optional<mpq_class>>& assignment) const {
    if (assignment.size() != ring_.size())
        throw std::invalid_argument("assignment does not match ring size");
    std::vector<std::string> keep;
    for (size_t i = 0; i < ring_.size(); ++i)
        if (!assignment[i]) keep.push_back(ring_.name(i));
    VarSet target((std::vector<std::string>(keep)));
    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
        mpq_class coeff = c;
        std::vector<int> e;
        e.reserve(keep.size());
        for (size_t i = 0; i < ring_.size(); ++i) {
            if (assignment[i]) {
                if (m.exponent(i) > 0) coeff *= q_pow(*assignment[i], m.exponent(i));
            } else {
                e.push_back(m.exponent(i));
            }
        }
        r.add_term(Monomial(std::move(e)), coeff);
    }
    return r;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    // Display in descending grevlex, the order the rest of the tool reports in.
    std::vector<const std::pair<const Monomial, mpq_class>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    MonomialOrder ord = MonomialOrder::grevlex();
    std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) {
        int c = ord.compare(a->first, b->first);
        if (c != 0) return c > 0;
        return a->first < b->first;
    });
    std::string out;
    bool first = true;
    for (auto* t : ts) {
        mpq_class c = t->second;
        bool neg = c < 0;
        mpq_class a = abs(c);
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        std::string ms = t->first.to_string(ring_);
        if (ms == "1") {
            out += a.get_str();
        } else {
            if (a != 1) out += a.get_str() + "*";
            out += ms;
        }
    }
    return out;
}

Polynomial pow(const Polynomial& f, unsigned e) {
    Polynomial r = Polynomial::constant(f.ring(), 1);
    for (unsigned i = 0; i < e; ++i) r = r * f;
    return r;
}

Polynomial lift_to_ring(const Polynomial& f, const VarSet& target) {
    const VarSet& src = f.ring();
    std::vector<size_t> pos(src.size());
    for (size_t i = 0; i < src.size(); ++i) pos[i] = target.require_index(src.name(i));
    Polynomial r(target);
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> e(target.size(), 0);
        for (size_t i = 0; i < src.size(); ++i) e[pos[i]] = m.exponent(i);
        r += Polynomial::term(target, Monomial(std::move(e)), c);
    }
    return r;
}

Polynomial project_to_ring(const Polynomial& f, const VarSet& target) {
    const VarSet& src = f.ring();
    std::vector<std::optional<size_t>> pos(src.size());
    for (size_t i = 0; i < src.size(); ++i) pos[i] = target.index_of(src.name(i));
    Polynomial r(target);
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> e(target.size(), 0);
        for (size_t i = 0; i < src.size(); ++i) {
            if (m.exponent(i) == 0) continue;
            if (!pos[i])
                throw std::invalid_argument("polynomial depends on variable '" + src.name(i) +
                                            "' absent from the target ring");
            e[*pos[i]] = m.exponent(i);
        }
        r += Polynomial::term(target, Monomial(std::move(e)), c);
    }
    return r;
}

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const MonomialOrder& ord) {
    for (const auto& g : divisors) {
        if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
        if (g.ring() != f.ring())
            throw std::invalid_argument("divisor belongs to a different ring");
    }
    std::vector<Term> lead;
    lead.reserve(divisors.size());
    for (const auto& g : divisors) lead.push_back(g.leading_term(ord));

    DivisionResult res;
    res.quotients.assign(divisors.size(), Polynomial(f.ring()));
    res.remainder = Polynomial(f.ring());

    // Working copy sorted descending under ord so the leading term is front.
    auto cmp = [&ord](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; };
    std::map<Monomial, mpq_class, decltype(cmp)> work(cmp);
    for (const auto& [m, c] : f.terms()) work.emplace(m, c);

    while (!work.empty()) {
        auto head = work.begin();
        Monomial m = head->first;
        mpq_class c = head->second;
        bool reduced = false;
        for (size_t i = 0; i < divisors.size(); ++i) {
            if (!mono_divides(lead[i].mono, m)) continue;
            Monomial qm = mono_quotient(m, lead[i].mono);
            mpq_class qc = c / lead[i].coeff;
            res.quotients[i] += Polynomial::term(f.ring(), qm, qc);
            for (const auto& [gm, gc] : divisors[i].terms()) {
                Monomial pm = gm * qm;
                mpq_class pc = gc * qc;
                auto it = work.find(pm);
                if (it == work.end()) {
                    work.emplace(pm, mpq_class(-pc));
                } else {
                    it->second -= pc;
                    if (it->second == 0) work.erase(it);
                }
            }
            ++res.steps;
            reduced = true;
            break;
        }
        if (!reduced) {
            res.remainder += Polynomial::term(f.ring(), m, c);
            work.erase(work.begin());
        }
    }
    return res;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors,
                       const MonomialOrder& ord) {
    return divide(f, divisors, ord).remainder;
}

mpq_class q_pow(const mpq_class& q, unsigned long e) {
    mpq_class r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(q.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(q.get_mpq_t()), e);
    return r;
}

}  // namespace exalg
