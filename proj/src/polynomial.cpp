#include "egh/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "egh/errors.hpp"
#include "egh/fp.hpp"

namespace egh {

namespace {

const MonomialOrder& drl() {
    static const MonomialOrder o = MonomialOrder::degrevlex();
    return o;
}

struct DrlDescending {
    bool operator()(const Term& a, const Term& b) const {
        return drl().greater(a.mono, b.mono);
    }
};

}  // namespace

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    const std::uint32_t p = ring->characteristic();
    std::sort(terms.begin(), terms.end(), DrlDescending{});
    std::vector<Term> merged;
    merged.reserve(terms.size());
    for (auto& t : terms) {
        if (int(t.mono.nvars()) != ring->nvars())
            throw Error("monomial arity does not match ring");
        std::uint32_t c = t.coeff % p;
        if (!merged.empty() && merged.back().mono == t.mono) {
            merged.back().coeff = fp_add(merged.back().coeff, c, p);
        } else {
            merged.push_back(Term{std::move(t.mono), c});
        }
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
    Polynomial r(std::move(ring));
    r.terms_ = std::move(merged);
    return r;
}

Polynomial Polynomial::constant(RingPtr ring, long long value) {
    std::uint32_t c = fp_from_ll(value, ring->characteristic());
    Polynomial r(ring);
    if (c != 0) r.terms_.push_back(Term{Monomial::one(ring->nvars()), c});
    return r;
}

Polynomial Polynomial::variable(RingPtr ring, int index) {
    Polynomial r(ring);
    r.terms_.push_back(Term{Monomial::var(ring->nvars(), index), 1});
    return r;
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, std::uint32_t coeff) {
    std::uint32_t c = coeff % ring->characteristic();
    Polynomial r(ring);
    if (c != 0) r.terms_.push_back(Term{std::move(m), c});
    return r;
}

const Monomial& Polynomial::leading_monomial() const {
    if (is_zero()) throw Error("leading monomial of zero polynomial");
    return terms_.front().mono;
}

std::uint32_t Polynomial::leading_coeff() const {
    if (is_zero()) throw Error("leading coefficient of zero polynomial");
    return terms_.front().coeff;
}

const Term& Polynomial::leading_term() const {
    if (is_zero()) throw Error("leading term of zero polynomial");
    return terms_.front();
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.front().mono.degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const Term& t) { return t.mono.degree() == d; });
}

std::optional<int> Polynomial::homogeneous_degree() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return terms_.front().mono.degree();
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    if (!same_ring(ring_, other.ring_)) throw Error("ring mismatch in +");
    const std::uint32_t p = ring_->characteristic();
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < other.terms_.size()) {
        int c = drl().compare(terms_[i].mono, other.terms_[j].mono);
        if (c > 0) {
            out.push_back(terms_[i++]);
        } else if (c < 0) {
            out.push_back(other.terms_[j++]);
        } else {
            std::uint32_t s = fp_add(terms_[i].coeff, other.terms_[j].coeff, p);
            if (s != 0) out.push_back(Term{terms_[i].mono, s});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < other.terms_.size(); ++j) out.push_back(other.terms_[j]);
    Polynomial r(ring_);
    r.terms_ = std::move(out);
    return r;
}

Polynomial Polynomial::operator-() const {
    const std::uint32_t p = ring_->characteristic();
    Polynomial r(ring_);
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff = fp_neg(t.coeff, p);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (!same_ring(ring_, other.ring_)) throw Error("ring mismatch in *");
    const std::uint32_t p = ring_->characteristic();
    auto cmp = [](const Monomial& a, const Monomial& b) { return drl().greater(a, b); };
    std::map<Monomial, std::uint32_t, decltype(cmp)> acc(cmp);
    for (const auto& a : terms_) {
        for (const auto& b : other.terms_) {
            Monomial m = a.mono * b.mono;
            std::uint32_t c = fp_mul(a.coeff, b.coeff, p);
            auto [it, fresh] = acc.emplace(std::move(m), c);
            if (!fresh) it->second = fp_add(it->second, c, p);
        }
    }
    Polynomial r(ring_);
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.push_back(Term{m, c});
    return r;
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
    const std::uint32_t p = ring_->characteristic();
    c %= p;
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff = fp_mul(t.coeff, c, p);
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, std::uint32_t c) const {
    const std::uint32_t p = ring_->characteristic();
    c %= p;
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back(Term{t.mono * m, fp_mul(t.coeff, c, p)});
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(fp_inv(leading_coeff(), ring_->characteristic()));
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw Error("negative power");
    Polynomial r = Polynomial::constant(ring_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Polynomial Polynomial::exact_divide_by(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw Error("division by zero polynomial");
    const std::uint32_t p = ring_->characteristic();
    const std::uint32_t lc_inv = fp_inv(divisor.leading_coeff(), p);
    Polynomial rem = *this;
    std::vector<Term> quot;
    while (!rem.is_zero()) {
        const Term& lt = rem.leading_term();
        if (!divisor.leading_monomial().divides(lt.mono))
            throw Error("polynomial division is not exact");
        Term q{lt.mono / divisor.leading_monomial(), fp_mul(lt.coeff, lc_inv, p)};
        rem = rem - divisor.times_monomial(q.mono, q.coeff);
        quot.push_back(std::move(q));
    }
    return from_terms(ring_, std::move(quot));
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        std::ostringstream mono;
        bool mono_first = true;
        for (int i = 0; i < t.mono.nvars(); ++i) {
            int e = t.mono.exponent(i);
            if (e == 0) continue;
            if (!mono_first) mono << "*";
            mono_first = false;
            mono << ring_->var_name(i);
            if (e > 1) mono << "^" << e;
        }
        if (mono_first) {
            os << t.coeff;  // constant term
        } else if (t.coeff == 1) {
            os << mono.str();
        } else {
            os << t.coeff << "*" << mono.str();
        }
    }
    return os.str();
}

Polynomial substitute_variable(const Polynomial& f, int var, const Polynomial& value) {
    const RingPtr& ring = f.ring();
    Polynomial out(ring);
    for (const auto& t : f.terms()) {
        std::vector<int> rest = t.mono.exponents();
        const int e = rest[std::size_t(var)];
        rest[std::size_t(var)] = 0;
        Polynomial piece = Polynomial::monomial(ring, Monomial(std::move(rest)), t.coeff);
        if (e > 0) piece = piece * value.pow(e);
        out = out + piece;
    }
    return out;
}

}  // namespace egh
