// Buchberger's algorithm with the Gebauer-Moeller pair criteria and normal
// (lowest lcm degree first) selection.

#include "egh/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "egh/errors.hpp"
#include "egh/fp.hpp"

namespace egh {

namespace {

struct SPair {
    std::size_t i, j;  // i < j
    Monomial lcm;
};

Monomial pair_lcm(const std::vector<Polynomial>& basis, const MonomialOrder& ord,
                  std::size_t i, std::size_t j) {
    return lcm(leading_monomial(basis[i], ord), leading_monomial(basis[j], ord));
}

// S-polynomial under `ord`.
Polynomial spoly(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord,
                 std::uint32_t p) {
    const Monomial& lf = leading_monomial(f, ord);
    const Monomial& lg = leading_monomial(g, ord);
    Monomial l = lcm(lf, lg);
    std::uint32_t cf = 1, cg = 1;
    // locate leading coefficients under ord
    for (const auto& t : f.terms())
        if (t.mono == lf) cf = t.coeff;
    for (const auto& t : g.terms())
        if (t.mono == lg) cg = t.coeff;
    Polynomial a = f.times_monomial(l / lf, fp_inv(cf, p));
    Polynomial b = g.times_monomial(l / lg, fp_inv(cg, p));
    return a - b;
}

// Gebauer-Moeller update: add basis[m] = f and rebuild the pair set.
void update_pairs(const std::vector<Polynomial>& basis, const MonomialOrder& ord,
                  std::vector<SPair>& pairs, std::size_t m) {
    const Monomial& lf = leading_monomial(basis[m], ord);

    // drop old pairs strictly dominated by f
    std::erase_if(pairs, [&](const SPair& pr) {
        if (!lf.divides(pr.lcm)) return false;
        Monomial li = pair_lcm(basis, ord, pr.i, m);
        Monomial lj = pair_lcm(basis, ord, pr.j, m);
        return li != pr.lcm && lj != pr.lcm;
    });

    // group candidate pairs (i, m) by their lcm, keep one per minimal lcm,
    // and drop groups witnessed coprime (Buchberger's first criterion)
    auto enum_less = [](const Monomial& a, const Monomial& b) { return enum_order_less(a, b); };
    std::map<Monomial, std::vector<std::size_t>, decltype(enum_less)> groups(enum_less);
    for (std::size_t i = 0; i < m; ++i)
        groups[pair_lcm(basis, ord, i, m)].push_back(i);

    std::vector<Monomial> kept;
    std::vector<SPair> fresh;
    for (const auto& [l, members] : groups) {
        bool divisible = std::any_of(kept.begin(), kept.end(),
                                     [&](const Monomial& k) { return k.divides(l); });
        if (divisible) continue;
        kept.push_back(l);
        bool coprime = std::any_of(members.begin(), members.end(), [&](std::size_t i) {
            return leading_monomial(basis[i], ord).is_coprime_with(lf);
        });
        if (coprime) continue;
        fresh.push_back(SPair{members.front(), m, l});
    }
    std::sort(fresh.begin(), fresh.end(),
              [](const SPair& a, const SPair& b) { return a.i < b.i; });
    pairs.insert(pairs.end(), fresh.begin(), fresh.end());
}

std::size_t select_pair(const std::vector<SPair>& pairs) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
        const SPair& a = pairs[k];
        const SPair& b = pairs[best];
        if (a.lcm.degree() < b.lcm.degree() ||
            (a.lcm.degree() == b.lcm.degree() && (a.i < b.i || (a.i == b.i && a.j < b.j))))
            best = k;
    }
    return best;
}

std::vector<Polynomial> interreduce(std::vector<Polynomial> basis, const MonomialOrder& ord) {
    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Monomial& li = leading_monomial(basis[i], ord);
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& lj = leading_monomial(basis[j], ord);
            if (lj.divides(li) && (li != lj || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // tail-reduce until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> rest;
            rest.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) rest.push_back(minimal[j]);
            Polynomial r = normal_form(minimal[i], rest, ord);
            if (r != minimal[i]) {
                minimal[i] = r;
                changed = true;
            }
        }
    }

    std::uint32_t p = 0;
    for (auto& g : minimal) {
        p = g.ring()->characteristic();
        // monic under ord
        std::uint32_t c = 1;
        const Monomial& lg = leading_monomial(g, ord);
        for (const auto& t : g.terms())
            if (t.mono == lg) c = t.coeff;
        g = g.scaled(fp_inv(c, p));
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.greater(leading_monomial(a, ord), leading_monomial(b, ord));
    });
    return minimal;
}

}  // namespace

const Monomial& leading_monomial(const Polynomial& f, const MonomialOrder& ord) {
    if (f.is_zero()) throw Error("leading monomial of zero polynomial");
    const Monomial* best = &f.terms().front().mono;
    for (const auto& t : f.terms())
        if (ord.greater(t.mono, *best)) best = &t.mono;
    return *best;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord) {
    if (basis.empty()) return f;
    const RingPtr& ring = f.ring();
    const std::uint32_t p = ring->characteristic();
    Polynomial rem = f;
    std::vector<Term> done;
    while (!rem.is_zero()) {
        const Monomial& lm = leading_monomial(rem, ord);
        std::uint32_t lc = 1;
        for (const auto& t : rem.terms())
            if (t.mono == lm) lc = t.coeff;
        bool reduced = false;
        for (const auto& g : basis) {
            const Monomial& lg = leading_monomial(g, ord);
            if (!lg.divides(lm)) continue;
            std::uint32_t cg = 1;
            for (const auto& t : g.terms())
                if (t.mono == lg) cg = t.coeff;
            rem = rem - g.times_monomial(lm / lg, fp_mul(lc, fp_inv(cg, p), p));
            reduced = true;
            break;
        }
        if (!reduced) {
            done.push_back(Term{lm, lc});
            rem = rem - Polynomial::monomial(ring, lm, lc);
        }
    }
    Polynomial tail = Polynomial::from_terms(ring, std::move(done));
    return tail;
}

bool reduces_to_zero(const Polynomial& f, const std::vector<Polynomial>& gb,
                     const MonomialOrder& ord) {
    return normal_form(f, gb, ord).is_zero();
}

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens,
                                       const MonomialOrder& ord,
                                       const GroebnerLimits& limits) {
    std::vector<Polynomial> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) basis.push_back(g);
    if (basis.empty()) return basis;

    std::vector<SPair> pairs;
    // seed pairs one element at a time so the criteria apply uniformly
    std::vector<Polynomial> staged;
    std::vector<SPair> staged_pairs;
    for (const auto& g : basis) {
        staged.push_back(g);
        update_pairs(staged, ord, staged_pairs, staged.size() - 1);
    }
    basis = std::move(staged);
    pairs = std::move(staged_pairs);

    while (!pairs.empty()) {
        std::size_t k = select_pair(pairs);
        SPair pr = pairs[k];
        pairs.erase(pairs.begin() + long(k));
        if (pr.lcm.degree() > limits.max_spair_degree)
            throw ResourceLimitError("S-pair degree " + std::to_string(pr.lcm.degree()) +
                                     " exceeds the guard (" +
                                     std::to_string(limits.max_spair_degree) + ")");
        Polynomial s = spoly(basis[pr.i], basis[pr.j], ord, basis[pr.i].ring()->characteristic());
        Polynomial r = normal_form(s, basis, ord);
        if (r.is_zero()) continue;
        basis.push_back(r);
        if (basis.size() > limits.max_basis_size)
            throw ResourceLimitError("basis size exceeds the guard (" +
                                     std::to_string(limits.max_basis_size) + ")");
        update_pairs(basis, ord, pairs, basis.size() - 1);
    }

    auto reduced = interreduce(std::move(basis), ord);

    // a unit in the basis collapses it to {1}
    for (const auto& g : reduced) {
        if (!g.is_zero() && g.leading_monomial().is_one()) {
            return {Polynomial::constant(g.ring(), 1)};
        }
    }
    return reduced;
}

}  // namespace egh
