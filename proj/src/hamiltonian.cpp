#include "vbs/hamiltonian.hpp"

#include "vbs/angular.hpp"
#include "vbs/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace vbs {

namespace {

FockSpace full_space(std::vector<HalfInt> spins) {
    FockSpace sp;
    sp.totals.reserve(spins.size());
    for (HalfInt s : spins) sp.totals.push_back(static_cast<int>(s.twice()));
    sp.spins = std::move(spins);
    return sp;
}

}  // namespace

SiteOperator::SiteOperator(std::vector<HalfInt> spins)
    : spins_(std::move(spins)), space_(full_space(spins_)) {}

SiteOperator SiteOperator::identity(std::vector<HalfInt> spins) {
    SiteOperator op(std::move(spins));
    for (const Config& c : op.space_.all_configs()) op.add_entry(c, c, 1);
    return op;
}

void SiteOperator::add_entry(const Config& row, const Config& col, const Rational& val) {
    if (val == 0) return;
    auto& lst = cols_[col];
    for (auto& [r, v] : lst) {
        if (r == row) {
            v += val;
            return;
        }
    }
    lst.emplace_back(row, val);
}

Rational SiteOperator::entry(const Config& row, const Config& col) const {
    auto it = cols_.find(col);
    if (it == cols_.end()) return 0;
    for (const auto& [r, v] : it->second)
        if (r == row) return v;
    return 0;
}

SiteOperator SiteOperator::operator+(const SiteOperator& o) const {
    assert(spins_ == o.spins_);
    SiteOperator out = *this;
    for (const auto& [col, lst] : o.cols_)
        for (const auto& [row, v] : lst) out.add_entry(row, col, v);
    return out;
}

SiteOperator SiteOperator::operator-(const SiteOperator& o) const { return *this + o.scaled(-1); }

SiteOperator SiteOperator::operator*(const SiteOperator& o) const {
    assert(spins_ == o.spins_);
    SiteOperator out(spins_);
    for (const auto& [col, lst] : o.cols_) {
        for (const auto& [mid, v1] : lst) {
            auto it = cols_.find(mid);
            if (it == cols_.end()) continue;
            for (const auto& [row, v2] : it->second) out.add_entry(row, col, v2 * v1);
        }
    }
    return out;
}

SiteOperator SiteOperator::scaled(const Rational& f) const {
    SiteOperator out(spins_);
    if (f == 0) return out;
    for (const auto& [col, lst] : cols_)
        for (const auto& [row, v] : lst) out.add_entry(row, col, v * f);
    return out;
}

Rational SiteOperator::trace() const {
    Rational t = 0;
    for (const auto& [col, lst] : cols_)
        for (const auto& [row, v] : lst)
            if (row == col) t += v;
    return t;
}

FockVector SiteOperator::apply(const FockVector& v, int first_site) const {
    int n = static_cast<int>(spins_.size());
    const FockSpace& vs = v.space();
    if (first_site < 0 || first_site + n > vs.num_sites())
        throw std::invalid_argument("operator window outside the vector's sites");
    for (int i = 0; i < n; ++i) {
        if (vs.spins[first_site + i] != spins_[i] ||
            vs.totals[first_site + i] != spins_[i].twice())
            throw std::invalid_argument("operator expects fully occupied matching sites");
    }
    FockVector out(vs);
    Config local(n);
    for (const auto& [cfg, amp] : v.terms()) {
        for (int i = 0; i < n; ++i) local[i] = cfg[first_site + i];
        auto it = cols_.find(local);
        if (it == cols_.end()) continue;
        for (const auto& [row, val] : it->second) {
            Config nc = cfg;
            for (int i = 0; i < n; ++i) nc[first_site + i] = row[i];
            out.add_term(nc, amp * val);
        }
    }
    return out;
}

SiteOperator pair_exchange(HalfInt s1, HalfInt s2) {
    SiteOperator op({s1, s2});
    long t1 = s1.twice(), t2 = s2.twice();
    for (long p1 = 0; p1 <= t1; ++p1) {
        for (long p2 = 0; p2 <= t2; ++p2) {
            Config c{static_cast<int>(p1), static_cast<int>(p2)};
            // S1z S2z with Sz = (2p - t)/2 at each site
            op.add_entry(c, c, Rational((2 * p1 - t1) * (2 * p2 - t2)) / 4);
            // S1+ S2-: first site gains a flavor-one boson, second loses one
            if (p1 < t1 && p2 > 0) {
                Config r{static_cast<int>(p1 + 1), static_cast<int>(p2 - 1)};
                op.add_entry(r, c, Rational((t1 - p1) * p2) / 2);
            }
            // S1- S2+
            if (p1 > 0 && p2 < t2) {
                Config r{static_cast<int>(p1 - 1), static_cast<int>(p2 + 1)};
                op.add_entry(r, c, Rational(p1 * (t2 - p2)) / 2);
            }
        }
    }
    return op;
}

SiteOperator bond_projector(HalfInt s1, HalfInt s2, HalfInt J) {
    if (!triangle_ok(s1, s2, J))
        throw std::invalid_argument("bond_projector: J outside |s1-s2| .. s1+s2");
    SiteOperator dot = pair_exchange(s1, s2);
    auto casimir = [](HalfInt j) -> Rational {  // j(j+1)
        return make_rational(j.twice() * (j.twice() + 2), 4);
    };
    // S1.S2 eigenvalue on the combined-spin-j multiplet; the explicit return
    // type keeps the expression template from outliving its temporaries
    auto eig = [&](HalfInt j) -> Rational { return (casimir(j) - casimir(s1) - casimir(s2)) / 2; };

    SiteOperator out = SiteOperator::identity({s1, s2});
    Rational here = eig(J);
    for (HalfInt j = (s1 - s2).abs(); j <= s1 + s2; j = j + HalfInt::whole(1)) {
        if (j == J) continue;
        Rational other = eig(j);
        out = (dot - SiteOperator::identity({s1, s2}).scaled(other)).scaled(1 / (here - other)) * out;
    }
    return out;
}

namespace {

std::vector<BondTerm> link_terms(const ChainSpec& chain, int link, int local_site,
                                 const CoeffMap& coeffs) {
    HalfInt s1 = chain.spins[link];
    HalfInt s2 = chain.spins[link + 1];
    long m = chain.bonds[link];
    std::vector<BondTerm> out;
    for (HalfInt j = s1 + s2 - HalfInt::whole(m) + HalfInt::whole(1); j <= s1 + s2;
         j = j + HalfInt::whole(1)) {
        Rational c = 1;
        if (auto it = coeffs.find({link, j.twice()}); it != coeffs.end()) c = it->second;
        if (c <= 0) throw std::invalid_argument("bond coefficients must be positive");
        out.push_back({local_site, j, c, bond_projector(s1, s2, j)});
    }
    return out;
}

}  // namespace

Hamiltonian build_full_hamiltonian(const ChainSpec& chain, const CoeffMap& coeffs) {
    FockSpace sp = full_space(chain.spins);
    std::vector<BondTerm> terms;
    for (int l = 0; l + 1 < chain.num_sites(); ++l) {
        auto t = link_terms(chain, l, l, coeffs);
        terms.insert(terms.end(), std::make_move_iterator(t.begin()),
                     std::make_move_iterator(t.end()));
    }
    return Hamiltonian(std::move(sp), std::move(terms));
}

Hamiltonian build_block_hamiltonian(const ChainSpec& chain, const BlockSpec& blk,
                                    const CoeffMap& coeffs) {
    std::vector<HalfInt> spins;
    for (int i = 0; i < blk.length; ++i) spins.push_back(chain.spins[blk.start + i]);
    FockSpace sp = full_space(std::move(spins));
    std::vector<BondTerm> terms;
    for (int l = blk.start; l <= blk.start + blk.length - 2; ++l) {
        auto t = link_terms(chain, l, l - blk.start, coeffs);
        terms.insert(terms.end(), std::make_move_iterator(t.begin()),
                     std::make_move_iterator(t.end()));
    }
    return Hamiltonian(std::move(sp), std::move(terms));
}

FockVector Hamiltonian::apply(const FockVector& v) const {
    FockVector out(space_);
    for (const BondTerm& t : terms_) out = out + t.projector.apply(v, t.site).scaled(t.coeff);
    return out;
}

SiteOperator Hamiltonian::materialize() const {
    SiteOperator out(space_.spins);
    for (const Config& c : space_.all_configs()) {
        FockVector e(space_);
        e.add_term(c, 1);
        FockVector he = apply(e);
        for (const auto& [row, val] : he.terms()) out.add_entry(row, c, val);
    }
    return out;
}

long kernel_dimension(const Hamiltonian& h) {
    // columns H e_P, grouped by the conserved Sz of P
    std::map<long, std::vector<SparseVec>> sectors;
    long dim = 0;
    for (const Config& c : h.space().all_configs()) {
        ++dim;
        FockVector e(h.space());
        e.add_term(c, 1);
        FockVector he = h.apply(e);
        if (!he.is_zero()) sectors[h.space().sz_twice(c)].push_back(he.terms());
    }
    long rank = 0;
    for (auto& [sz, rows] : sectors) rank += rank_fraction_free(rows);
    return dim - rank;
}

}  // namespace vbs
