#include "vbs/fock.hpp"

#include "vbs/angular.hpp"

#include <cassert>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace vbs {

bool FockSpace::full() const {
    for (int i = 0; i < num_sites(); ++i)
        if (totals[i] != spins[i].twice()) return false;
    return true;
}

Integer FockSpace::dimension() const {
    Integer d = 1;
    for (int t : totals) d *= (t + 1);
    return d;
}

long FockSpace::sz_twice(const Config& c) const {
    long s = 0;
    for (size_t i = 0; i < c.size(); ++i) s += 2 * c[i] - totals[i];
    return s;
}

std::vector<Config> FockSpace::all_configs() const {
    std::vector<Config> out;
    Config c(totals.size(), 0);
    for (;;) {
        out.push_back(c);
        size_t i = c.size();
        while (i > 0) {
            --i;
            if (c[i] < totals[i]) {
                ++c[i];
                std::fill(c.begin() + i + 1, c.end(), 0);
                break;
            }
            if (i == 0) return out;
        }
        if (c.size() == 0) return out;
    }
}

Integer config_weight(const FockSpace& sp, const Config& c) {
    Integer w = 1;
    for (size_t i = 0; i < c.size(); ++i) w *= factorial(c[i]) * factorial(sp.totals[i] - c[i]);
    return w;
}

void FockVector::add_term(const Config& c, const Rational& amp) {
    if (amp == 0) return;
    auto [it, fresh] = terms_.emplace(c, amp);
    if (!fresh) {
        it->second += amp;
        if (it->second == 0) terms_.erase(it);
    }
}

FockVector FockVector::scaled(const Rational& f) const {
    FockVector out(space_);
    if (f == 0) return out;
    for (const auto& [c, a] : terms_) out.terms_.emplace(c, a * f);
    return out;
}

FockVector FockVector::operator+(const FockVector& o) const {
    if (space_ != o.space_) throw std::invalid_argument("adding vectors from different spaces");
    FockVector out = *this;
    for (const auto& [c, a] : o.terms_) out.add_term(c, a);
    return out;
}

FockVector FockVector::operator-(const FockVector& o) const { return *this + o.scaled(-1); }

Rational inner(const FockVector& a, const FockVector& b) {
    if (a.space() != b.space()) throw std::invalid_argument("inner product across different spaces");
    const auto& small = a.terms().size() <= b.terms().size() ? a : b;
    const auto& big = &small == &a ? b : a;
    Rational s = 0;
    for (const auto& [c, va] : small.terms()) {
        auto it = big.terms().find(c);
        if (it == big.terms().end()) continue;
        s += va * it->second * Rational(config_weight(a.space(), c));
    }
    return s;
}

Rational norm_squared(const FockVector& v) { return inner(v, v); }

void dump(const FockVector& v, std::ostream& os) {
    for (const auto& [c, a] : v.terms()) {
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) os << ' ';
            os << c[i];
        }
        os << '\t' << a.get_str() << '\n';
    }
}

namespace {

// Space of sites [first, first+count) of the chain with the listed links
// closed; a site's total is the sum of its closed-link multiplicities.
FockSpace subchain_space(const ChainSpec& chain, int first, int count, int link_lo, int link_hi) {
    FockSpace sp;
    sp.spins.reserve(count);
    sp.totals.assign(count, 0);
    for (int i = 0; i < count; ++i) sp.spins.push_back(chain.spins[first + i]);
    for (int l = link_lo; l <= link_hi; ++l) {
        sp.totals[l - first] += chain.bonds[l];
        sp.totals[l + 1 - first] += chain.bonds[l];
    }
    return sp;
}

// Expand the product over links of (x_j y_{j+1} - y_j x_{j+1})^{M}: walk the
// links once, branching over how each link's pairs split between the two
// flavors.
FockVector expand_valence_bonds(const ChainSpec& chain, FockSpace space, int first, int link_lo,
                                int link_hi) {
    std::map<Config, Integer> cur;
    cur.emplace(Config(space.num_sites(), 0), 1);
    for (int l = link_lo; l <= link_hi; ++l) {
        long m = chain.bonds[l];
        std::map<Config, Integer> next;
        for (const auto& [cfg, coef] : cur) {
            for (long k = 0; k <= m; ++k) {
                Config nc = cfg;
                nc[l - first] += static_cast<int>(m - k);
                nc[l + 1 - first] += static_cast<int>(k);
                Integer term = binomial(m, k) * coef;
                if (k % 2 != 0) term = -term;
                next[nc] += term;
            }
        }
        cur = std::move(next);
    }
    FockVector out(std::move(space));
    for (const auto& [cfg, coef] : cur) out.add_term(cfg, Rational(coef));
    return out;
}

}  // namespace

FockVector build_vbs(const ChainSpec& chain) {
    int n = chain.num_sites();
    FockSpace sp = subchain_space(chain, 0, n, 0, n - 2);
    assert(sp.full());
    return expand_valence_bonds(chain, std::move(sp), 0, 0, n - 2);
}

FockVector build_block_vbs(const ChainSpec& chain, const BlockSpec& blk) {
    int first = blk.start;
    FockSpace sp = subchain_space(chain, first, blk.length, first, blk.start + blk.length - 2);
    return expand_valence_bonds(chain, std::move(sp), first, first, blk.start + blk.length - 2);
}

Rational vbs_norm_closed_form(const ChainSpec& chain) {
    Integer num = 1;
    for (HalfInt s : chain.spins) num *= factorial(s.twice() + 1);
    Integer den = 1;
    for (long m : chain.bonds) den *= (m + 1);
    return make_rational(num, den);
}

namespace {

// v with extra bosons at its two outermost sites: da0/db0 first/second flavor
// at site 0, daL/dbL at the last site.  Totals grow to match, so the result
// lives in a different (more occupied) space.
FockVector dress_ends(const FockVector& v, int da0, int db0, int daL, int dbL) {
    FockSpace sp = v.space();
    int last = sp.num_sites() - 1;
    sp.totals[0] += da0 + db0;
    sp.totals[last] += daL + dbL;
    FockVector out(std::move(sp));
    for (const auto& [cfg, amp] : v.terms()) {
        Config nc = cfg;
        nc[0] += da0;
        nc[last] += daL;
        out.add_term(nc, amp);
    }
    return out;
}

}  // namespace

std::vector<FockVector> boundary_states(const ChainSpec& chain, const BlockSpec& blk) {
    FockVector base = build_block_vbs(chain, blk);
    std::vector<FockVector> out;
    out.reserve(blk.degeneracy());
    for (long p = 0; p <= blk.m_left; ++p)
        for (long q = 0; q <= blk.m_right; ++q)
            out.push_back(dress_ends(base, static_cast<int>(blk.m_left - p), static_cast<int>(p),
                                     static_cast<int>(q), static_cast<int>(blk.m_right - q)));
    return out;
}

ScaledFockVector degenerate_vbs(const ChainSpec& chain, const BlockSpec& blk, HalfInt J, HalfInt M) {
    HalfInt j1 = HalfInt::from_twice(blk.m_left);
    HalfInt j2 = HalfInt::from_twice(blk.m_right);
    if (!triangle_ok(j1, j2, J) || !valid_pair(J, M))
        throw std::invalid_argument("degenerate_vbs: (J,M) outside the boundary coupling range");

    FockVector base = build_block_vbs(chain, blk);
    int last = blk.length - 1;
    FockSpace sp = base.space();
    sp.totals[0] += static_cast<int>(blk.m_left);
    sp.totals[last] += static_cast<int>(blk.m_right);

    FockVector out(std::move(sp));
    for (long tm1 = -blk.m_left; tm1 <= blk.m_left; tm1 += 2) {
        HalfInt m1 = HalfInt::from_twice(tm1);
        HalfInt m2 = M - m1;
        if (m2.abs() > j2) continue;
        Rational r = cg_racah_sum(j1, m1, j2, m2, J);
        if (r == 0) continue;
        int da0 = static_cast<int>((j1 + m1).as_whole());
        int daL = static_cast<int>((j2 + m2).as_whole());
        for (const auto& [cfg, amp] : base.terms()) {
            Config nc = cfg;
            nc[0] += da0;
            nc[last] += daL;
            out.add_term(nc, amp * r);
        }
    }
    return {SqrtRational::sqrt_of(cg_common_factor(j1, j2, J, M)), std::move(out)};
}

FockVector apply_total_spin(SpinOp op, const FockVector& v) {
    const FockSpace& sp = v.space();
    FockVector out(sp);
    for (const auto& [cfg, amp] : v.terms()) {
        if (op == SpinOp::Z) {
            out.add_term(cfg, amp * Rational(sp.sz_twice(cfg)) / 2);
            continue;
        }
        for (size_t i = 0; i < cfg.size(); ++i) {
            if (op == SpinOp::Raise) {
                int q = sp.totals[i] - cfg[i];
                if (q == 0) continue;
                Config nc = cfg;
                ++nc[i];
                out.add_term(nc, amp * q);
            } else {
                if (cfg[i] == 0) continue;
                Config nc = cfg;
                --nc[i];
                out.add_term(nc, amp * cfg[i]);
            }
        }
    }
    return out;
}

void CFockVector::add_term(const Config& c, std::complex<double> amp) {
    if (amp == std::complex<double>(0.0, 0.0)) return;
    terms_[c] += amp;
}

CFockVector to_complex(const FockVector& v) {
    CFockVector out(v.space());
    for (const auto& [c, a] : v.terms()) out.add_term(c, to_double(a));
    return out;
}

CFockVector to_complex(const ScaledFockVector& v) {
    double s = v.scale.to_double();
    CFockVector out(v.vec.space());
    for (const auto& [c, a] : v.vec.terms()) out.add_term(c, s * to_double(a));
    return out;
}

std::complex<double> inner(const CFockVector& a, const CFockVector& b) {
    if (a.space() != b.space()) throw std::invalid_argument("inner product across different spaces");
    std::complex<double> s = 0;
    for (const auto& [c, va] : a.terms()) {
        auto it = b.terms().find(c);
        if (it == b.terms().end()) continue;
        s += std::conj(va) * it->second * to_double(Rational(config_weight(a.space(), c)));
    }
    return s;
}

double max_abs_diff(const CFockVector& a, const CFockVector& b) {
    double m = 0;
    for (const auto& [c, va] : a.terms()) {
        auto it = b.terms().find(c);
        std::complex<double> vb = it == b.terms().end() ? 0.0 : it->second;
        m = std::max(m, std::abs(va - vb));
    }
    for (const auto& [c, vb] : b.terms())
        if (!a.terms().count(c)) m = std::max(m, std::abs(vb));
    return m;
}

std::complex<double> coherent_weight(HalfInt J, HalfInt M, double theta, double phi) {
    if (!valid_pair(J, M)) throw std::invalid_argument("coherent_weight: malformed (J,M)");
    std::complex<double> u = std::cos(theta / 2) * std::exp(std::complex<double>(0, phi / 2));
    std::complex<double> v = std::sin(theta / 2) * std::exp(std::complex<double>(0, -phi / 2));
    long a = (J + M).as_whole();
    long b = (J - M).as_whole();
    double norm = std::sqrt(to_double(Rational(factorial(a) * factorial(b))));
    return std::pow(u, static_cast<double>(a)) * std::pow(v, static_cast<double>(b)) / norm;
}

CFockVector coherent_ground_state(const ChainSpec& chain, const BlockSpec& blk, HalfInt J,
                                  double theta, double phi) {
    HalfInt jm = blk.j_minus();
    HalfInt jp = blk.j_plus();
    if (!(J >= jm.abs() && J <= jp && (J - jm).is_whole()))
        throw std::invalid_argument("coherent_ground_state: J outside the boundary coupling range");

    long n1 = (jm + J).as_whole();   // aligned bosons on the left end
    long n2 = (jp - J).as_whole();   // valence bonds closing end to end
    long n3 = (J - jm).as_whole();   // aligned bosons on the right end

    std::complex<double> u = std::cos(theta / 2) * std::exp(std::complex<double>(0, phi / 2));
    std::complex<double> v = std::sin(theta / 2) * std::exp(std::complex<double>(0, -phi / 2));

    FockVector base = build_block_vbs(chain, blk);
    int last = blk.length - 1;
    FockSpace sp = base.space();
    sp.totals[0] += static_cast<int>(blk.m_left);
    sp.totals[last] += static_cast<int>(blk.m_right);

    CFockVector out(std::move(sp));
    for (long i = 0; i <= n1; ++i) {
        std::complex<double> ci = to_double(Rational(binomial(n1, i))) *
                                  std::pow(u, static_cast<double>(i)) *
                                  std::pow(v, static_cast<double>(n1 - i));
        for (long j = 0; j <= n2; ++j) {
            double cj = to_double(Rational(binomial(n2, j)));
            if (j % 2 != 0) cj = -cj;
            for (long k = 0; k <= n3; ++k) {
                std::complex<double> ck = to_double(Rational(binomial(n3, k))) *
                                          std::pow(u, static_cast<double>(k)) *
                                          std::pow(v, static_cast<double>(n3 - k));
                std::complex<double> coef = ci * cj * ck;
                // left end: i + (n2 - j) first-flavor; right end: j + k
                for (const auto& [cfg, amp] : base.terms()) {
                    Config nc = cfg;
                    nc[0] += static_cast<int>(i + n2 - j);
                    nc[last] += static_cast<int>(j + k);
                    out.add_term(nc, coef * to_double(amp));
                }
            }
        }
    }
    return out;
}

}  // namespace vbs
