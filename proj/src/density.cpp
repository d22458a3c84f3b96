#include "vbs/density.hpp"

#include "vbs/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace vbs {

Rational BlockSpectrum::trace() const {
    Rational t = 0;
    for (const auto& [J, lam] : eigenvalues) t += Rational(J.multiplicity()) * lam;
    return t;
}

Rational BlockSpectrum::purity() const {
    Rational t = 0;
    for (const auto& [J, lam] : eigenvalues) t += Rational(J.multiplicity()) * lam * lam;
    return t;
}

double BlockSpectrum::von_neumann_entropy() const {
    double s = 0;
    for (const auto& [J, lam] : eigenvalues) {
        double x = to_double(lam);
        if (x > 0) s -= J.multiplicity() * x * std::log(x);
    }
    return s;
}

double BlockSpectrum::renyi_entropy(double alpha) const {
    if (alpha == 1.0) throw std::invalid_argument("Renyi index 1 is the von Neumann limit");
    if (alpha <= 0) throw std::invalid_argument("Renyi index must be positive");
    double z = 0;
    for (const auto& [J, lam] : eigenvalues) {
        double x = to_double(lam);
        if (x > 0) z += J.multiplicity() * std::pow(x, alpha);
    }
    return std::log(z) / (1.0 - alpha);
}

void BlockOperator::add_entry(const Config& row, const Config& col, const Rational& val) {
    if (val == 0) return;
    auto key = std::make_pair(row, col);
    auto [it, fresh] = entries_.emplace(std::move(key), val);
    if (!fresh) {
        it->second += val;
        if (it->second == 0) entries_.erase(it);
    }
}

Rational BlockOperator::entry(const Config& row, const Config& col) const {
    auto it = entries_.find({row, col});
    return it == entries_.end() ? Rational(0) : it->second;
}

Rational BlockOperator::trace() const {
    Rational t = 0;
    for (const auto& [key, val] : entries_)
        if (key.first == key.second) t += val * Rational(config_weight(space_, key.first));
    return t;
}

FockVector BlockOperator::apply(const FockVector& v) const {
    if (v.space() != space_) throw std::invalid_argument("vector lives in a different space");
    FockVector out(space_);
    for (const auto& [key, val] : entries_) {
        auto it = v.terms().find(key.second);
        if (it == v.terms().end()) continue;
        out.add_term(key.first, val * Rational(config_weight(space_, key.second)) * it->second);
    }
    return out;
}

BlockOperator reduced_density_matrix(const ChainSpec& chain, const BlockSpec& blk) {
    FockVector psi = build_vbs(chain);
    int first = blk.start;
    int len = blk.length;
    int n = chain.num_sites();

    FockSpace bs;
    for (int i = 0; i < len; ++i) {
        bs.spins.push_back(chain.spins[first + i]);
        bs.totals.push_back(static_cast<int>(chain.spins[first + i].twice()));
    }

    // environment part -> list of (block part, amplitude * sqrt-free env weight)
    std::map<Config, std::vector<std::pair<Config, Rational>>> groups;
    for (const auto& [cfg, amp] : psi.terms()) {
        Config env;
        env.reserve(n - len);
        Config blkc(cfg.begin() + first, cfg.begin() + first + len);
        for (int i = 0; i < n; ++i)
            if (i < first || i >= first + len) env.push_back(cfg[i]);
        groups[std::move(env)].emplace_back(std::move(blkc), amp);
    }

    FockSpace env_sp;
    for (int i = 0; i < n; ++i) {
        if (i >= first && i < first + len) continue;
        env_sp.spins.push_back(chain.spins[i]);
        env_sp.totals.push_back(static_cast<int>(chain.spins[i].twice()));
    }

    Rational norm = norm_squared(psi);
    BlockOperator rho(bs);
    for (const auto& [env, members] : groups) {
        Rational ew(config_weight(env_sp, env));
        for (const auto& [c1, a1] : members)
            for (const auto& [c2, a2] : members) rho.add_entry(c1, c2, a1 * a2 * ew / norm);
    }
    return rho;
}

BlockOperator density_from_boundary_sum(const ChainSpec& chain, const BlockSpec& blk) {
    // prefactor: interior links contribute (M+1), block sites (2S+1)!
    Integer den = 1;
    for (int i = 0; i < blk.length; ++i)
        den *= factorial(chain.spins[blk.start + i].twice() + 1);
    Integer num = 1;
    for (int l = blk.start; l <= blk.start + blk.length - 2; ++l) num *= (chain.bonds[l] + 1);
    Rational pref = make_rational(num, den);

    std::vector<FockVector> bnd = boundary_states(chain, blk);
    BlockOperator rho(bnd.front().space());
    for (long p = 0; p <= blk.m_left; ++p) {
        for (long q = 0; q <= blk.m_right; ++q) {
            const FockVector& v = bnd[p * (blk.m_right + 1) + q];
            Rational w = pref * Rational(binomial(blk.m_left, p) * binomial(blk.m_right, q));
            for (const auto& [c1, a1] : v.terms())
                for (const auto& [c2, a2] : v.terms()) rho.add_entry(c1, c2, a1 * a2 * w);
        }
    }
    return rho;
}

Rational sector_trace(const BlockOperator& rho, HalfInt M) {
    Rational t = 0;
    for (const auto& [key, val] : rho.entries()) {
        if (key.first != key.second) continue;
        if (rho.space().sz_twice(key.first) != M.twice()) continue;
        t += val * Rational(config_weight(rho.space(), key.first));
    }
    return t;
}

BlockSpectrum spectrum_by_peeling(const BlockOperator& rho, const BlockSpec& blk) {
    // per-sector traces, keyed by twice the total Sz
    std::map<long, Rational> sect;
    for (const auto& [key, val] : rho.entries()) {
        if (key.first != key.second) continue;
        sect[rho.space().sz_twice(key.first)] +=
            val * Rational(config_weight(rho.space(), key.first));
    }

    long top = blk.j_plus().twice();
    for (const auto& [tm, tr] : sect) {
        if (tr == 0) continue;
        if (std::abs(tm) > top) throw ConsistencyError("occupied Sz sector above the top spin");
        auto it = sect.find(-tm);
        if (it == sect.end() || it->second != tr)
            throw ConsistencyError("sector traces are not symmetric under Sz -> -Sz");
    }

    auto tr_at = [&](long tm) {
        auto it = sect.find(tm);
        return it == sect.end() ? Rational(0) : it->second;
    };

    BlockSpectrum out;
    long bottom = blk.j_minus().abs().twice();
    for (long tm = top; tm >= 0; tm -= 2) {
        Rational lam = tr_at(tm) - tr_at(tm + 2);
        if (tm >= bottom) {
            if (lam < 0) throw ConsistencyError("negative eigenvalue from sector peeling");
            out.eigenvalues[HalfInt::from_twice(tm)] = lam;
        } else if (lam != 0) {
            throw ConsistencyError("sector trace keeps changing below the bottom spin");
        }
    }
    if (out.trace() != rho.trace())
        throw ConsistencyError("peeled eigenvalues do not add back to the trace");
    return out;
}

namespace {

std::string cfg_str(const Config& c) {
    std::ostringstream os;
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ' ';
        os << c[i];
    }
    return os.str();
}

}  // namespace

ProjectorReport verify_projector_structure(const BlockOperator& rho, const ChainSpec& chain,
                                           const BlockSpec& blk) {
    ProjectorReport rep;
    rep.expected_rank = blk.degeneracy();

    // rank, sector by sector (rho is exactly block diagonal in total Sz)
    std::map<long, std::vector<SparseVec>> sector_rows;
    {
        std::map<Config, SparseVec> rows;
        for (const auto& [key, val] : rho.entries()) rows[key.first][key.second] = val;
        for (auto& [r, row] : rows) sector_rows[rho.space().sz_twice(r)].push_back(std::move(row));
    }
    rep.rank = 0;
    for (auto& [tm, rows] : sector_rows) rep.rank += rank_fraction_free(rows);
    if (rep.rank != rep.expected_rank) {
        std::ostringstream os;
        os << "rank " << rep.rank << " != boundary multiplet count " << rep.expected_rank;
        rep.failures.push_back(os.str());
    }

    BlockSpectrum spec = spectrum_by_peeling(rho, blk);

    // highest-weight vector of each multiplet: the Sz = J combination of
    // boundary states killed by the total raising operator
    std::vector<FockVector> bnd = boundary_states(chain, blk);
    for (HalfInt J : blk.j_values()) {
        std::vector<const FockVector*> at_j;
        for (const FockVector& v : bnd) {
            if (v.terms().empty()) continue;
            long tm = v.space().sz_twice(v.terms().begin()->first);
            if (tm == J.twice()) at_j.push_back(&v);
        }
        std::vector<SparseVec> raised;
        raised.reserve(at_j.size());
        for (const FockVector* v : at_j) raised.push_back(apply_total_spin(SpinOp::Raise, *v).terms());
        auto null_basis = nullspace_of_columns(raised);
        if (null_basis.size() != 1) {
            std::ostringstream os;
            os << "J=" << J << ": expected one highest-weight combination, found "
               << null_basis.size();
            rep.failures.push_back(os.str());
            continue;
        }
        FockVector v(bnd.front().space());
        for (size_t i = 0; i < at_j.size(); ++i) v = v + at_j[i]->scaled(null_basis[0][i]);
        if (v.is_zero()) {
            rep.failures.push_back("null highest-weight vector");
            continue;
        }

        // descend through the whole multiplet checking rho v = Lambda v
        Rational lam = spec.eigenvalues.at(J);
        for (long step = 0;; ++step) {
            FockVector rv = rho.apply(v);
            if (rv != v.scaled(lam)) {
                std::ostringstream os;
                os << "J=" << J << ", step " << step << ": rho does not scale the multiplet vector"
                   << " (first cfg " << (v.terms().empty() ? "-" : cfg_str(v.terms().begin()->first))
                   << ")";
                rep.failures.push_back(os.str());
                break;
            }
            if (step == J.twice()) break;
            v = apply_total_spin(SpinOp::Lower, v);
            if (v.is_zero()) {
                rep.failures.push_back("multiplet ended early under the lowering operator");
                break;
            }
        }
    }
    return rep;
}

std::pair<double, double> entropies(const BlockSpectrum& spec, double alpha) {
    return {spec.von_neumann_entropy(), spec.renyi_entropy(alpha)};
}

}  // namespace vbs
