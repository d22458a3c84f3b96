#include "vbs/cli.hpp"

#include "vbs/chain.hpp"
#include "vbs/closed_form.hpp"
#include "vbs/density.hpp"
#include "vbs/hamiltonian.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace vbs {

namespace {

std::string fmt_g(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::optional<ChainSpec> load_chain(const RunConfig& cfg, std::ostream& err, int& code) {
    try {
        return chain_from_json_file(cfg.chain_path);
    } catch (const ChainError& e) {
        err << "invalid chain: " << e.what() << "\n";
        code = kExitInvalidChain;
    } catch (const nlohmann::json::exception& e) {
        err << "cannot parse " << cfg.chain_path << ": " << e.what() << "\n";
        code = kExitParse;
    } catch (const std::invalid_argument& e) {
        err << "cannot read " << cfg.chain_path << ": " << e.what() << "\n";
        code = kExitParse;
    }
    return std::nullopt;
}

bool parse_pair(const std::string& s, long& a, long& b) {
    std::istringstream is(s);
    char colon = 0;
    if (!(is >> a >> colon >> b) || colon != ':') return false;
    std::string rest;
    return !(is >> rest);
}

// "link,J,value" with J as "n" or "n/2" and value a rational
bool parse_coeff(const std::string& s, CoeffMap& coeffs) {
    auto c1 = s.find(',');
    auto c2 = s.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) return false;
    std::string js = s.substr(c1 + 1, c2 - c1 - 1);
    try {
        int link = std::stoi(s.substr(0, c1));
        long twice;
        if (auto slash = js.find('/'); slash != std::string::npos) {
            if (js.substr(slash + 1) != "2") return false;
            twice = std::stol(js.substr(0, slash));
        } else {
            twice = 2 * std::stol(js);
        }
        Rational val(s.substr(c2 + 1));
        val.canonicalize();
        if (val <= 0) return false;
        coeffs[{link, twice}] = val;
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

int with_csv(const std::string& path, std::ostream& out, std::ostream& err,
             const std::function<int(std::ostream&)>& body) {
    if (path.empty()) return body(out);
    std::ofstream f(path);
    if (!f) {
        err << "cannot open " << path << " for writing\n";
        return kExitParse;
    }
    return body(f);
}

bool block_too_large(const ChainSpec& chain, const BlockSpec& blk, long cap) {
    Integer dim = 1;
    for (int i = 0; i < blk.length; ++i) dim *= chain.spins[blk.start + i].twice() + 1;
    return dim > cap;
}

}  // namespace

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    int code = kExitOk;
    auto chain = load_chain(cfg, err, code);
    if (!chain) return code;
    ValidationReport rep = validate(*chain);
    if (!rep.ok()) {
        for (const auto& v : rep.violations) err << "violation: " << v << "\n";
        return kExitInvalidChain;
    }
    if (!chain->name.empty()) out << "name: " << chain->name << "\n";
    out << "sites: " << chain->num_sites() << " (" << chain->bulk_sites() << " bulk)\n";
    out << "spins_twice:";
    for (HalfInt s : chain->spins) out << ' ' << s.twice();
    out << "\nbonds:";
    for (long m : chain->bonds) out << ' ' << m;
    out << "\nok\n";
    return kExitOk;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    int code = kExitOk;
    auto chain = load_chain(cfg, err, code);
    if (!chain) return code;

    long k = 0, l = 0;
    if (!parse_pair(cfg.block, k, l) || k < 1 || l < 1) {
        err << "bad --block, expected K:L with positive integers\n";
        return kExitParse;
    }
    CoeffMap coeffs;
    for (const auto& s : cfg.coeffs) {
        if (!parse_coeff(s, coeffs)) {
            err << "bad --coeff '" << s << "', expected link,J,value with value > 0\n";
            return kExitParse;
        }
    }
    if (cfg.method != "closed-form" && cfg.method != "brute-force" && cfg.method != "both") {
        err << "unknown method '" << cfg.method << "'\n";
        return kExitParse;
    }

    BlockSpec blk;
    try {
        blk = block(*chain, static_cast<int>(k), static_cast<int>(l));
    } catch (const BlockRangeError& e) {
        err << e.what() << "\n";
        return kExitInvalidChain;
    }

    bool want_closed = cfg.method != "brute-force";
    bool want_brute = cfg.method != "closed-form";

    BlockSpectrum closed, brute;
    if (want_closed) {
        try {
            closed = closed_form_spectrum(*chain, blk);
        } catch (const UnsupportedBlock& e) {
            err << e.what() << "\n";
            return kExitUnsupported;
        } catch (const NormalizationFailure& e) {
            err << e.what() << "\n";
            return kExitMismatch;
        }
    }
    if (want_brute) {
        if (block_too_large(*chain, blk, cfg.max_dim)) {
            err << "block dimension exceeds --max-dim " << cfg.max_dim << "\n";
            return kExitUnsupported;
        }
        try {
            brute = spectrum_by_peeling(reduced_density_matrix(*chain, blk), blk);
        } catch (const ConsistencyError& e) {
            err << "brute-force route failed its own checks: " << e.what() << "\n";
            return kExitMismatch;
        }
    }

    bool both = want_closed && want_brute;
    bool all_match = true;
    if (both) {
        all_match = closed.eigenvalues == brute.eigenvalues;
        // with both routes in hand, also confirm the bond operators (with any
        // coefficient overrides) annihilate every dressed block state
        Hamiltonian hb = build_block_hamiltonian(*chain, blk, coeffs);
        for (const FockVector& v : boundary_states(*chain, blk)) {
            if (!hb.apply(v).is_zero()) {
                err << "bond operators fail to annihilate a dressed block state\n";
                return kExitMismatch;
            }
        }
    }

    const BlockSpectrum& primary = want_closed ? closed : brute;
    int rc = with_csv(cfg.csv_path, out, err, [&](std::ostream& os) {
        os << "J_twice,multiplicity,lambda_num,lambda_den,lambda_float";
        if (both) os << ",bf_num,bf_den,bf_float,match";
        os << "\n";
        for (const auto& [J, lam] : primary.eigenvalues) {
            os << J.twice() << ',' << J.multiplicity() << ',' << lam.get_num().get_str() << ','
               << lam.get_den().get_str() << ',' << fmt_g(to_double(lam));
            if (both) {
                const Rational& b = brute.eigenvalues.at(J);
                os << ',' << b.get_num().get_str() << ',' << b.get_den().get_str() << ','
                   << fmt_g(to_double(b)) << ',' << (lam == b ? 1 : 0);
            }
            os << "\n";
        }
        return kExitOk;
    });
    if (rc != kExitOk) return rc;
    if (both && !all_match) {
        err << "closed-form and brute-force eigenvalues disagree\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int cmd_entropy(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    int code = kExitOk;
    auto chain = load_chain(cfg, err, code);
    if (!chain) return code;

    long lmin = 0, lmax = 0;
    if (!parse_pair(cfg.sweep, lmin, lmax) || lmin < 1 || lmax < lmin) {
        err << "bad --sweep, expected LMIN:LMAX with 1 <= LMIN <= LMAX\n";
        return kExitParse;
    }
    std::vector<double> alphas = cfg.alphas;
    if (alphas.empty()) alphas.push_back(2.0);
    for (double a : alphas) {
        if (a <= 0 || a == 1.0) {
            err << "Renyi index must be positive and different from 1\n";
            return kExitParse;
        }
    }

    struct Row {
        long L;
        double svn;
        std::vector<double> renyi;
        double sat;
    };
    std::vector<Row> rows;
    for (long L = lmin; L <= lmax; ++L) {
        BlockSpec blk;
        try {
            blk = block(*chain, cfg.block_start, static_cast<int>(L));
        } catch (const BlockRangeError& e) {
            err << e.what() << "\n";
            return kExitInvalidChain;
        }
        BlockSpectrum spec;
        try {
            spec = closed_form_spectrum(*chain, blk);
        } catch (const UnsupportedBlock& e) {
            err << e.what() << "\n";
            return kExitUnsupported;
        } catch (const NormalizationFailure& e) {
            err << e.what() << "\n";
            return kExitMismatch;
        }
        Row r;
        r.L = L;
        r.svn = spec.von_neumann_entropy();
        for (double a : alphas) r.renyi.push_back(spec.renyi_entropy(a));
        r.sat = saturated_entropy(blk.m_left, blk.m_right);
        rows.push_back(std::move(r));
    }

    return with_csv(cfg.csv_path, out, err, [&](std::ostream& os) {
        os << "L,S_vN";
        for (double a : alphas) os << ",S_renyi_" << fmt_g(a);
        os << ",saturation,gap\n";
        for (const Row& r : rows) {
            os << r.L << ',' << fmt_g(r.svn);
            for (double s : r.renyi) os << ',' << fmt_g(s);
            os << ',' << fmt_g(r.sat) << ',' << fmt_g(r.sat - r.svn) << "\n";
        }
        return kExitOk;
    });
}

}  // namespace vbs
