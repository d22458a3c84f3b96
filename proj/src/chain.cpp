#include "vbs/chain.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace vbs {

std::vector<long> solve_bonds(const std::vector<HalfInt>& spins) {
    if (spins.size() < 2) throw ChainError("need at least the two end sites");
    long alt = 0;  // twice the alternating spin sum
    for (size_t j = 0; j < spins.size(); ++j) {
        if (spins[j].twice() <= 0) throw ChainError("site spins must be positive");
        alt += (j % 2 == 0 ? 1 : -1) * spins[j].twice();
    }
    if (alt != 0) throw ChainError("alternating spin sum must vanish");

    // M_j = 2 sum_{l<=j} (-1)^{j-l} S_l, i.e. M_j = 2 S_j - M_{j-1}.
    std::vector<long> bonds(spins.size() - 1);
    long prev = 0;
    for (size_t j = 0; j + 1 < spins.size(); ++j) {
        long m = spins[j].twice() - prev;
        if (m <= 0) {
            std::ostringstream os;
            os << "link (" << j << "," << j + 1 << ") would need multiplicity " << m;
            throw ChainError(os.str());
        }
        bonds[j] = m;
        prev = m;
    }
    if (prev != spins.back().twice())
        throw ChainError("last site spin does not close the chain");
    return bonds;
}

std::vector<HalfInt> spins_from_bonds(const std::vector<long>& bonds) {
    if (bonds.empty()) throw ChainError("need at least one link");
    for (long m : bonds)
        if (m <= 0) throw ChainError("bond multiplicities must be positive");
    std::vector<HalfInt> spins(bonds.size() + 1);
    spins.front() = HalfInt::from_twice(bonds.front());
    spins.back() = HalfInt::from_twice(bonds.back());
    for (size_t j = 1; j < bonds.size(); ++j)
        spins[j] = HalfInt::from_twice(bonds[j - 1] + bonds[j]);
    return spins;
}

ChainSpec chain_from_spins(std::vector<HalfInt> spins, std::string name) {
    ChainSpec c;
    c.name = std::move(name);
    c.bonds = solve_bonds(spins);
    c.spins = std::move(spins);
    return c;
}

ChainSpec chain_from_bonds(std::vector<long> bonds, std::string name) {
    ChainSpec c;
    c.name = std::move(name);
    c.spins = spins_from_bonds(bonds);
    c.bonds = std::move(bonds);
    return c;
}

ChainSpec chain_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object()) throw std::invalid_argument("chain file must hold a JSON object");
    std::string name = j.value("name", "");
    bool has_spins = j.contains("spins_twice");
    bool has_bonds = j.contains("bonds");
    if (has_spins == has_bonds)
        throw std::invalid_argument("give exactly one of \"spins_twice\" or \"bonds\"");
    if (has_spins) {
        std::vector<HalfInt> spins;
        for (const auto& v : j.at("spins_twice")) {
            if (!v.is_number_integer()) throw std::invalid_argument("spins_twice entries must be integers");
            spins.push_back(HalfInt::from_twice(v.get<long>()));
        }
        return chain_from_spins(std::move(spins), std::move(name));
    }
    std::vector<long> bonds;
    for (const auto& v : j.at("bonds")) {
        if (!v.is_number_integer()) throw std::invalid_argument("bonds entries must be integers");
        bonds.push_back(v.get<long>());
    }
    return chain_from_bonds(std::move(bonds), std::move(name));
}

ChainSpec chain_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return chain_from_json(ss.str());
}

ValidationReport validate(const ChainSpec& chain) {
    ValidationReport rep;
    auto complain = [&rep](const std::string& s) { rep.violations.push_back(s); };

    if (chain.num_sites() < 2) {
        complain("chain needs at least the two end sites");
        return rep;
    }
    if (chain.bonds.size() + 1 != chain.spins.size()) {
        complain("bond list length must be one less than the site count");
        return rep;
    }
    for (size_t j = 0; j < chain.bonds.size(); ++j) {
        if (chain.bonds[j] <= 0) {
            std::ostringstream os;
            os << "link (" << j << "," << j + 1 << ") has nonpositive multiplicity " << chain.bonds[j];
            complain(os.str());
        }
    }
    long alt = 0;
    for (int j = 0; j < chain.num_sites(); ++j) alt += (j % 2 == 0 ? 1 : -1) * chain.spins[j].twice();
    if (alt != 0) complain("alternating spin sum is nonzero");
    for (int j = 0; j < chain.num_sites(); ++j) {
        long left = j > 0 ? chain.bonds[j - 1] : 0;
        long right = j + 1 < chain.num_sites() ? chain.bonds[j] : 0;
        if (chain.spins[j].twice() != left + right) {
            std::ostringstream os;
            os << "site " << j << ": 2S = " << chain.spins[j].twice()
               << " but adjacent links supply " << left + right;
            complain(os.str());
        }
    }
    return rep;
}

std::vector<HalfInt> BlockSpec::j_values() const {
    std::vector<HalfInt> js;
    for (HalfInt J = j_minus().abs(); J <= j_plus(); J = J + HalfInt::whole(1)) js.push_back(J);
    return js;
}

BlockSpec block(const ChainSpec& chain, int start, int length) {
    if (length < 1) throw BlockRangeError("block length must be at least 1");
    if (start < 1 || start + length - 1 > chain.bulk_sites()) {
        std::ostringstream os;
        os << "block " << start << ":" << length << " does not fit in " << chain.bulk_sites()
           << " bulk sites";
        throw BlockRangeError(os.str());
    }
    BlockSpec b;
    b.start = start;
    b.length = length;
    b.m_left = chain.bonds[start - 1];
    b.m_right = chain.bonds[start + length - 1];
    return b;
}

}  // namespace vbs
