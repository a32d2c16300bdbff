#include "mc/regularity.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "mc/errors.hpp"

namespace mc {

namespace {

void require_proper_nonzero(const MonomialIdeal &ideal, const char *where)
{
    if (ideal.is_zero()) {
        throw DomainError(std::string(where) + ": regularity is undefined for the zero ideal");
    }
    if (ideal.is_unit()) {
        throw DomainError(std::string(where) + ": regularity is undefined for the unit ideal");
    }
}

// Homology of links, shared across the whole exponent sweep.
class HomologyCache {
public:
    explicit HomologyCache(Field field) : field_(field) {}

    const HomologyProfile &get(const SimplicialComplex &complex)
    {
        auto it = cache_.find(complex.facets());
        if (it == cache_.end()) {
            it = cache_.emplace(complex.facets(), reduced_homology(complex, field_)).first;
        }
        return it->second;
    }

private:
    Field field_;
    std::map<std::vector<VarSet>, HomologyProfile> cache_;
};

struct LocalPair {
    int i;
    VarSet face;
};

struct DegreeComplexEntry {
    std::vector<LocalPair> pairs;
    std::uint64_t candidates = 0;
};

} // namespace

SimplicialComplex degree_complex(const MonomialIdeal &ideal, const Exponent &a)
{
    if (ideal.is_unit()) {
        throw DomainError("degree complex of the unit ideal");
    }
    return stanley_reisner_complex(radical(colon(ideal, a)));
}

std::uint64_t for_each_critical_pair(const MonomialIdeal &ideal, Field field,
                                     const std::function<void(const CriticalPair &)> &visit,
                                     SearchBox box)
{
    require_proper_nonzero(ideal, "critical pairs");
    HomologyCache homology(field);
    // Exponents with the same associated radical and support share their pairs.
    std::map<std::pair<std::vector<VarSet>, VarSet>, DegreeComplexEntry> by_radical;
    std::uint64_t examined = 0;

    const GammaBox search = box == SearchBox::Gamma ? gamma_box(ideal) : generator_box(ideal);
    search.for_each([&](const Exponent &a) {
        if (ideal.contains(a)) {
            return; // unit colon, void degree complex
        }
        const VarSet support = a.support();
        auto assoc = radical(colon(ideal, a));
        auto key = std::make_pair(assoc.squarefree_masks(), support);
        auto it = by_radical.find(key);
        if (it == by_radical.end()) {
            DegreeComplexEntry entry;
            const auto complex = stanley_reisner_complex(assoc);
            for (auto face : complex.faces()) {
                if ((face & support) != 0) {
                    continue;
                }
                ++entry.candidates;
                const auto &profile = homology.get(link(complex, face));
                for (const auto &[q, d] : profile.dims) {
                    if (d > 0) {
                        entry.pairs.push_back({q + 1, face});
                    }
                }
            }
            it = by_radical.emplace(std::move(key), std::move(entry)).first;
        }
        examined += it->second.candidates;
        for (const auto &p : it->second.pairs) {
            visit(CriticalPair{a, p.i, p.face});
        }
    });
    return examined;
}

std::vector<CriticalPair> critical_pairs(const MonomialIdeal &ideal, Field field, SearchBox box)
{
    std::vector<CriticalPair> out;
    for_each_critical_pair(ideal, field, [&](const CriticalPair &p) { out.push_back(p); }, box);
    return out;
}

RegularityReport regularity(const MonomialIdeal &ideal, Field field, SearchBox box)
{
    require_proper_nonzero(ideal, "regularity");
    RegularityReport report;
    report.field = field;
    // Pairs arrive with a lexicographically increasing and faces by size then
    // mask, so keeping the first pair of maximal weight gives the tie-break.
    report.pairs_examined = for_each_critical_pair(
        ideal, field,
        [&](const CriticalPair &p) {
            if (!report.witness || p.weight() > report.witness->weight()) {
                report.witness = p;
            }
        },
        box);
    if (!report.witness) {
        // Every proper nonzero monomial ideal has a critical pair.
        throw std::logic_error("regularity: no critical pair found for " + ideal.to_string());
    }
    report.reg_module = report.witness->weight();
    report.reg_ideal = report.reg_module + 1;
    return report;
}

SimplicialComplex upper_koszul_complex(const MonomialIdeal &ideal, const Exponent &b)
{
    require_same_size(ideal.nvars(), b.size(), "upper Koszul complex");
    const VarSet support = b.support();
    std::vector<VarSet> faces;
    VarSet f = support;
    while (true) {
        if (ideal.contains(b.colon(Exponent::squarefree(b.size(), f)))) {
            faces.push_back(f);
        }
        if (f == 0) {
            break;
        }
        f = (f - 1) & support;
    }
    return SimplicialComplex(ideal.nvars(), std::move(faces));
}

RegularityReport regularity_oracle_koszul(const MonomialIdeal &ideal, Field field)
{
    require_proper_nonzero(ideal, "Koszul oracle");
    RegularityReport report;
    report.field = field;
    bool found = false;
    std::int64_t best = 0;
    generator_box(ideal).for_each([&](const Exponent &b) {
        if (!ideal.contains(b)) {
            return;
        }
        ++report.pairs_examined;
        const auto profile = reduced_homology(upper_koszul_complex(ideal, b), field);
        for (const auto &[q, d] : profile.dims) {
            if (d == 0) {
                continue;
            }
            const int i = q + 1;
            const auto value = static_cast<std::int64_t>(b.total_degree()) - i;
            if (!found || value > best) {
                found = true;
                best = value;
                report.betti_witness = BettiWitness{b, i};
            }
        }
    });
    if (!found) {
        throw std::logic_error("Koszul oracle: no nonzero Betti number for " + ideal.to_string());
    }
    report.reg_ideal = best;
    report.reg_module = best - 1;
    return report;
}

VariableAdditionCheck check_variable_addition(const MonomialIdeal &ideal, std::size_t j, Field field)
{
    if (j < 1 || j > ideal.nvars()) {
        throw DomainError("variable index " + std::to_string(j) + " out of range");
    }
    VariableAdditionCheck check;
    const auto base = regularity(ideal, field);
    check.reg_ideal = base.reg_ideal;
    const auto extended = sum(ideal, MonomialIdeal::variables(ideal.nvars(), var_bit(j)));
    check.reg_extended = regularity(extended, field).reg_ideal;
    for_each_critical_pair(ideal, field, [&](const CriticalPair &p) {
        if (p.weight() == base.reg_module && (p.face & var_bit(j)) != 0) {
            check.equality_expected = true;
        }
    });
    return check;
}

} // namespace mc
