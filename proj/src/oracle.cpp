#include "maxchord/oracle.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace maxchord {

namespace {

bool enumerate_all(std::vector<int>& mate, int low, const std::function<bool(const ChordDiagram&)>& fn) {
    const int m = static_cast<int>(mate.size());
    while (low < m && mate[low] != -1) ++low;
    if (low == m) return fn(ChordDiagram(mate));
    for (int j = low + 1; j < m; ++j) {
        if (mate[j] != -1) continue;
        mate[low] = j;
        mate[j] = low;
        const bool keep_going = enumerate_all(mate, low + 1, fn);
        mate[low] = -1;
        mate[j] = -1;
        if (!keep_going) return false;
    }
    return true;
}

// Assigns whole mirror orbits: the smallest unpaired point picks a partner,
// which forces the mirror chord unless the chosen chord is its own mirror.
bool enumerate_symmetric(std::vector<int>& mate, const std::vector<int>& refl, int low,
                         const std::function<bool(const ChordDiagram&)>& fn) {
    const int m = static_cast<int>(mate.size());
    while (low < m && mate[low] != -1) ++low;
    if (low == m) return fn(ChordDiagram(mate));
    const int i = low;
    const int si = refl[i];
    for (int j = i + 1; j < m; ++j) {
        if (mate[j] != -1) continue;
        const int sj = refl[j];
        const bool self_mirror = (si == i && sj == j) || si == j;
        if (self_mirror) {
            mate[i] = j;
            mate[j] = i;
            const bool keep_going = enumerate_symmetric(mate, refl, i + 1, fn);
            mate[i] = -1;
            mate[j] = -1;
            if (!keep_going) return false;
        } else if (si != i && sj != j && sj != i && mate[si] == -1 && mate[sj] == -1) {
            mate[i] = j;
            mate[j] = i;
            mate[si] = sj;
            mate[sj] = si;
            const bool keep_going = enumerate_symmetric(mate, refl, i + 1, fn);
            mate[i] = -1;
            mate[j] = -1;
            mate[si] = -1;
            mate[sj] = -1;
            if (!keep_going) return false;
        }
        // otherwise the forced mirror chord collides with {i,j}: skip
    }
    return true;
}

std::vector<std::vector<int>> permutation_tables(const std::vector<SymmetryElement>& elements, int m) {
    std::vector<std::vector<int>> tables;
    tables.reserve(elements.size());
    for (const auto& s : elements) {
        std::vector<int> t(m);
        for (int i = 0; i < m; ++i) t[i] = s.apply(i);
        tables.push_back(std::move(t));
    }
    return tables;
}

bool fixed_by_table(const std::vector<int>& mate, const std::vector<int>& perm) {
    for (int i = 0; i < static_cast<int>(mate.size()); ++i)
        if (mate[perm[i]] != perm[mate[i]]) return false;
    return true;
}

void check_genus_arg(int g) {
    if (g < 1) throw std::invalid_argument("oracle needs genus >= 1");
}

} // namespace

void for_each_diagram(int n, const std::function<bool(const ChordDiagram&)>& fn, bool force) {
    if (n < 1) throw std::invalid_argument("enumeration needs at least one chord");
    if (!force && n > max_enumeration_chords)
        throw desk_scale_error("full enumeration of " + std::to_string(n) +
                               " chords exceeds the desk-scale guard of " +
                               std::to_string(max_enumeration_chords) + "; pass force to run anyway");
    std::vector<int> mate(2 * n, -1);
    enumerate_all(mate, 0, fn);
}

void for_each_symmetric_diagram(const SymmetryElement& reflection,
                                const std::function<bool(const ChordDiagram&)>& fn, bool force) {
    if (!reflection.is_reflection())
        throw std::invalid_argument("symmetric enumeration needs a reflection");
    const int m = reflection.points;
    if (!force && m > 4 * max_symmetric_genus)
        throw desk_scale_error("symmetric enumeration on " + std::to_string(m) +
                               " points exceeds the desk-scale guard of " +
                               std::to_string(4 * max_symmetric_genus) + "; pass force to run anyway");
    std::vector<int> refl(m);
    for (int i = 0; i < m; ++i) refl[i] = reflection.apply(i);
    std::vector<int> mate(m, -1);
    enumerate_symmetric(mate, refl, 0, fn);
}

GenusTally genus_tally(int n, bool force) {
    GenusTally tally{n, {}};
    for_each_diagram(n, [&](const ChordDiagram& d) {
        ++tally.counts[genus(d)];
        return true;
    }, force);
    return tally;
}

CountBig d_star_oracle(int g, bool force) {
    check_genus_arg(g);
    if (!force && g > 4)
        throw desk_scale_error("d_star_oracle is guarded above genus 4; pass force to run anyway");
    const int m = 4 * g;
    std::vector<SymmetryElement> rotations;
    for (int k = 0; k < m; ++k) rotations.push_back(SymmetryElement::rotation(m, k));
    const auto tables = permutation_tables(rotations, m);
    std::uint64_t fixed_total = 0;
    for_each_diagram(2 * g, [&](const ChordDiagram& d) {
        if (!is_maximal(d)) return true;
        for (const auto& t : tables) fixed_total += fixed_by_table(d.mate_vector(), t);
        return true;
    }, force);
    return exact_div(CountBig(fixed_total), CountBig(m), "d_star_oracle Burnside sum");
}

CountBig reflection_fixed_oracle(int g, AxisType axis, bool force) {
    check_genus_arg(g);
    const int m = 4 * g;
    const auto s = axis == AxisType::type1 ? canonical_type1_axis(m) : canonical_type2_axis(m);
    std::uint64_t count = 0;
    for_each_symmetric_diagram(s, [&](const ChordDiagram& d) {
        count += is_maximal(d);
        return true;
    }, force);
    return CountBig(count);
}

DCircleOracle d_circle_oracle(int g, bool force) {
    check_genus_arg(g);
    if (!force && g > 3)
        throw desk_scale_error("d_circle_oracle is guarded above genus 3; pass force to run anyway");
    const int m = 4 * g;
    const auto tables = permutation_tables(dihedral_elements(m), m);
    std::uint64_t fixed_total = 0;
    std::set<std::vector<int>> canonical;
    for_each_diagram(2 * g, [&](const ChordDiagram& d) {
        if (!is_maximal(d)) return true;
        for (const auto& t : tables) fixed_total += fixed_by_table(d.mate_vector(), t);
        canonical.insert(canonical_form(d).mate_vector());
        return true;
    }, force);
    DCircleOracle out{exact_div(CountBig(fixed_total), CountBig(2 * m), "d_circle_oracle Burnside sum"),
                      CountBig(canonical.size())};
    if (out.burnside != out.canonical_classes)
        throw std::logic_error("d_circle_oracle: Burnside (" + out.burnside.str() +
                               ") and canonical-form (" + out.canonical_classes.str() + ") counts disagree");
    return out;
}

bool axis_independence_check(int g, AxisType axis, bool force) {
    check_genus_arg(g);
    if (!force && g > 3)
        throw desk_scale_error("axis_independence_check is guarded above genus 3; pass force to run anyway");
    const int m = 4 * g;
    std::vector<SymmetryElement> axes;
    for (int p = 0; p < m / 2; ++p)
        axes.push_back(axis == AxisType::type1 ? SymmetryElement::reflection_through_points(m, p)
                                               : SymmetryElement::reflection_through_arcs(m, p));
    const auto tables = permutation_tables(axes, m);
    std::vector<std::uint64_t> counts(tables.size(), 0);
    for_each_diagram(2 * g, [&](const ChordDiagram& d) {
        if (!is_maximal(d)) return true;
        for (size_t a = 0; a < tables.size(); ++a) counts[a] += fixed_by_table(d.mate_vector(), tables[a]);
        return true;
    }, force);
    for (const auto c : counts)
        if (c != counts[0]) return false;
    return true;
}

} // namespace maxchord
