#include "braidalex/alexander.hpp"


namespace braidalex {

PolyMatrix c_matrix(int i, VarId a, int n, int sign) {
    if (n < 2) throw IndexOutOfRange("c_matrix: need at least 2 strands");
    if (i < 1 || i > n - 1)
        throw IndexOutOfRange("c_matrix: generator index " + std::to_string(i) +
                              " out of range for " + std::to_string(n) + " strands");
    if (sign != 1 && sign != -1) throw IndexOutOfRange("c_matrix: sign must be +1 or -1");

    PolyMatrix m = PolyMatrix::identity(n - 1);
    const int r = i - 1;  // 0-based row
    if (sign > 0) {
        if (r > 0) m.at(r, r - 1) = LaurentPoly::variable(a);
        m.at(r, r) = -LaurentPoly::variable(a);
        if (r + 1 < n - 1) m.at(r, r + 1) = LaurentPoly(1);
    } else {
        if (r > 0) m.at(r, r - 1) = LaurentPoly(1);
        m.at(r, r) = -LaurentPoly::variable(a, -1);
        if (r + 1 < n - 1) m.at(r, r + 1) = LaurentPoly::variable(a, -1);
    }
    return m;
}

ColouredBurau coloured_burau(const BraidWord& w) {
    ColouredBurau cb;
    cb.strands = w.strands;
    cb.matrix = PolyMatrix::identity(w.strands - 1);
    LabelSequence labels = undercrossing_labels(w);
    for (std::size_t r = 0; r < w.length(); ++r) {
        const BraidLetter& letter = w.letters[r];
        cb.matrix = cb.matrix * c_matrix(letter.index, VarId::t(labels[r]), w.strands, letter.sign);
    }
    return cb;
}

std::map<VarId, VarId> identification_map(const Permutation& p) {
    std::map<VarId, VarId> map;
    map.emplace(VarId::axis(), VarId::axis());
    for (const auto& cycle : components_of(p)) {
        int rep = cycle.front();  // minimum element names the component
        for (int j : cycle) map.emplace(VarId::t(j), VarId::t(rep));
    }
    return map;
}

namespace {

// I - x*B with strand identifications already applied to B.
PolyMatrix axis_char_matrix(const PolyMatrix& identified) {
    const LaurentPoly x = LaurentPoly::variable(VarId::axis());
    return PolyMatrix::identity(identified.rows()) - (x * identified);
}

struct TorresParts {
    LaurentPoly det;      // det(I - B) after identifications
    LaurentPoly divisor;  // 1 - prod t_c^{n_c}, or the k = 1 routing below
    int components = 0;
};

TorresParts torres_parts(const BraidWord& w) {
    Permutation pi = permutation_of(w);
    auto cycles = components_of(pi);
    PolyMatrix b = substitute(coloured_burau(w).matrix, identification_map(pi));

    TorresParts parts;
    parts.components = static_cast<int>(cycles.size());
    parts.det = determinant(PolyMatrix::identity(b.rows()) - b);
    if (parts.components > 1) {
        ExpVector axis_class;  // image of t_1 t_2 ... t_n under identification
        for (const auto& cycle : cycles)
            axis_class.emplace(VarId::t(cycle.front()), static_cast<int>(cycle.size()));
        parts.divisor = LaurentPoly(1) - LaurentPoly::monomial(1, axis_class);
    } else {
        // knot: divide by (1 - t^n)/(1 - t) = 1 + t + ... + t^{n-1} so the
        // quotient stays in the ring
        const VarId t = VarId::t(cycles.front().front());
        for (int e = 0; e < w.strands; ++e) parts.divisor += LaurentPoly::variable(t, e);
    }
    return parts;
}

LaurentPoly torres_quotient(const BraidWord& w) {
    TorresParts parts = torres_parts(w);
    try {
        return canonicalize(exact_divide(parts.det, parts.divisor));
    } catch (const NotDivisible&) {
        throw DivisibilityFailure("Torres quotient not exact for det(I - B) = " +
                                  to_string(parts.det) + ", divisor " +
                                  to_string(parts.divisor));
    }
}

}  // namespace

LaurentPoly axis_link_polynomial(const BraidWord& w) {
    PolyMatrix b = substitute(coloured_burau(w).matrix, identification_map(permutation_of(w)));
    return canonicalize(determinant(axis_char_matrix(b)));
}

LaurentPoly alexander_invariant(const BraidWord& w) { return torres_quotient(w); }

LaurentPoly alexander_polynomial(const BraidWord& w) { return torres_quotient(w); }

LinkInvariantReport full_report(const BraidWord& w) {
    LinkInvariantReport report;
    report.strands = w.strands;
    report.word = w;
    auto cycles = components_of(permutation_of(w));
    report.components = static_cast<int>(cycles.size());
    for (const auto& cycle : cycles) report.variables.push_back(VarId::t(cycle.front()).name());
    report.variables.push_back(VarId::axis().name());
    report.with_axis = axis_link_polynomial(w);
    report.invariant = alexander_invariant(w);
    report.alexander = alexander_polynomial(w);
    return report;
}

}  // namespace braidalex
